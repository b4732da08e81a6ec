#include "covseq/twod.hpp"

#include "covseq/construct.hpp"
#include "covseq/verify.hpp"

namespace covseq {
namespace {

void require_seed(const CyclicSequence& s, int n, int radius) {
  if (!is_covering_sequence(s, n, radius).covering())
    throw std::invalid_argument("invalid-seed: sequence is not an (" +
                                std::to_string(n) + "," + std::to_string(radius) +
                                ")-CS");
}

}  // namespace

TorusArray fold(const CyclicSequence& s, int m, int n, int radius) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
  require_seed(s, m * n, radius);
  size_t k = s.length();
  size_t eps = (n - static_cast<int>(k % static_cast<size_t>(n))) % static_cast<size_t>(n);
  // extend by the seed's own first eps symbols to reach divisibility
  std::string t = s.to_string();
  for (size_t i = 0; i < eps; ++i) t.push_back(t[i]);
  size_t rows = t.size() / static_cast<size_t>(n);
  TorusArray out(rows, static_cast<size_t>(2 * n - 1));
  for (size_t j = 0; j < rows; ++j)
    for (int i = 0; i < 2 * n - 1; ++i)
      out.set_bit(j, static_cast<size_t>(i),
                  t[(j * static_cast<size_t>(n) + static_cast<size_t>(i)) % t.size()] == '1');
  return out;
}

TorusArray triangular_shift_array(const CyclicSequence& s, int n, int radius) {
  require_seed(s, n, radius);
  size_t k = s.length();
  size_t rows = (k % 2 == 0) ? k + 1 : k;
  TorusArray out(rows, k);
  for (size_t i = 0; i < k; ++i) {
    CyclicSequence r = s.rotate(static_cast<long long>((i * (i + 1) / 2) % k));
    for (size_t c = 0; c < k; ++c) out.set_bit(i, c, r.bit(c));
  }
  if (k % 2 == 0)  // duplicated row fixes the even-k wraparound shift sum
    for (size_t c = 0; c < k; ++c) out.set_bit(k, c, out.bit(k - 1, c));
  return out;
}

TorusArray debruijn_shift_array(const CyclicSequence& s, int n, int radius, int m) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  require_seed(s, n, radius);
  size_t k = s.length();
  double rows_d = 1;
  for (int i = 0; i < m - 1; ++i) rows_d *= static_cast<double>(k);
  if (rows_d > double{1 << 20})
    throw ResourceLimitError("k^{m-1} exceeds 2^20");
  auto t = debruijn(static_cast<int>(k), m - 1);
  size_t rows = t.size();
  TorusArray out(rows, k);
  size_t shift = 0;
  for (size_t i = 0; i < rows; ++i) {
    if (i > 0) shift = (shift + static_cast<size_t>(t[i - 1])) % k;
    for (size_t c = 0; c < k; ++c) out.set_bit(i, c, s.bit(c + shift));
  }
  // wraparound consistency: the total shift must return to zero whenever
  // the schedule guarantees it (m >= 3, or odd seed length)
  size_t total = (shift + static_cast<size_t>(t[rows - 1])) % k;
  if ((m >= 3 || k % 2 == 1) && total != 0)
    throw std::logic_error("shift schedule failed to close the torus");
  return out;
}

}  // namespace covseq
