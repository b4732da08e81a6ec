#include "covseq/verify.hpp"

#include <bit>
#include <cstdlib>

namespace covseq {
namespace {

int env_max_width() {
  if (const char* v = std::getenv("COVSEQ_MAX_N")) {
    int n = std::atoi(v);
    if (n >= 1 && n <= 32) return n;
  }
  return 28;
}

// Bit table over the n-cube: bit w set <=> word w is covered.
class CubeTable {
 public:
  explicit CubeTable(int n)
      : n_(n), words_(n >= 6 ? (size_t{1} << (n - 6)) : 1, 0) {}

  void set(uint32_t w) { words_[w >> 6] |= uint64_t{1} << (w & 63); }
  bool test(uint32_t w) const {
    return (words_[w >> 6] >> (w & 63)) & 1u;
  }

  uint64_t count() const {
    uint64_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint64_t>(std::popcount(w));
    if (n_ < 6) {
      // only the low 2^n bits are meaningful
      uint64_t m = (uint64_t{1} << (1 << n_)) - 1;
      c = static_cast<uint64_t>(std::popcount(words_[0] & m));
    }
    return c;
  }

  bool full() const { return count() == (uint64_t{1} << n_); }

  // One Hamming-ball expansion: every word adjacent to a covered word
  // becomes covered. Each dimension must read the pre-round snapshot,
  // otherwise the round would cover the whole subcube.
  void dilate() {
    static constexpr uint64_t kMask[6] = {
        0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull};
    std::vector<uint64_t> in = words_;
    int inword = n_ < 6 ? n_ : 6;
    for (int j = 0; j < inword; ++j) {
      int step = 1 << j;
      for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = in[i];
        words_[i] |= ((w & kMask[j]) >> step) | ((w & ~kMask[j]) << step);
      }
    }
    for (int j = 6; j < n_; ++j) {
      size_t step = size_t{1} << (j - 6);
      for (size_t i = 0; i < words_.size(); ++i) words_[i] |= in[i ^ step];
    }
  }

  int n_;
  std::vector<uint64_t> words_;
};

void check_width(int n) {
  if (n < 1) throw std::invalid_argument("window width must be >= 1");
  int cap = env_max_width();
  if (n > cap)
    throw ResourceLimitError("verification table for n=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap) +
                             " (set COVSEQ_MAX_N to raise)");
}

CoverageReport report_from(const CubeTable& t, int n, int computed_radius) {
  CoverageReport rep;
  rep.space_size = uint64_t{1} << n;
  rep.covered_count = t.count();
  rep.computed_radius = computed_radius;
  if (!rep.covering()) {
    rep.uncovered_total = rep.space_size - rep.covered_count;
    for (uint64_t w = 0; w < rep.space_size; ++w) {
      if (!t.test(static_cast<uint32_t>(w))) {
        rep.uncovered.emplace_back(static_cast<uint32_t>(w), n);
        if (rep.uncovered.size() >= CoverageReport::kMaxWitnesses) break;
      }
    }
  }
  return rep;
}

CoverageReport coverage_of_windows(const std::vector<uint32_t>& ws, int n,
                                   int radius) {
  if (radius < 0 || radius > n) throw std::invalid_argument("invalid-radius");
  CubeTable t(n);
  for (uint32_t w : ws) t.set(w);
  for (int r = 0; r < radius; ++r) t.dilate();
  return report_from(t, n, -1);
}

}  // namespace

int max_verify_width() { return env_max_width(); }

CoverageReport coverage(const SequenceCode& code) {
  check_width(code.n);
  std::vector<uint32_t> ws;
  for (const auto& cw : code.codewords) {
    auto w = cw.windows(code.n);
    ws.insert(ws.end(), w.begin(), w.end());
  }
  return coverage_of_windows(ws, code.n, code.radius);
}

CoverageReport is_covering_sequence(const CyclicSequence& s, int n, int radius) {
  check_width(n);
  return coverage_of_windows(s.windows(n), n, radius);
}

int covering_radius(const CyclicSequence& s, int n) {
  check_width(n);
  CubeTable t(n);
  for (uint32_t w : s.windows(n)) t.set(w);
  int r = 0;
  while (!t.full()) {
    t.dilate();
    ++r;
  }
  return r;
}

CoverageReport is_c2ds(const TorusArray& a, int m, int n, int radius) {
  int mn = m * n;
  check_width(mn);
  if (radius < 0 || radius > mn) throw std::invalid_argument("invalid-radius");
  CubeTable t(mn);
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) t.set(a.window_word(r, c, m, n));
  for (int r = 0; r < radius; ++r) t.dilate();
  return report_from(t, mn, -1);
}

uint64_t sphere_covering_bound(int n, int radius) {
  uint64_t v = ball_volume(2, n, radius);
  uint64_t space = uint64_t{1} << n;
  return (space + v - 1) / v;
}

}  // namespace covseq
