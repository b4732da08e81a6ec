#include "covseq/core.hpp"

#include <algorithm>
#include <bit>

namespace covseq {

BinaryWord::BinaryWord(uint32_t bits_, int length_) : bits(bits_), length(length_) {
  if (length_ < 1 || length_ > 32)
    throw std::invalid_argument("unsupported-window-width: word length must be in [1,32]");
  if (length_ < 32 && bits_ >= (uint32_t{1} << length_))
    throw std::invalid_argument("word value exceeds 2^length");
}

BinaryWord BinaryWord::from_string(std::string_view s) {
  if (s.empty() || s.size() > 32)
    throw std::invalid_argument("unsupported-window-width: word length must be in [1,32]");
  uint32_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("word must be over {0,1}");
    v = (v << 1) | static_cast<uint32_t>(c - '0');
  }
  return BinaryWord{v, static_cast<int>(s.size())};
}

std::string BinaryWord::to_string() const {
  std::string s(static_cast<size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if ((bits >> (length - 1 - i)) & 1u) s[static_cast<size_t>(i)] = '1';
  return s;
}

int hamming_distance(const BinaryWord& a, const BinaryWord& b) {
  if (a.length != b.length)
    throw std::invalid_argument("dimension-error: words of unequal length");
  return std::popcount(a.bits ^ b.bits);
}

uint64_t ball_volume(int q, int n, int radius) {
  if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (radius < 0 || radius > n) throw std::invalid_argument("invalid-radius");
  uint64_t total = 0;
  for (int i = 0; i <= radius; ++i) {
    uint64_t binom = 1;
    for (int j = 1; j <= i; ++j) binom = binom * static_cast<uint64_t>(n - j + 1) / static_cast<uint64_t>(j);
    uint64_t pw = 1;
    for (int j = 0; j < i; ++j) pw *= static_cast<uint64_t>(q - 1);
    total += binom * pw;
  }
  return total;
}

CyclicSequence::CyclicSequence(size_t length)
    : words_((length + 63) / 64, 0), len_(length) {
  if (length == 0) throw std::invalid_argument("cyclic sequence must have length >= 1");
}

CyclicSequence CyclicSequence::from_string(std::string_view s) {
  CyclicSequence out(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("sequence must be over {0,1}");
    if (s[i] == '1') out.set_bit(i, 1);
  }
  return out;
}

void CyclicSequence::set_bit(size_t i, int v) {
  size_t p = i % len_;
  uint64_t m = uint64_t{1} << (p & 63);
  if (v)
    words_[p >> 6] |= m;
  else
    words_[p >> 6] &= ~m;
}

CyclicSequence CyclicSequence::rotate(long long j) const {
  long long k = static_cast<long long>(len_);
  size_t off = static_cast<size_t>(((j % k) + k) % k);
  CyclicSequence out(len_);
  for (size_t i = 0; i < len_; ++i)
    if (bit(i + off)) out.set_bit(i, 1);
  return out;
}

CyclicSequence CyclicSequence::complement() const {
  CyclicSequence out(len_);
  for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  // clear padding past the end
  size_t tail = len_ & 63;
  if (tail) out.words_.back() &= (uint64_t{1} << tail) - 1;
  return out;
}

size_t CyclicSequence::minimal_period() const {
  for (size_t d = 1; d <= len_; ++d) {
    if (len_ % d != 0) continue;
    bool ok = true;
    for (size_t i = 0; ok && i + d < len_; ++i)
      if (bit(i) != bit(i + d)) ok = false;
    if (ok) return d;
  }
  return len_;
}

CyclicSequence CyclicSequence::canonical_rotation() const {
  // lexicographically least rotation; k^2 scan is fine at corpus sizes
  size_t best = 0;
  for (size_t cand = 1; cand < len_; ++cand) {
    for (size_t i = 0; i < len_; ++i) {
      int a = bit(cand + i), b = bit(best + i);
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  return rotate(static_cast<long long>(best));
}

std::vector<uint32_t> CyclicSequence::windows(int n) const {
  if (n < 1 || n > 32)
    throw std::invalid_argument("unsupported-window-width: n must be in [1,32]");
  std::vector<uint32_t> out;
  out.reserve(len_);
  uint64_t w = 0;
  const uint64_t mask = (n == 32) ? 0xffffffffull : ((uint64_t{1} << n) - 1);
  for (int i = 0; i < n - 1; ++i) w = (w << 1) | static_cast<uint64_t>(bit(static_cast<size_t>(i)));
  for (size_t i = 0; i < len_; ++i) {
    w = ((w << 1) | static_cast<uint64_t>(bit(i + static_cast<size_t>(n) - 1))) & mask;
    out.push_back(static_cast<uint32_t>(w));
  }
  return out;
}

BinaryWord CyclicSequence::window_at(size_t start, int n) const {
  if (n < 1 || n > 32)
    throw std::invalid_argument("unsupported-window-width: n must be in [1,32]");
  uint32_t w = 0;
  for (int i = 0; i < n; ++i)
    w = (w << 1) | static_cast<uint32_t>(bit(start + static_cast<size_t>(i)));
  return BinaryWord{w, n};
}

void CyclicSequence::append(const CyclicSequence& other) {
  size_t old = len_;
  len_ += other.length();
  words_.resize((len_ + 63) / 64, 0);
  for (size_t i = 0; i < other.length(); ++i)
    if (other.bit(i)) set_bit(old + i, 1);
}

void CyclicSequence::append_bit(int v) {
  ++len_;
  words_.resize((len_ + 63) / 64, 0);
  set_bit(len_ - 1, v);
}

std::string CyclicSequence::to_string() const {
  std::string s(len_, '0');
  for (size_t i = 0; i < len_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

TorusArray::TorusArray(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((rows * cols + 63) / 64, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("torus array must be nonempty");
}

TorusArray TorusArray::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("torus array must be nonempty");
  TorusArray out(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != out.cols_)
      throw std::invalid_argument("ragged torus array rows");
    for (size_t c = 0; c < out.cols_; ++c) {
      if (rows[r][c] != '0' && rows[r][c] != '1')
        throw std::invalid_argument("array must be over {0,1}");
      if (rows[r][c] == '1') out.set_bit(r, c, 1);
    }
  }
  return out;
}

void TorusArray::set_bit(size_t r, size_t c, int v) {
  size_t p = (r % rows_) * cols_ + (c % cols_);
  uint64_t m = uint64_t{1} << (p & 63);
  if (v)
    words_[p >> 6] |= m;
  else
    words_[p >> 6] &= ~m;
}

uint32_t TorusArray::window_word(size_t r, size_t c, int m, int n) const {
  if (m < 1 || n < 1 || m * n > 32)
    throw std::invalid_argument("unsupported-window-width: m*n must be in [1,32]");
  uint32_t w = 0;
  for (int dr = 0; dr < m; ++dr)
    for (int dc = 0; dc < n; ++dc)
      w = (w << 1) | static_cast<uint32_t>(bit(r + static_cast<size_t>(dr), c + static_cast<size_t>(dc)));
  return w;
}

std::vector<std::string> TorusArray::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (bit(r, c)) out[r][c] = '1';
  return out;
}

}  // namespace covseq
