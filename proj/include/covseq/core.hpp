#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace covseq {

/// Thrown when a request would exceed the configured table/size caps.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width binary word of length <= 32.
/// Position 0 of the window is the most significant bit of the printed
/// string, i.e. value("00011011") == 0x1b with length 8.
struct BinaryWord {
  uint32_t bits = 0;
  int length = 0;

  BinaryWord() = default;
  BinaryWord(uint32_t bits_, int length_);
  static BinaryWord from_string(std::string_view s);

  std::string to_string() const;
  bool operator==(const BinaryWord&) const = default;
};

int hamming_distance(const BinaryWord& a, const BinaryWord& b);

/// V_q(n,R) = sum_{i=0}^{R} C(n,i) (q-1)^i, exact.
uint64_t ball_volume(int q, int n, int radius);

/// Bit-packed cyclic binary sequence. Indexing is modulo the length.
/// Immutable after construction except through named builders.
class CyclicSequence {
 public:
  CyclicSequence() = default;
  explicit CyclicSequence(size_t length);  // all-zero
  static CyclicSequence from_string(std::string_view s);

  size_t length() const { return len_; }
  bool empty() const { return len_ == 0; }

  int bit(size_t i) const {  // cyclic
    size_t p = i % len_;
    return static_cast<int>((words_[p >> 6] >> (p & 63)) & 1u);
  }
  void set_bit(size_t i, int v);

  CyclicSequence rotate(long long j) const;          // left rotation by j
  CyclicSequence complement() const;
  CyclicSequence canonical_rotation() const;          // lexicographically least
  size_t minimal_period() const;

  /// All k cyclic n-windows in start-position order (duplicates preserved).
  std::vector<uint32_t> windows(int n) const;
  BinaryWord window_at(size_t start, int n) const;

  /// Appends bits of `other` (used by constructions).
  void append(const CyclicSequence& other);
  void append_bit(int v);

  std::string to_string() const;
  bool operator==(const CyclicSequence& o) const {
    return len_ == o.len_ && words_ == o.words_;
  }

 private:
  std::vector<uint64_t> words_;
  size_t len_ = 0;
};

/// A labeled set of cyclic sequences with target covering parameters.
struct SequenceCode {
  int n = 0;       // window length
  int radius = 0;  // target covering radius R
  std::vector<CyclicSequence> codewords;
};

/// Doubly-periodic M x N bit matrix (torus), row-major bit packing.
class TorusArray {
 public:
  TorusArray() = default;
  TorusArray(size_t rows, size_t cols);
  static TorusArray from_rows(const std::vector<std::string>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  int bit(size_t r, size_t c) const {  // toroidal
    size_t p = (r % rows_) * cols_ + (c % cols_);
    return static_cast<int>((words_[p >> 6] >> (p & 63)) & 1u);
  }
  void set_bit(size_t r, size_t c, int v);

  /// m x n window at (r,c), flattened row-major into a word of length m*n.
  uint32_t window_word(size_t r, size_t c, int m, int n) const;

  std::vector<std::string> to_rows() const;
  bool operator==(const TorusArray& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace covseq
