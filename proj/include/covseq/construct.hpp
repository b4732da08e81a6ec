#pragma once

#include <optional>
#include <utility>

#include "covseq/core.hpp"

namespace covseq {

/// Polynomial over GF(2); bit i of coeffs is c_i of c(x) = sum c_i x^i.
struct Gf2Poly {
  uint32_t coeffs = 0;
  int degree = 0;

  Gf2Poly() = default;
  Gf2Poly(uint32_t coeffs_, int degree_);

  int coeff(int i) const { return static_cast<int>((coeffs >> i) & 1u); }
  std::string to_string() const;  // e.g. "x^7+x^6+1"
  bool operator==(const Gf2Poly&) const = default;
};

/// LFSR over GF(2): a_k = sum_{i=1}^{n} c_i a_{k-i} + offset.
/// offset = 0 gives the M-sequence recursion, offset = 1 its complement.
class LfsrStream {
 public:
  LfsrStream(const Gf2Poly& poly, int offset);

  int next();  // emits the stream one bit at a time
  /// One full period (2^n - 1 bits) from the canonical 0...01 start state.
  CyclicSequence period();

 private:
  Gf2Poly poly_;
  int offset_;
  uint32_t state_;  // s_0 at bit n-1 down to s_{n-1} at bit 0
};

/// Self-dual covering sequence code: every codeword has the form [X ~X].
struct SelfDualCode {
  int half_length = 0;  // n, a power of two
  std::vector<CyclicSequence> codewords;
  std::vector<std::pair<int, int>> pairing;  // halves differ in last coordinate
};

/// Lexicographically least de Bruijn sequence of the given span over
/// {0, ..., q-1}, by Lyndon-word concatenation.
std::vector<int> debruijn(int q, int span);
CyclicSequence debruijn_binary(int span);

/// Cyclic Hamming code of length 2^k - 1 as a covering sequence code:
/// one minimal-period representative per cyclic equivalence class.
SequenceCode hamming_csc(int k);

SelfDualCode selfdual_base();
SelfDualCode selfdual_step(const SelfDualCode& c);

/// [X ~X] + [X' ~X'] -> [X ~X X' ~X'] where X, X' differ in the last
/// coordinate only; the result's 2L-window set contains both inputs'.
CyclicSequence combine_pair(const CyclicSequence& a, const CyclicSequence& b);

/// s_{2i} = a_{i mod k1}, s_{2i+1} = b_{i mod k2}; length 2*k1*k2.
/// An (n1+n2, R1+R2)-CS whenever a, b are (n1,R1)- and (n2,R2)-CS,
/// gcd(k1,k2) = 1 and n1 = n2 or n1 = n2 + 1.
CyclicSequence interleave(const CyclicSequence& a, const CyclicSequence& b,
                          int n1, int n2, int r1, int r2);

/// Self-interleaving around a run of n-1 fill symbols; length k(k+1) for
/// even k, (k+1)^2 for odd k; a (2n,2R)-CS when a is an (n,R)-CS.
CyclicSequence square_interleave(const CyclicSequence& a, int n, int fill);

/// True iff the LFSR of p has period exactly 2^n - 1 (direct measurement).
bool is_primitive(const Gf2Poly& p);

/// Least (by ascending coefficient string c_0 c_1 ... c_n) primitive
/// polynomial of degree n with c_1 = ... = c_{2R+1} = 0, if any.
std::optional<Gf2Poly> find_sparse_primitive(int n, int radius);

/// M-sequence + complement, each closed against the constant sequence at its
/// run of n-1 equal symbols: an (n+2R+1, R)-CS of length 2^{n+1}+2n+8R+2.
CyclicSequence primitive_cs(int n, int radius, const Gf2Poly& p);

}  // namespace covseq
