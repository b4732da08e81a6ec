#pragma once

#include "covseq/core.hpp"

namespace covseq {

/// Verdict of an exhaustive coverage check over the n-cube (or mn-cube).
struct CoverageReport {
  uint64_t space_size = 0;
  uint64_t covered_count = 0;
  std::vector<BinaryWord> uncovered;  // truncated at kMaxWitnesses
  uint64_t uncovered_total = 0;
  int computed_radius = -1;  // filled only when radius computation requested

  static constexpr size_t kMaxWitnesses = 100;

  bool covering() const { return covered_count == space_size; }
};

/// Largest window width the exhaustive oracles accept (table of 2^n bits).
/// Defaults to 28; the COVSEQ_MAX_N environment variable may raise it up to 32.
int max_verify_width();

/// Marks the radius-R ball of every window of every codeword in a bit table
/// and reports coverage of the whole n-cube.
CoverageReport coverage(const SequenceCode& code);

CoverageReport is_covering_sequence(const CyclicSequence& s, int n, int radius);

/// Smallest R' for which s is an (n,R')-covering sequence, by repeated
/// dilation of the window set over the n-cube.
int covering_radius(const CyclicSequence& s, int n);

/// Flattens every toroidal m x n window of `a` row-major and checks radius-R
/// coverage of all 2^{mn} words.
CoverageReport is_c2ds(const TorusArray& a, int m, int n, int radius);

/// ceil(2^n / V_2(n,R)), the counting lower bound on covering-sequence length.
uint64_t sphere_covering_bound(int n, int radius);

}  // namespace covseq
