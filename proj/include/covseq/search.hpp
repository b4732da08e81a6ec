#pragma once

#include "covseq/core.hpp"

namespace covseq {

struct SearchConfig {
  int n = 0;
  int radius = 0;
  size_t target_length = 0;  // 0: best effort (shrink from the fallback)
  uint64_t budget = 200000;  // score evaluations
  uint64_t rng_seed = 0;
};

struct SearchResult {
  CyclicSequence sequence;
  bool reached_target = false;
  uint64_t evaluations = 0;
};

/// Hill climbing with random restarts over fixed-length bit cycles, scored by
/// uncovered-word count. Always returns a valid (n,R)-CS: if the budget
/// exhausts, falls back to the de Bruijn sequence of span n.
/// Deterministic for a fixed config.
SearchResult search_cs(const SearchConfig& cfg);

}  // namespace covseq
