#pragma once

#include "covseq/core.hpp"

namespace covseq {

/// One embedded reference object: a covering sequence, a sequence code, or
/// a torus array, bit-exact, with its claimed parameters.
struct CorpusEntry {
  std::string id;
  std::string kind;  // "cs", "csc", or "c2ds"
  int n = 0;
  int radius = 0;
  int m = 0;                 // c2ds window height; 0 for 1D entries
  uint64_t claimed_length = 0;  // sequence length, or rows*cols for c2ds
  std::vector<std::string> payload;   // sequences, codewords, or array rows
  std::vector<std::string> extended;  // acyclic extension rows, when published
  std::vector<int> overlaps;          // per-row join overlaps, when published
  std::string provenance;
};

/// Published length bounds for the shortest (n,R)-CS, with source tag a-h.
struct BoundsEntry {
  int n = 0;
  int radius = 0;
  uint64_t lower = 0;
  uint64_t upper = 0;
  char source_tag = '?';
};

const std::vector<CorpusEntry>& corpus_entries();
const CorpusEntry* find_entry(const std::string& id);
const std::vector<BoundsEntry>& bounds_table();
const BoundsEntry* find_bounds(int n, int radius);

struct CorpusVerdict {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// Re-verifies every entry at its claimed parameters and length.
std::vector<CorpusVerdict> verify_corpus();

}  // namespace covseq
