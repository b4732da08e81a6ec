#include "covseq/search.hpp"

#include <random>

#include "covseq/construct.hpp"
#include "covseq/verify.hpp"

namespace covseq {
namespace {

uint64_t uncovered_count(const CyclicSequence& s, int n, int radius) {
  auto rep = is_covering_sequence(s, n, radius);
  return rep.space_size - rep.covered_count;
}

// Hill climb at a fixed cycle length; returns true when fully covering.
bool climb(CyclicSequence& s, int n, int radius, uint64_t budget,
           std::mt19937_64& rng, uint64_t& evals) {
  size_t k = s.length();
  uint64_t score = uncovered_count(s, n, radius);
  ++evals;
  std::uniform_int_distribution<size_t> pick(0, k - 1);
  for (uint64_t it = 0; it < budget && score > 0; ++it) {
    size_t p = pick(rng);
    s.set_bit(p, 1 - s.bit(p));
    uint64_t ns = uncovered_count(s, n, radius);
    ++evals;
    if (ns <= score)
      score = ns;  // accept sideways moves to escape plateaus
    else
      s.set_bit(p, 1 - s.bit(p));
  }
  return score == 0;
}

}  // namespace

SearchResult search_cs(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 12)
    throw std::invalid_argument("search supports n in [1,12]");
  if (cfg.radius < 0 || cfg.radius > cfg.n)
    throw std::invalid_argument("invalid-radius");
  uint64_t lower = sphere_covering_bound(cfg.n, cfg.radius);
  size_t target = cfg.target_length ? cfg.target_length : 0;
  if (target && target < lower)
    throw std::invalid_argument("target below the sphere-covering bound");

  std::mt19937_64 rng(cfg.rng_seed);
  SearchResult res;
  res.sequence = debruijn_binary(cfg.n);  // fallback, always valid

  if (target) {
    // fixed-length search with restarts
    uint64_t per_restart = std::max<uint64_t>(cfg.budget / 8, 1);
    uint64_t used = 0;
    while (used < cfg.budget) {
      CyclicSequence cand(target);
      for (size_t i = 0; i < target; ++i)
        cand.set_bit(i, static_cast<int>(rng() & 1));
      uint64_t before = res.evaluations;
      bool ok = climb(cand, cfg.n, cfg.radius, per_restart, rng, res.evaluations);
      used += res.evaluations - before;
      if (ok) {
        res.sequence = cand;
        res.reached_target = true;
        break;
      }
    }
    return res;
  }

  // best effort: shrink a valid cycle one symbol at a time
  CyclicSequence cur = res.sequence;
  while (cur.length() > lower && res.evaluations < cfg.budget) {
    size_t k = cur.length() - 1;
    std::uniform_int_distribution<size_t> drop(0, cur.length() - 1);
    size_t cut = drop(rng);
    CyclicSequence cand(k);
    for (size_t i = 0, j = 0; i < cur.length(); ++i) {
      if (i == cut) continue;
      cand.set_bit(j++, cur.bit(i));
    }
    uint64_t sub = std::max<uint64_t>((cfg.budget - res.evaluations) / 8, 1);
    if (climb(cand, cfg.n, cfg.radius, sub, rng, res.evaluations))
      cur = cand;
    else
      break;  // could not repair the shorter cycle; keep the last valid one
  }
  res.sequence = cur;
  res.reached_target = target == 0;
  return res;
}

}  // namespace covseq
