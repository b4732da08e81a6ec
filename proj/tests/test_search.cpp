#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "covseq/search.hpp"
#include "covseq/verify.hpp"
#include "doctest.h"

using namespace covseq;

TEST_CASE("search always returns a valid covering sequence") {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.radius = 1;
  cfg.budget = 20000;
  cfg.rng_seed = 1;
  SearchResult res = search_cs(cfg);
  CHECK(is_covering_sequence(res.sequence, 6, 1).covering());
  CHECK(res.sequence.length() <= 64);  // never worse than the fallback
  CHECK(res.sequence.length() >= sphere_covering_bound(6, 1));
}

TEST_CASE("search is deterministic for a fixed config") {
  SearchConfig cfg;
  cfg.n = 5;
  cfg.radius = 1;
  cfg.budget = 5000;
  cfg.rng_seed = 99;
  CHECK(search_cs(cfg).sequence == search_cs(cfg).sequence);
  cfg.rng_seed = 100;
  SearchResult other = search_cs(cfg);
  CHECK(is_covering_sequence(other.sequence, 5, 1).covering());
}

TEST_CASE("fixed-target search can hit the sphere-covering bound") {
  // "01" is a (3,1)-CS of length 2, the counting optimum
  SearchConfig cfg;
  cfg.n = 3;
  cfg.radius = 1;
  cfg.target_length = 2;
  cfg.budget = 5000;
  cfg.rng_seed = 7;
  SearchResult res = search_cs(cfg);
  CHECK(res.reached_target);
  CHECK(res.sequence.length() == 2);
  CHECK(is_covering_sequence(res.sequence, 3, 1).covering());
}

TEST_CASE("failed target search falls back to a valid sequence") {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.radius = 1;
  cfg.target_length = 4;  // the counting bound, but no length-4 (4,1)-CS exists
  cfg.budget = 3000;
  cfg.rng_seed = 3;
  SearchResult res = search_cs(cfg);
  if (!res.reached_target) {
    CHECK(res.sequence.length() == 16);  // de Bruijn fallback
  }
  CHECK(is_covering_sequence(res.sequence, 4, 1).covering());
}

TEST_CASE("search at radius zero returns the optimal de Bruijn fallback") {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.radius = 0;
  cfg.budget = 1000;
  cfg.rng_seed = 1;
  SearchResult res = search_cs(cfg);
  CHECK(res.sequence.length() == 16);
  CHECK(is_covering_sequence(res.sequence, 4, 0).covering());
}

TEST_CASE("search parameter validation") {
  SearchConfig cfg;
  cfg.n = 13;
  cfg.radius = 1;
  CHECK_THROWS_AS(search_cs(cfg), std::invalid_argument);
  cfg.n = 6;
  cfg.radius = 1;
  cfg.target_length = 3;  // below the sphere-covering bound of 10
  CHECK_THROWS_AS(search_cs(cfg), std::invalid_argument);
}
