#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <random>

#include "covseq/construct.hpp"
#include "covseq/core.hpp"
#include "covseq/verify.hpp"
#include "doctest.h"

using namespace covseq;

namespace {

const char* kCs81 = "00011011111001000001101011100101";

CyclicSequence random_seq(std::mt19937& rng, size_t k) {
  CyclicSequence s(k);
  for (size_t i = 0; i < k; ++i) s.set_bit(i, static_cast<int>(rng() & 1));
  return s;
}

// direct per-word nearest-window scan
bool naive_covering(const CyclicSequence& s, int n, int r) {
  auto ws = s.windows(n);
  for (uint32_t w = 0; w < (uint32_t{1} << n); ++w) {
    bool hit = false;
    for (uint32_t x : ws)
      if (__builtin_popcount(w ^ x) <= r) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("coverage of the 32-bit (8,1) sequence") {
  auto rep = is_covering_sequence(CyclicSequence::from_string(kCs81), 8, 1);
  CHECK(rep.space_size == 256);
  CHECK(rep.covered_count == 256);
  CHECK(rep.covering());
  CHECK(rep.uncovered.empty());
}

TEST_CASE("radius n covers everything from a single word") {
  auto rep = is_covering_sequence(CyclicSequence::from_string("0"), 3, 3);
  CHECK(rep.covering());
}

TEST_CASE("uncovered witnesses") {
  auto rep = is_covering_sequence(CyclicSequence::from_string("10"), 2, 0);
  CHECK(rep.space_size == 4);
  CHECK(rep.covered_count == 2);
  CHECK_FALSE(rep.covering());
  REQUIRE(rep.uncovered.size() == 2);
  CHECK(rep.uncovered[0].to_string() == "00");
  CHECK(rep.uncovered[1].to_string() == "11");
  CHECK(rep.uncovered_total == 2);
}

TEST_CASE("witness list truncates at 100 with exact total") {
  auto rep = is_covering_sequence(CyclicSequence::from_string("0"), 10, 0);
  CHECK(rep.covered_count == 1);
  CHECK(rep.uncovered.size() == 100);
  CHECK(rep.uncovered_total == 1023);
}

TEST_CASE("coverage over a sequence code") {
  SequenceCode code;
  code.n = 2;
  code.radius = 0;
  code.codewords.push_back(CyclicSequence::from_string("10"));
  code.codewords.push_back(CyclicSequence::from_string("00"));
  code.codewords.push_back(CyclicSequence::from_string("11"));
  CHECK(coverage(code).covering());
}

TEST_CASE("covering radius") {
  CHECK(covering_radius(debruijn_binary(9), 9) == 0);
  CHECK(covering_radius(CyclicSequence::from_string(kCs81), 8) == 1);
  CHECK(covering_radius(CyclicSequence::from_string("0"), 7) == 7);
}

TEST_CASE("covering radius agrees with a linear scan over R") {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    int n = 3 + static_cast<int>(rng() % 10);  // up to 12
    size_t k = 2 + rng() % 40;
    CyclicSequence s = random_seq(rng, k);
    int r = covering_radius(s, n);
    int scan = 0;
    while (!is_covering_sequence(s, n, scan).covering()) ++scan;
    CHECK(r == scan);
  }
}

TEST_CASE("monotonicity in the radius") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    CyclicSequence s = random_seq(rng, 10 + rng() % 30);
    int n = 4 + static_cast<int>(rng() % 5);
    for (int r = 0; r < n; ++r)
      if (is_covering_sequence(s, n, r).covering())
        CHECK(is_covering_sequence(s, n, r + 1).covering());
  }
}

TEST_CASE("rotation invariance of the verdict") {
  std::mt19937 rng(17);
  CyclicSequence s = CyclicSequence::from_string(kCs81);
  auto base = is_covering_sequence(s, 8, 1).covering();
  for (int t = 0; t < 8; ++t) {
    long long j = static_cast<long long>(rng() % s.length());
    CHECK(is_covering_sequence(s.rotate(j), 8, 1).covering() == base);
  }
}

TEST_CASE("ball marking agrees with the naive oracle") {
  std::mt19937 rng(29);
  for (int t = 0; t < 300; ++t) {
    int n = 3 + static_cast<int>(rng() % 8);  // up to 10
    int r = static_cast<int>(rng() % 3);
    CyclicSequence s = random_seq(rng, 4 + rng() % 50);
    CHECK(is_covering_sequence(s, n, r).covering() == naive_covering(s, n, r));
  }
}

TEST_CASE("torus coverage") {
  // 1x2 array "10" at (1 x 2, 0): only two windows
  TorusArray a = TorusArray::from_rows({"10"});
  auto rep = is_c2ds(a, 1, 2, 0);
  CHECK(rep.covered_count == 2);
  CHECK_FALSE(rep.covering());
  CHECK(is_c2ds(a, 1, 2, 1).covering());
  CHECK_THROWS_AS(is_c2ds(a, 6, 6, 1), ResourceLimitError);
}

TEST_CASE("sphere covering bound") {
  CHECK(sphere_covering_bound(8, 1) == 29);
  CHECK(sphere_covering_bound(12, 12) == 1);
  CHECK(sphere_covering_bound(16, 1) == 3856);
  CHECK(sphere_covering_bound(9, 1) == 52);
}

TEST_CASE("width cap raises a resource error and honors the override") {
  CyclicSequence s = CyclicSequence::from_string("0110");
  CHECK_THROWS_AS(is_covering_sequence(s, 29, 1), ResourceLimitError);
  setenv("COVSEQ_MAX_N", "12", 1);
  CHECK(max_verify_width() == 12);
  CHECK_THROWS_AS(is_covering_sequence(s, 13, 1), ResourceLimitError);
  unsetenv("COVSEQ_MAX_N");
  CHECK(max_verify_width() == 28);
}

TEST_CASE("invalid radius is rejected") {
  CyclicSequence s = CyclicSequence::from_string("0110");
  CHECK_THROWS_AS(is_covering_sequence(s, 4, -1), std::invalid_argument);
  CHECK_THROWS_AS(is_covering_sequence(s, 4, 5), std::invalid_argument);
}
