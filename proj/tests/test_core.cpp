#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "covseq/core.hpp"
#include "doctest.h"

using namespace covseq;

TEST_CASE("binary word round trip and bit order") {
  BinaryWord w = BinaryWord::from_string("00011011");
  CHECK(w.bits == 0x1b);
  CHECK(w.length == 8);
  CHECK(w.to_string() == "00011011");
  CHECK_THROWS_AS(BinaryWord(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::from_string(std::string(33, '0')), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::from_string("01x"), std::invalid_argument);
}

TEST_CASE("rotate") {
  CyclicSequence s = CyclicSequence::from_string("000100111011");
  CHECK(s.rotate(1).to_string() == "001001110110");
  CHECK(s.rotate(3).to_string() == "100111011000");
  CHECK(s.rotate(0) == s);
  CHECK(s.rotate(static_cast<long long>(s.length())) == s);
  CHECK(s.rotate(-1) == s.rotate(static_cast<long long>(s.length()) - 1));
}

TEST_CASE("complement") {
  CHECK(CyclicSequence::from_string("00011011").complement().to_string() == "11100100");
  CHECK(CyclicSequence::from_string("0").complement().to_string() == "1");
  CyclicSequence s = CyclicSequence::from_string("0111010001");
  CHECK(s.complement().complement() == s);
}

TEST_CASE("minimal period") {
  CHECK(CyclicSequence::from_string("1000010000").minimal_period() == 5);
  CHECK(CyclicSequence::from_string("1010101010").minimal_period() == 2);
  CHECK(CyclicSequence::from_string("0110").minimal_period() == 4);
  // divides the length
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    size_t k = 1 + rng() % 24;
    CyclicSequence s(k);
    for (size_t i = 0; i < k; ++i) s.set_bit(i, static_cast<int>(rng() & 1));
    CHECK(k % s.minimal_period() == 0);
  }
}

TEST_CASE("windows") {
  CyclicSequence s = CyclicSequence::from_string("10");
  auto ws = s.windows(2);
  REQUIRE(ws.size() == 2);
  CHECK(BinaryWord(ws[0], 2).to_string() == "10");
  CHECK(BinaryWord(ws[1], 2).to_string() == "01");

  // windows wider than the sequence wrap repeatedly
  auto w5 = CyclicSequence::from_string("10000").windows(9);
  CHECK(w5.size() == 5);
  CHECK(BinaryWord(w5[0], 9).to_string() == "100001000");

  CHECK_THROWS_AS(s.windows(33), std::invalid_argument);
  CHECK(s.window_at(1, 3).to_string() == "010");
}

TEST_CASE("windows of a rotation are a cyclic permutation") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    size_t k = 4 + rng() % 20;
    int n = 2 + static_cast<int>(rng() % 6);
    CyclicSequence s(k);
    for (size_t i = 0; i < k; ++i) s.set_bit(i, static_cast<int>(rng() & 1));
    long long j = static_cast<long long>(rng() % k);
    auto a = s.windows(n);
    auto b = s.rotate(j).windows(n);
    std::rotate(a.begin(), a.begin() + static_cast<long long>(j), a.end());
    CHECK(a == b);
  }
}

TEST_CASE("minimal-period representative has the same window set") {
  CyclicSequence s = CyclicSequence::from_string("100100100100");
  size_t d = s.minimal_period();
  REQUIRE(d == 3);
  CyclicSequence r(d);
  for (size_t i = 0; i < d; ++i) r.set_bit(i, s.bit(i));
  auto a = s.windows(5);
  auto b = r.windows(5);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  CHECK(a == b);
}

TEST_CASE("canonical rotation is the least rotation") {
  CyclicSequence s = CyclicSequence::from_string("110010");
  CHECK(s.canonical_rotation().to_string() == "001011");
  CHECK(CyclicSequence::from_string("0000").canonical_rotation().to_string() == "0000");
}

TEST_CASE("hamming distance") {
  BinaryWord a = BinaryWord::from_string("00011011");
  BinaryWord b = BinaryWord::from_string("00011010");
  CHECK(hamming_distance(a, b) == 1);
  CHECK(hamming_distance(a, a) == 0);
  BinaryWord ac = BinaryWord::from_string("11100100");
  CHECK(hamming_distance(a, ac) == 8);
  CHECK_THROWS_AS(hamming_distance(a, BinaryWord::from_string("0")), std::invalid_argument);
}

TEST_CASE("ball volume") {
  CHECK(ball_volume(2, 8, 1) == 9);
  CHECK(ball_volume(2, 17, 0) == 1);
  CHECK(ball_volume(2, 20, 2) == 211);
  CHECK(ball_volume(3, 4, 1) == 9);  // 1 + 4*2
  CHECK_THROWS_AS(ball_volume(2, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(ball_volume(1, 4, 1), std::invalid_argument);
}

TEST_CASE("ball volume matches exhaustive enumeration") {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 0; r <= n; ++r) {
      uint64_t count = 0;
      for (uint32_t w = 0; w < (uint32_t{1} << n); ++w)
        if (__builtin_popcount(w) <= r) ++count;
      CHECK(ball_volume(2, n, r) == count);
    }
  }
}

TEST_CASE("torus array toroidal indexing and windows") {
  TorusArray a = TorusArray::from_rows({"101", "010"});
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.bit(0, 0) == 1);
  CHECK(a.bit(2, 3) == 1);  // wraps to (0,0)
  CHECK(a.bit(1, 5) == 0);  // wraps to (1,2)
  // 2x2 window at (1,2): rows 1,0 cols 2,0 -> 01 11 flattened
  CHECK(BinaryWord(a.window_word(1, 2, 2, 2), 4).to_string() == "0011");
  CHECK(a.to_rows() == std::vector<std::string>{"101", "010"});
  CHECK_THROWS_AS(TorusArray::from_rows({"10", "101"}), std::invalid_argument);
  CHECK_THROWS_AS(a.window_word(0, 0, 6, 6), std::invalid_argument);
}

TEST_CASE("sequence append builders") {
  CyclicSequence s = CyclicSequence::from_string("10");
  s.append(CyclicSequence::from_string("011"));
  s.append_bit(1);
  CHECK(s.to_string() == "100111");
}
