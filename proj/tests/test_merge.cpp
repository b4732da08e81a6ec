#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "covseq/corpus.hpp"
#include "covseq/merge.hpp"
#include "covseq/verify.hpp"
#include "doctest.h"

using namespace covseq;

namespace {

std::set<uint32_t> window_set(const CyclicSequence& s, int n) {
  auto ws = s.windows(n);
  return {ws.begin(), ws.end()};
}

std::set<uint32_t> code_window_set(const SequenceCode& code) {
  std::set<uint32_t> out;
  for (const auto& cw : code.codewords) {
    auto ws = cw.windows(code.n);
    out.insert(ws.begin(), ws.end());
  }
  return out;
}

int naive_overlap(const std::string& a, const std::string& b, int cap) {
  for (int t = cap; t > 0; --t)
    if (a.substr(a.size() - static_cast<size_t>(t)) == b.substr(0, static_cast<size_t>(t)))
      return t;
  return 0;
}

SequenceCode random_code(std::mt19937& rng, int n, int r) {
  SequenceCode code;
  code.n = n;
  code.radius = r;
  size_t count = 2 + rng() % 5;
  for (size_t i = 0; i < count; ++i) {
    size_t k = 2 + rng() % 14;
    CyclicSequence s(k);
    for (size_t j = 0; j < k; ++j) s.set_bit(j, static_cast<int>(rng() & 1));
    code.codewords.push_back(std::move(s));
  }
  return code;
}

}  // namespace

TEST_CASE("reduce periodic") {
  SequenceCode code;
  code.n = 9;
  code.radius = 1;
  code.codewords.push_back(CyclicSequence::from_string("1000010000"));
  code.codewords.push_back(CyclicSequence::from_string("1010101010"));
  code.codewords.push_back(CyclicSequence::from_string("0110"));
  SequenceCode red = reduce_periodic(code);
  CHECK(red.codewords[0].to_string() == "10000");
  CHECK(red.codewords[1].to_string() == "10");
  CHECK(red.codewords[2].to_string() == "0110");
  CHECK(code_window_set(red) == code_window_set(code));
  // idempotent
  SequenceCode twice = reduce_periodic(red);
  for (size_t i = 0; i < red.codewords.size(); ++i)
    CHECK(twice.codewords[i] == red.codewords[i]);
}

TEST_CASE("acyclic extension") {
  CyclicSequence s = CyclicSequence::from_string("1000010000");
  CHECK(acyclic_extension(s, 9, 0) == "100001000010000100");
  CHECK(acyclic_extension(CyclicSequence::from_string("0110"), 1, 0) == "0110");
  CHECK_THROWS_AS(acyclic_extension(s, 3, -1), std::invalid_argument);

  // substrings of the eps=0 extension equal the cyclic windows
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    size_t k = 2 + rng() % 20;
    int n = 2 + static_cast<int>(rng() % 9);
    CyclicSequence x(k);
    for (size_t i = 0; i < k; ++i) x.set_bit(i, static_cast<int>(rng() & 1));
    std::string ext = acyclic_extension(x, n, 0);
    std::set<uint32_t> sub;
    for (size_t i = 0; i + static_cast<size_t>(n) <= ext.size(); ++i)
      sub.insert(BinaryWord::from_string(ext.substr(i, static_cast<size_t>(n))).bits);
    CHECK(sub == window_set(x, n));
  }
}

TEST_CASE("max overlap") {
  CHECK(max_overlap("110", "101", 2) == 2);
  CHECK(max_overlap("110", "101", 0) == 0);
  CHECK(max_overlap("0011", "1100", 3) == 2);
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto rand_str = [&](size_t len) {
      std::string s;
      for (size_t i = 0; i < len; ++i) s.push_back(rng() & 1 ? '1' : '0');
      return s;
    };
    std::string a = rand_str(2 + rng() % 28), b = rand_str(2 + rng() % 28);
    int cap = static_cast<int>(std::min(a.size(), b.size())) - 1;
    CHECK(max_overlap(a, b, cap) == naive_overlap(a, b, cap));
  }
}

TEST_CASE("greedy merge of the worked (9,10,1) code") {
  const CorpusEntry* e = find_entry("csc-9-10-1");
  REQUIRE(e != nullptr);
  SequenceCode code;
  code.n = 9;
  code.radius = 1;
  uint64_t baseline = 0;
  for (const auto& s : e->payload) {
    code.codewords.push_back(CyclicSequence::from_string(s));
    baseline += s.size() + 8;
  }
  CyclicSequence merged = greedy_merge(code);
  CHECK(merged.length() <= baseline);
  CHECK(is_covering_sequence(merged, 9, 1).covering());
  auto cw = code_window_set(code);
  auto mw = window_set(merged, 9);
  CHECK(std::includes(mw.begin(), mw.end(), cw.begin(), cw.end()));
  // deterministic
  CHECK(greedy_merge(code) == merged);
}

TEST_CASE("greedy merge of a single codeword is the identity") {
  SequenceCode code;
  code.n = 4;
  code.radius = 1;
  code.codewords.push_back(CyclicSequence::from_string("0110101"));
  CHECK(greedy_merge(code).to_string() == "0110101");
}

TEST_CASE("greedy merge rejects an empty code") {
  SequenceCode code;
  code.n = 4;
  code.radius = 1;
  CHECK_THROWS_AS(greedy_merge(code), std::invalid_argument);
}

TEST_CASE("greedy merge preserves windows on random codes") {
  std::mt19937 rng(41);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);  // up to 8
    SequenceCode code = random_code(rng, n, 1);
    CyclicSequence merged = greedy_merge(code);
    uint64_t baseline = 0;
    for (const auto& cw : code.codewords)
      baseline += cw.length() + static_cast<size_t>(n - 1);
    CHECK(merged.length() <= baseline);
    auto cw = code_window_set(code);
    auto mw = window_set(merged, n);
    CHECK(std::includes(mw.begin(), mw.end(), cw.begin(), cw.end()));
  }
}
