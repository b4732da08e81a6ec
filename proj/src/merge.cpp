#include "covseq/merge.hpp"

#include <algorithm>
#include <cstring>

namespace covseq {
namespace {

// Longest t <= cap with suffix_t(a) = prefix_t(b). Downward scan with
// memcmp: on bit strings a mismatch is found after ~2 bytes on average.
int overlap_scan(const std::string& a, const std::string& b, int cap) {
  const char* ae = a.data() + a.size();
  for (int t = cap; t > 0; --t)
    if (std::memcmp(ae - t, b.data(), static_cast<size_t>(t)) == 0) return t;
  return 0;
}

struct Cluster {
  std::vector<std::string> variants;  // >1 only before the rotation is locked
};

struct PairBest {
  int overlap = -1;
  int va = 0, vb = 0;  // variant indices into the two clusters
};

PairBest best_between(const Cluster& x, const Cluster& y) {
  PairBest best;
  for (size_t i = 0; i < x.variants.size(); ++i) {
    for (size_t j = 0; j < y.variants.size(); ++j) {
      const std::string& a = x.variants[i];
      const std::string& b = y.variants[j];
      int cap = static_cast<int>(std::min(a.size(), b.size())) - 1;
      int t = overlap_scan(a, b, cap);
      if (t > best.overlap ||
          (t == best.overlap &&
           a + b.substr(static_cast<size_t>(t)) <
               x.variants[static_cast<size_t>(best.va)] +
                   y.variants[static_cast<size_t>(best.vb)].substr(
                       static_cast<size_t>(best.overlap)))) {
        best = {t, static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  return best;
}

}  // namespace

SequenceCode reduce_periodic(const SequenceCode& code) {
  SequenceCode out;
  out.n = code.n;
  out.radius = code.radius;
  out.codewords.reserve(code.codewords.size());
  for (const auto& cw : code.codewords) {
    size_t d = cw.minimal_period();
    CyclicSequence r(d);
    for (size_t i = 0; i < d; ++i) r.set_bit(i, cw.bit(i));
    out.codewords.push_back(std::move(r));
  }
  return out;
}

std::string acyclic_extension(const CyclicSequence& s, int n, int eps) {
  if (eps < 0) throw std::invalid_argument("extension eps must be >= 0");
  size_t total = s.length() + static_cast<size_t>(n - 1) + static_cast<size_t>(eps);
  std::string out;
  out.reserve(total);
  for (size_t i = 0; i < total; ++i) out.push_back(s.bit(i) ? '1' : '0');
  return out;
}

int max_overlap(const std::string& a, const std::string& b, int cap) {
  if (cap < 0) return 0;
  int lim = static_cast<int>(std::min(a.size(), b.size()));
  if (cap >= lim) cap = lim - 1;
  if (cap < 0) return 0;
  return overlap_scan(a, b, cap);
}

CyclicSequence greedy_merge(const SequenceCode& code) {
  if (code.codewords.empty()) throw std::invalid_argument("empty-input: no codewords to merge");
  SequenceCode reduced = reduce_periodic(code);
  const int n = code.n;
  if (reduced.codewords.size() == 1) return reduced.codewords[0];

  // One cluster per codeword; all rotations, extended by n-1 symbols.
  std::vector<Cluster> clusters;
  clusters.reserve(reduced.codewords.size());
  for (const auto& cw : reduced.codewords) {
    Cluster c;
    size_t k = cw.length();
    c.variants.reserve(k);
    for (size_t r = 0; r < k; ++r)
      c.variants.push_back(acyclic_extension(cw.rotate(static_cast<long long>(r)), n, 0));
    std::sort(c.variants.begin(), c.variants.end());
    c.variants.erase(std::unique(c.variants.begin(), c.variants.end()), c.variants.end());
    clusters.push_back(std::move(c));
  }

  size_t m = clusters.size();
  std::vector<bool> alive(m, true);
  // best[i][j] for ordered pair (i precedes j); refreshed lazily after merges
  std::vector<std::vector<PairBest>> best(m, std::vector<PairBest>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j) best[i][j] = best_between(clusters[i], clusters[j]);

  for (size_t round = 1; round < m; ++round) {
    size_t bi = 0, bj = 0;
    int bo = -1;
    std::string bjoin;
    for (size_t i = 0; i < m; ++i) {
      if (!alive[i]) continue;
      for (size_t j = 0; j < m; ++j) {
        if (i == j || !alive[j]) continue;
        const PairBest& pb = best[i][j];
        if (pb.overlap < bo) continue;
        std::string join =
            clusters[i].variants[static_cast<size_t>(pb.va)] +
            clusters[j].variants[static_cast<size_t>(pb.vb)].substr(
                static_cast<size_t>(pb.overlap));
        if (pb.overlap > bo || join < bjoin) {
          bo = pb.overlap;
          bi = i;
          bj = j;
          bjoin = std::move(join);
        }
      }
    }
    // merged cluster replaces bi with the single joined string; bj dies
    clusters[bi].variants = {bjoin};
    alive[bj] = false;
    for (size_t x = 0; x < m; ++x) {
      if (!alive[x] || x == bi) continue;
      best[bi][x] = best_between(clusters[bi], clusters[x]);
      best[x][bi] = best_between(clusters[x], clusters[bi]);
    }
  }

  std::string s;
  for (size_t i = 0; i < m; ++i)
    if (alive[i]) s = clusters[i].variants[0];
  // close the cycle: the wraparound may absorb a matching suffix/prefix,
  // but the cyclic result must stay at least n symbols long
  int t = max_overlap(s, s, static_cast<int>(s.size()) - n);
  s.resize(s.size() - static_cast<size_t>(t));
  return CyclicSequence::from_string(s);
}

}  // namespace covseq
