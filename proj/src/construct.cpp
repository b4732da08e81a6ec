#include "covseq/construct.hpp"

#include <algorithm>
#include <numeric>

namespace covseq {
namespace {

uint32_t lfsr_next_state(uint32_t state, const Gf2Poly& p, int offset) {
  // state holds s_0 at bit n-1 down to s_{n-1} at bit 0;
  // next symbol = sum_{i=1}^{n} c_i s_{n-i} (+ offset)
  int n = p.degree;
  uint32_t nxt = static_cast<uint32_t>(offset & 1);
  for (int i = 1; i <= n; ++i)
    if (p.coeff(i)) nxt ^= (state >> (i - 1)) & 1u;
  uint32_t mask = (n == 32) ? 0xffffffffu : ((uint32_t{1} << n) - 1);
  return ((state << 1) | nxt) & mask;
}

void require_feedback(const Gf2Poly& p) {
  if (p.degree < 1 || !p.coeff(0) || !p.coeff(p.degree))
    throw std::invalid_argument("malformed-polynomial: need c_0 = c_n = 1");
}

std::string complement_str(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

std::string xor_str(const std::string& a, const std::string& b) {
  std::string out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] == b[i]) ? '0' : '1';
  return out;
}

}  // namespace

Gf2Poly::Gf2Poly(uint32_t coeffs_, int degree_) : coeffs(coeffs_), degree(degree_) {
  if (degree_ < 0 || degree_ > 31)
    throw std::invalid_argument("polynomial degree must be in [0,31]");
  if (coeffs_ >> (degree_ + 1))
    throw std::invalid_argument("coefficient above the stated degree");
}

std::string Gf2Poly::to_string() const {
  std::string out;
  for (int i = degree; i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += "+";
    if (i == 0)
      out += "1";
    else if (i == 1)
      out += "x";
    else
      out += "x^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

LfsrStream::LfsrStream(const Gf2Poly& poly, int offset)
    : poly_(poly), offset_(offset & 1), state_(1) {
  require_feedback(poly);
}

int LfsrStream::next() {
  int out = static_cast<int>((state_ >> (poly_.degree - 1)) & 1u);
  state_ = lfsr_next_state(state_, poly_, offset_);
  return out;
}

CyclicSequence LfsrStream::period() {
  int n = poly_.degree;
  if (n > 24) throw ResourceLimitError("LFSR period capped at degree 24");
  size_t len = (size_t{1} << n) - 1;
  CyclicSequence out(len);
  uint32_t st = 1;  // canonical 0...01 start
  for (size_t i = 0; i < len; ++i) {
    out.set_bit(i, static_cast<int>((st >> (n - 1)) & 1u));
    st = lfsr_next_state(st, poly_, offset_);
  }
  return out;
}

std::vector<int> debruijn(int q, int span) {
  if (q < 2 || span < 1) throw std::invalid_argument("need q >= 2, span >= 1");
  double size = 1;
  for (int i = 0; i < span; ++i) size *= q;
  if (size > double{1 << 24})
    throw ResourceLimitError("de Bruijn size q^span exceeds 2^24");
  // FKM: concatenate Lyndon words whose length divides span, in lex order
  std::vector<int> seq;
  std::vector<int> a(static_cast<size_t>(span) + 1, 0);
  int t = 1, p = 1;
  seq.reserve(static_cast<size_t>(size));
  while (true) {
    if (t > span) {
      if (span % p == 0)
        for (int i = 1; i <= p; ++i) seq.push_back(a[static_cast<size_t>(i)]);
      // backtrack
      t = span;
      while (t > 0 && a[static_cast<size_t>(t)] == q - 1) --t;
      if (t == 0) break;
      ++a[static_cast<size_t>(t)];
      p = t;
      ++t;
    } else {
      a[static_cast<size_t>(t)] = a[static_cast<size_t>(t - p)];
      ++t;
    }
  }
  return seq;
}

CyclicSequence debruijn_binary(int span) {
  auto v = debruijn(2, span);
  CyclicSequence out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out.set_bit(i, v[i]);
  return out;
}

bool is_primitive(const Gf2Poly& p) {
  require_feedback(p);
  int n = p.degree;
  if (n > 24) throw ResourceLimitError("primitivity check capped at degree 24");
  if (n == 1) return true;  // x + 1, period 1 = 2^1 - 1
  uint32_t start = 1, st = 1;
  uint64_t full = (uint64_t{1} << n) - 1;
  for (uint64_t cnt = 1; cnt <= full + 1; ++cnt) {
    st = lfsr_next_state(st, p, 0);
    if (st == start) return cnt == full;
  }
  return false;
}

std::optional<Gf2Poly> find_sparse_primitive(int n, int radius) {
  if (n < 1 || n > 24) throw std::invalid_argument("degree out of range [1,24]");
  int zeros = 2 * radius + 1;  // c_1 .. c_{2R+1} must vanish
  if (zeros >= n) return std::nullopt;  // only x^n + 1 would remain
  int freelo = zeros + 1, freehi = n - 1;
  int nfree = freehi - freelo + 1;
  // ascending coefficient-string order c_0 c_1 ... c_n: the lowest free
  // index is the most significant comparison position
  for (uint32_t combo = 0; combo < (uint32_t{1} << nfree); ++combo) {
    uint32_t coeffs = 1u | (uint32_t{1} << n);
    for (int b = 0; b < nfree; ++b)
      if ((combo >> (nfree - 1 - b)) & 1u) coeffs |= uint32_t{1} << (freelo + b);
    Gf2Poly p{coeffs, n};
    if (is_primitive(p)) return p;
  }
  return std::nullopt;
}

CyclicSequence primitive_cs(int n, int radius, const Gf2Poly& p) {
  require_feedback(p);
  if (p.degree != n) throw std::invalid_argument("parameter-error: degree != n");
  for (int i = 1; i <= 2 * radius + 1; ++i)
    if (i <= n && p.coeff(i))
      throw std::invalid_argument("parameter-error: c_1..c_{2R+1} must be zero");
  if (!is_primitive(p)) throw std::invalid_argument("parameter-error: polynomial not primitive");

  std::string a = LfsrStream(p, 0).period().to_string();
  std::string b = complement_str(a);
  int npr = n + 2 * radius + 1;

  // rotate so the fill run occupies positions 2R+1 .. 2R+n-1, extend
  // acyclically by n'-1 symbols, then append 2R+2 fill symbols (the
  // constant-sequence splice)
  auto half = [&](const std::string& s, char fillc) {
    size_t k = s.size();
    std::string run(static_cast<size_t>(n - 1), fillc);
    std::string dbl = s + s;
    size_t pos = dbl.find(run);
    if (pos >= k) throw std::invalid_argument("parameter-error: missing fill run");
    size_t start = (pos + k - static_cast<size_t>(2 * radius + 1)) % k;
    std::string rot = dbl.substr(start, k);
    std::string ext = rot + rot.substr(0, static_cast<size_t>(npr - 1));
    return ext + std::string(static_cast<size_t>(2 * radius + 2), fillc);
  };
  return CyclicSequence::from_string(half(a, '0') + half(b, '1'));
}

SequenceCode hamming_csc(int k) {
  if (k < 2 || k > 5) throw std::invalid_argument("unsupported: k must be in [2,5]");
  int n = (1 << k) - 1;
  // least primitive generator by integer coefficient encoding
  Gf2Poly gen;
  bool found = false;
  for (uint32_t mid = 0; mid < (uint32_t{1} << (k - 1)) && !found; ++mid) {
    Gf2Poly p{1u | (mid << 1) | (uint32_t{1} << k), k};
    if (is_primitive(p)) {
      gen = p;
      found = true;
    }
  }
  uint64_t g = gen.coeffs;
  uint64_t mask = (uint64_t{1} << n) - 1;
  uint64_t messages = uint64_t{1} << (n - k);

  SequenceCode out;
  out.n = n;
  out.radius = 1;
  for (uint64_t msg = 0; msg < messages; ++msg) {
    // c(x) = m(x) g(x); bit n-1-i of the printed string is coefficient i,
    // so integer order on the reversed word is string order — reverse once
    uint64_t c = 0;
    uint64_t mm = msg;
    int sh = 0;
    while (mm) {
      if (mm & 1) c ^= g << sh;
      mm >>= 1;
      ++sh;
    }
    uint64_t w = 0;  // printed-string integer: s_0 at the top bit
    for (int i = 0; i < n; ++i)
      if ((c >> i) & 1) w |= uint64_t{1} << (n - 1 - i);
    // emit only the codeword that IS the lex-least rotation of its class
    bool canonical = true;
    uint64_t r = w;
    int period = n;
    for (int rot = 1; rot < n && canonical; ++rot) {
      r = ((r << 1) | (r >> (n - 1))) & mask;
      if (r < w) canonical = false;
      if (r == w && rot < period) period = rot;
    }
    if (!canonical) continue;
    if (n % period != 0) period = n;  // safety; true periods divide n
    CyclicSequence rep(static_cast<size_t>(period));
    for (int i = 0; i < period; ++i)
      rep.set_bit(static_cast<size_t>(i), static_cast<int>((w >> (n - 1 - i)) & 1));
    out.codewords.push_back(std::move(rep));
  }
  return out;
}

SelfDualCode selfdual_base() {
  SelfDualCode c;
  c.half_length = 8;
  c.codewords.push_back(CyclicSequence::from_string("0001101111100100"));
  c.codewords.push_back(CyclicSequence::from_string("0001101011100101"));
  c.pairing.emplace_back(0, 1);
  return c;
}

SelfDualCode selfdual_step(const SelfDualCode& c) {
  int n = c.half_length;
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("half length must be a power of two");
  // E_n: even-weight n-words starting with zero, ascending
  std::vector<std::string> en;
  for (uint32_t u = 0; u < (uint32_t{1} << (n - 1)); ++u) {
    if (__builtin_popcount(u) % 2 != 0) continue;
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n - 1; ++i)
      if ((u >> (n - 2 - i)) & 1u) s[static_cast<size_t>(i + 1)] = '1';
    en.push_back(s);
  }
  SelfDualCode out;
  out.half_length = 2 * n;
  size_t per_u = c.codewords.size();
  for (size_t ui = 0; ui < en.size(); ++ui) {
    const std::string& u = en[ui];
    std::string ub = complement_str(u);
    for (const auto& cw : c.codewords) {
      std::string x = cw.to_string().substr(0, static_cast<size_t>(n));
      out.codewords.push_back(CyclicSequence::from_string(
          u + xor_str(u, x) + ub + xor_str(ub, x)));
    }
    for (const auto& [i, j] : c.pairing)
      out.pairing.emplace_back(static_cast<int>(ui * per_u) + i,
                               static_cast<int>(ui * per_u) + j);
  }
  return out;
}

CyclicSequence combine_pair(const CyclicSequence& a, const CyclicSequence& b) {
  if (a.length() != b.length() || a.length() % 2 != 0)
    throw std::invalid_argument("pairing-error: need equal even lengths");
  std::string sa = a.to_string(), sb = b.to_string();
  size_t half = sa.size() / 2;
  std::string x = sa.substr(0, half), xp = sb.substr(0, half);
  if (sa.substr(half) != complement_str(x) || sb.substr(half) != complement_str(xp))
    throw std::invalid_argument("pairing-error: inputs must have the form [X ~X]");
  if (x.substr(0, half - 1) != xp.substr(0, half - 1) || x.back() == xp.back())
    throw std::invalid_argument("pairing-error: halves must differ in the last coordinate only");
  return CyclicSequence::from_string(sa + sb);
}

CyclicSequence interleave(const CyclicSequence& a, const CyclicSequence& b,
                          int n1, int n2, int r1, int r2) {
  (void)r1;
  (void)r2;
  size_t k1 = a.length(), k2 = b.length();
  if (std::gcd(k1, k2) != 1)
    throw std::invalid_argument("incompatible-lengths: gcd(k1,k2) must be 1");
  if (!(n1 == n2 || n1 == n2 + 1))
    throw std::invalid_argument("parameter-error: need n1 = n2 or n1 = n2+1");
  size_t len = 2 * k1 * k2;
  CyclicSequence out(len);
  for (size_t i = 0; i < len; ++i)
    out.set_bit(i, (i % 2 == 0) ? a.bit((i / 2) % k1) : b.bit((i / 2) % k2));
  return out;
}

CyclicSequence square_interleave(const CyclicSequence& a, int n, int fill) {
  size_t k = a.length();
  std::string s = a.to_string();
  std::string dbl = s + s;
  std::string run(static_cast<size_t>(n - 1), fill ? '1' : '0');
  size_t pos = dbl.find(run);
  if (pos >= k)
    throw std::invalid_argument("precondition-error: no run of n-1 fill symbols");
  s = dbl.substr(pos, k);  // fill run at the front
  size_t parts = (k % 2 == 0) ? k / 2 : (k + 1) / 2;
  std::string out;
  out.reserve(parts * (2 * k + 2));
  for (size_t i = 1; i <= parts; ++i) {
    for (size_t t = 0; t < k; ++t) {
      out.push_back(s[(i - 1 + t) % k]);
      out.push_back(s[t]);
    }
    out.push_back(s[(i - 1) % k]);
    out.push_back(fill ? '1' : '0');
  }
  return CyclicSequence::from_string(out);
}

}  // namespace covseq
