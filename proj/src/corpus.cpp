#include "covseq/corpus.hpp"

#include <cstring>

#include "covseq/verify.hpp"

namespace covseq {
namespace {

#include "corpus_data.inc"

uint64_t fnv1a(const std::vector<std::string>& lines) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& line : lines) {
    for (char c : line) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<CorpusEntry> build_entries() {
  std::vector<CorpusEntry> out;
  for (const RawEntry& r : kRawEntries) {
    CorpusEntry e;
    e.id = r.id;
    e.kind = r.kind;
    e.n = r.n;
    e.radius = r.radius;
    e.m = r.m;
    e.claimed_length = r.claimed_length;
    e.provenance = r.provenance;
    if (r.single) {
      e.payload.emplace_back(r.single);
    } else if (std::strcmp(r.kind, "c2ds") == 0) {
      for (int i = 0; i < r.row_count; ++i) e.payload.emplace_back(r.rows[i]);
    } else {
      // extension rows carry the codeword plus its own first n-1 symbols
      for (int i = 0; i < r.row_count; ++i) {
        std::string ext = r.rows[i];
        if (ext.size() > static_cast<size_t>(r.n - 1) &&
            ext.size() - static_cast<size_t>(r.n - 1) >= 1 &&
            r.overlaps != nullptr) {
          e.extended.push_back(ext);
          e.payload.push_back(ext.substr(0, ext.size() - static_cast<size_t>(r.n - 1)));
        } else {
          e.payload.push_back(ext);
        }
      }
      if (r.overlaps)
        e.overlaps.assign(r.overlaps, r.overlaps + r.row_count);
    }
    out.push_back(std::move(e));
  }
  return out;
}

uint64_t expected_checksum(const std::string& id) {
  for (const RawEntry& r : kRawEntries)
    if (id == r.id) return r.checksum;
  return 0;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build_entries();
  return entries;
}

const CorpusEntry* find_entry(const std::string& id) {
  for (const auto& e : corpus_entries())
    if (e.id == id) return &e;
  return nullptr;
}

const std::vector<BoundsEntry>& bounds_table() {
  static const std::vector<BoundsEntry> table = [] {
    std::vector<BoundsEntry> t;
    for (const RawBounds& b : kRawBounds)
      t.push_back({b.n, b.radius, b.lower, b.upper, b.tag});
    return t;
  }();
  return table;
}

const BoundsEntry* find_bounds(int n, int radius) {
  for (const auto& b : bounds_table())
    if (b.n == n && b.radius == radius) return &b;
  return nullptr;
}

std::vector<CorpusVerdict> verify_corpus() {
  std::vector<CorpusVerdict> out;
  for (const auto& e : corpus_entries()) {
    CorpusVerdict v;
    v.id = e.id;
    try {
      if (fnv1a(e.payload) != expected_checksum(e.id)) {
        v.detail = "checksum mismatch";
        out.push_back(v);
        continue;
      }
      if (e.kind == "cs") {
        const std::string& s = e.payload[0];
        if (s.size() != e.claimed_length) {
          v.detail = "length " + std::to_string(s.size()) + " != claimed " +
                     std::to_string(e.claimed_length);
        } else {
          auto rep = is_covering_sequence(CyclicSequence::from_string(s), e.n, e.radius);
          if (rep.covering())
            v.pass = true;
          else
            v.detail = std::to_string(rep.uncovered_total) + " words uncovered";
        }
      } else if (e.kind == "csc") {
        SequenceCode code;
        code.n = e.n;
        code.radius = e.radius;
        uint64_t total = 0;
        for (const auto& s : e.payload) {
          code.codewords.push_back(CyclicSequence::from_string(s));
          total += s.size();
        }
        if (total != e.claimed_length) {
          v.detail = "total bits " + std::to_string(total) + " != claimed " +
                     std::to_string(e.claimed_length);
        } else {
          auto rep = coverage(code);
          if (rep.covering())
            v.pass = true;
          else
            v.detail = std::to_string(rep.uncovered_total) + " words uncovered";
        }
      } else {  // c2ds
        TorusArray a = TorusArray::from_rows(e.payload);
        if (a.rows() * a.cols() != e.claimed_length) {
          v.detail = "area mismatch";
        } else {
          auto rep = is_c2ds(a, e.m, e.n, e.radius);
          if (rep.covering())
            v.pass = true;
          else
            v.detail = std::to_string(rep.uncovered_total) + " windows uncovered";
        }
      }
    } catch (const std::exception& ex) {
      v.pass = false;
      v.detail = ex.what();
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace covseq
