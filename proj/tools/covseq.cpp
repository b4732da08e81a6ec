#include <iostream>

#include "CLI11.hpp"
#include "covseq/construct.hpp"
#include "covseq/corpus.hpp"
#include "covseq/io.hpp"
#include "covseq/merge.hpp"
#include "covseq/search.hpp"
#include "covseq/twod.hpp"
#include "covseq/verify.hpp"

namespace {

using namespace covseq;

constexpr int kExitOk = 0;
constexpr int kExitNotCovering = 1;
constexpr int kExitError = 2;

void print_report(const CoverageReport& rep, bool machine) {
  if (machine) {
    std::cout << "space=" << rep.space_size << " covered=" << rep.covered_count
              << " covering=" << (rep.covering() ? 1 : 0);
    if (rep.computed_radius >= 0) std::cout << " radius=" << rep.computed_radius;
    std::cout << "\n";
    return;
  }
  if (rep.covering()) {
    std::cout << "covering (" << rep.covered_count << "/" << rep.space_size << ")\n";
  } else {
    std::cout << "NOT covering: " << rep.uncovered_total << " of "
              << rep.space_size << " words uncovered\n";
    for (const auto& w : rep.uncovered) std::cout << "  uncovered " << w.to_string() << "\n";
    if (rep.uncovered_total > rep.uncovered.size())
      std::cout << "  ... (" << rep.uncovered_total - rep.uncovered.size()
                << " more)\n";
  }
  if (rep.computed_radius >= 0)
    std::cout << "covering radius = " << rep.computed_radius << "\n";
}

std::map<std::string, std::string> seq_header(const std::string& kind, int n,
                                              int r, size_t len) {
  return {{"kind", kind},
          {"n", std::to_string(n)},
          {"r", std::to_string(r)},
          {"len", std::to_string(len)}};
}

int emit_sequence(const CyclicSequence& s, const std::string& out_path,
                  const std::string& kind, int n, int r) {
  auto header = seq_header(kind, n, r, s.length());
  if (out_path.empty()) {
    std::cout << format_header(header) << "\n" << s.to_string() << "\n";
  } else {
    write_sequence(out_path, s, header);
    std::cout << "wrote " << out_path << " len=" << s.length() << "\n";
  }
  return kExitOk;
}

int emit_array(const TorusArray& a, const std::string& out_path,
               const std::string& kind, int m, int n, int r) {
  std::map<std::string, std::string> header = {
      {"kind", kind},          {"m", std::to_string(m)},
      {"n", std::to_string(n)}, {"r", std::to_string(r)},
      {"rows", std::to_string(a.rows())},
      {"cols", std::to_string(a.cols())}};
  if (out_path.empty()) {
    std::cout << format_header(header) << "\n";
    for (const auto& row : a.to_rows()) std::cout << row << "\n";
  } else {
    write_lines(out_path, a.to_rows(), header);
    std::cout << "wrote " << out_path << " " << a.rows() << "x" << a.cols() << "\n";
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"covering sequences, sequence codes, and 2D covering arrays"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "exhaustive coverage checks");
  verify->require_subcommand(1);
  struct {
    int n = 0, r = 0, m = 0;
    std::string file;
    bool radius = false, machine = false, automatic = false;
  } v;
  auto* vcs = verify->add_subcommand("cs", "verify an (n,R)-covering sequence");
  vcs->add_option("--n", v.n, "window length");
  vcs->add_option("--r", v.r, "radius");
  vcs->add_option("--file", v.file, "sequence file")->required();
  vcs->add_flag("--radius", v.radius, "also compute the exact covering radius");
  vcs->add_flag("--machine", v.machine, "key=value output");
  vcs->add_flag("--auto", v.automatic, "take n and r from the file header");
  auto* vc2 = verify->add_subcommand("c2ds", "verify an (m x n,R) torus array");
  vc2->add_option("--m", v.m, "window rows");
  vc2->add_option("--n", v.n, "window cols");
  vc2->add_option("--r", v.r, "radius");
  vc2->add_option("--file", v.file, "array file")->required();
  vc2->add_flag("--machine", v.machine, "key=value output");
  vc2->add_flag("--auto", v.automatic, "take m, n and r from the file header");

  // ---- merge ----
  auto* merge = app.add_subcommand("merge", "greedy cyclic-superstring merge of a code");
  struct {
    int n = 0, r = 0;
    std::string in, out;
    bool check = false;
  } mg;
  merge->add_option("--n", mg.n, "window length")->required();
  merge->add_option("--r", mg.r, "radius")->required();
  merge->add_option("--in", mg.in, "codeword file (one per line)")->required();
  merge->add_option("--out", mg.out, "output sequence file");
  merge->add_flag("--verify", mg.check, "verify the merged sequence");

  // ---- construct ----
  auto* cons = app.add_subcommand("construct", "one-dimensional constructions");
  cons->require_subcommand(1);
  struct {
    int q = 2, span = 0, k = 0, target_n = 16;
    int n1 = 0, r1 = 0, n2 = 0, r2 = 0, n = 0, r = 0, fill = 0;
    std::string a, b, file, out, poly;
  } c;
  auto* cdb = cons->add_subcommand("debruijn", "canonical de Bruijn sequence");
  cdb->add_option("--q", c.q, "alphabet size (default 2)");
  cdb->add_option("--span", c.span, "window span")->required();
  cdb->add_option("--out", c.out, "output file");
  auto* cham = cons->add_subcommand("hamming", "cyclic Hamming code as a CSC");
  cham->add_option("--k", c.k, "parameter k, code length 2^k-1")->required();
  cham->add_option("--out", c.out, "output file");
  auto* csd = cons->add_subcommand("selfdual", "self-dual CSC pipeline");
  csd->add_option("--target-n", c.target_n, "window length: 8, 16 or 32");
  csd->add_option("--out", c.out, "output file");
  auto* cint = cons->add_subcommand("interleave", "interleave two covering sequences");
  cint->add_option("--a", c.a, "first sequence file")->required();
  cint->add_option("--b", c.b, "second sequence file")->required();
  cint->add_option("--n1", c.n1)->required();
  cint->add_option("--r1", c.r1)->required();
  cint->add_option("--n2", c.n2)->required();
  cint->add_option("--r2", c.r2)->required();
  cint->add_option("--out", c.out, "output file");
  auto* csq = cons->add_subcommand("square", "self-interleave around a fill run");
  csq->add_option("--file", c.file, "seed sequence file")->required();
  csq->add_option("--n", c.n)->required();
  csq->add_option("--r", c.r)->required();
  csq->add_option("--fill", c.fill, "fill symbol, 0 or 1");
  csq->add_option("--out", c.out, "output file");
  auto* cpr = cons->add_subcommand("primitive", "LFSR-based covering sequence");
  cpr->add_option("--n", c.n, "polynomial degree")->required();
  cpr->add_option("--r", c.r, "radius")->required();
  cpr->add_option("--poly", c.poly, "coefficient bits c_0..c_n (default: least sparse primitive)");
  cpr->add_option("--out", c.out, "output file");

  // ---- 2D ----
  struct {
    int m = 0, n = 0, r = 0;
    std::string file, out;
    bool check = false;
  } t;
  auto* fo = app.add_subcommand("fold", "fold an (mn,R)-CS into an M x (2n-1) torus");
  fo->add_option("--m", t.m)->required();
  fo->add_option("--n", t.n)->required();
  fo->add_option("--r", t.r)->required();
  fo->add_option("--file", t.file, "seed sequence file")->required();
  fo->add_option("--out", t.out, "output file");
  fo->add_flag("--verify", t.check, "verify the array before writing");
  auto* s2 = app.add_subcommand("shift2d", "triangular-shift stacking of an (n,R)-CS");
  s2->add_option("--n", t.n)->required();
  s2->add_option("--r", t.r)->required();
  s2->add_option("--file", t.file, "seed sequence file")->required();
  s2->add_option("--out", t.out, "output file");
  s2->add_flag("--verify", t.check, "verify the array before writing");
  auto* sdb = app.add_subcommand("shiftdb", "de Bruijn-scheduled shift stacking");
  sdb->add_option("--m", t.m)->required();
  sdb->add_option("--n", t.n)->required();
  sdb->add_option("--r", t.r)->required();
  sdb->add_option("--file", t.file, "seed sequence file")->required();
  sdb->add_option("--out", t.out, "output file");
  sdb->add_flag("--verify", t.check, "verify the array before writing");

  // ---- search ----
  auto* se = app.add_subcommand("search", "stochastic search for short covering sequences");
  struct {
    int n = 0, r = 0;
    size_t target = 0;
    uint64_t budget = 200000;
    uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
  } sc;
  se->add_option("--n", sc.n)->required();
  se->add_option("--r", sc.r)->required();
  se->add_option("--target", sc.target, "target length (default: shrink best-effort)");
  se->add_option("--budget", sc.budget, "score-evaluation budget");
  auto* seed_opt = se->add_option("--seed", sc.seed, "RNG seed (required: runs are randomized)");
  se->add_option("--out", sc.out, "output file");

  // ---- corpus ----
  auto* co = app.add_subcommand("corpus", "embedded reference data");
  co->require_subcommand(1);
  struct {
    std::string id, out;
  } cp;
  co->add_subcommand("list", "list all entries");
  auto* cver = co->add_subcommand("verify", "re-verify entries");
  cver->add_option("--id", cp.id, "verify a single entry");
  auto* cexp = co->add_subcommand("export", "write an entry to a file");
  cexp->add_option("--id", cp.id)->required();
  cexp->add_option("--out", cp.out)->required();

  // ---- bounds ----
  auto* bo = app.add_subcommand("bounds", "sphere-covering bound and tabulated bounds");
  struct {
    int n = 0, r = 0;
  } bd;
  bo->add_option("--n", bd.n)->required();
  bo->add_option("--r", bd.r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;  // usage errors map to exit 2
  }

  if (vcs->parsed() || vc2->parsed()) {
    TextDocument doc = read_document(v.file);
    if (v.automatic) {
      if (doc.header.count("n")) v.n = std::stoi(doc.header.at("n"));
      if (doc.header.count("r")) v.r = std::stoi(doc.header.at("r"));
      if (doc.header.count("m")) v.m = std::stoi(doc.header.at("m"));
    }
    if (vcs->parsed()) {
      if (v.n < 1) throw CLI::ValidationError("--n", "missing window length");
      CyclicSequence s = document_sequence(doc);
      CoverageReport rep = is_covering_sequence(s, v.n, v.r);
      if (v.radius) rep.computed_radius = covering_radius(s, v.n);
      std::cout << (rep.covering() ? "covering" : "not-covering")
                << " length=" << s.length() << "\n";
      print_report(rep, v.machine);
      return rep.covering() ? kExitOk : kExitNotCovering;
    }
    if (v.m < 1 || v.n < 1) throw CLI::ValidationError("--m/--n", "missing window shape");
    TorusArray a = document_array(doc);
    CoverageReport rep = is_c2ds(a, v.m, v.n, v.r);
    std::cout << (rep.covering() ? "covering" : "not-covering") << " "
              << a.rows() << "x" << a.cols() << "\n";
    print_report(rep, v.machine);
    return rep.covering() ? kExitOk : kExitNotCovering;
  }

  if (merge->parsed()) {
    SequenceCode code = document_code(read_document(mg.in), mg.n, mg.r);
    uint64_t baseline = 0;
    for (const auto& cw : code.codewords)
      baseline += cw.length() + static_cast<size_t>(mg.n - 1);
    CyclicSequence merged = greedy_merge(code);
    std::cout << "merged length=" << merged.length() << " baseline=" << baseline
              << " saved=" << baseline - merged.length() << "\n";
    if (mg.check && !is_covering_sequence(merged, mg.n, mg.r).covering()) {
      std::cout << "merged sequence FAILED verification\n";
      return kExitNotCovering;
    }
    return emit_sequence(merged, mg.out, "cs", mg.n, mg.r);
  }

  if (cdb->parsed()) {
    auto seq = debruijn(c.q, c.span);
    if (c.q == 2) {
      CyclicSequence s = debruijn_binary(c.span);
      return emit_sequence(s, c.out, "cs", c.span, 0);
    }
    std::string line;
    for (size_t i = 0; i < seq.size(); ++i) {
      if (i) line += ",";
      line += std::to_string(seq[i]);
    }
    std::map<std::string, std::string> header = {
        {"kind", "debruijn"},
        {"n", std::to_string(c.span)},
        {"len", std::to_string(seq.size())},
        {"q", std::to_string(c.q)}};
    if (c.out.empty())
      std::cout << format_header(header) << "\n" << line << "\n";
    else
      write_lines(c.out, {line}, header);
    return kExitOk;
  }
  if (cham->parsed()) {
    SequenceCode code = hamming_csc(c.k);
    std::vector<std::string> lines;
    for (const auto& cw : code.codewords) lines.push_back(cw.to_string());
    std::map<std::string, std::string> header = {
        {"kind", "csc"},
        {"n", std::to_string(code.n)},
        {"r", "1"},
        {"len", std::to_string(lines.size())}};
    if (c.out.empty()) {
      std::cout << format_header(header) << "\n";
      for (const auto& l : lines) std::cout << l << "\n";
    } else {
      write_lines(c.out, lines, header);
      std::cout << "wrote " << c.out << " codewords=" << lines.size() << "\n";
    }
    return kExitOk;
  }
  if (csd->parsed()) {
    SelfDualCode sd = selfdual_base();
    if (c.target_n != 8 && c.target_n != 16 && c.target_n != 32)
      throw CLI::ValidationError("--target-n", "must be 8, 16 or 32");
    while (2 * sd.half_length <= c.target_n) sd = selfdual_step(sd);
    std::vector<std::string> lines;
    for (const auto& cw : sd.codewords) lines.push_back(cw.to_string());
    std::map<std::string, std::string> header = {
        {"kind", "csc"},
        {"n", std::to_string(c.target_n)},
        {"r", "1"},
        {"len", std::to_string(lines.size())}};
    if (c.out.empty()) {
      std::cout << format_header(header) << "\n";
      for (const auto& l : lines) std::cout << l << "\n";
    } else {
      write_lines(c.out, lines, header);
      std::cout << "wrote " << c.out << " codewords=" << lines.size() << "\n";
    }
    return kExitOk;
  }
  if (cint->parsed()) {
    CyclicSequence a = document_sequence(read_document(c.a));
    CyclicSequence b = document_sequence(read_document(c.b));
    CyclicSequence s = interleave(a, b, c.n1, c.n2, c.r1, c.r2);
    return emit_sequence(s, c.out, "cs", c.n1 + c.n2, c.r1 + c.r2);
  }
  if (csq->parsed()) {
    CyclicSequence a = document_sequence(read_document(c.file));
    CyclicSequence s = square_interleave(a, c.n, c.fill);
    return emit_sequence(s, c.out, "cs", 2 * c.n, 2 * c.r);
  }
  if (cpr->parsed()) {
    Gf2Poly p;
    if (c.poly.empty()) {
      auto found = find_sparse_primitive(c.n, c.r);
      if (!found) {
        std::cout << "no primitive polynomial of degree " << c.n << " with c_1..c_"
                  << 2 * c.r + 1 << " = 0\n";
        return kExitNotCovering;
      }
      p = *found;
    } else {
      if (c.poly.size() != static_cast<size_t>(c.n) + 1)
        throw CLI::ValidationError("--poly", "need n+1 coefficient bits c_0..c_n");
      uint32_t bits = 0;
      for (size_t i = 0; i < c.poly.size(); ++i)
        if (c.poly[i] == '1') bits |= uint32_t{1} << i;
      p = Gf2Poly{bits, c.n};
    }
    std::cout << "polynomial " << p.to_string() << "\n";
    CyclicSequence s = primitive_cs(c.n, c.r, p);
    return emit_sequence(s, c.out, "cs", c.n + 2 * c.r + 1, c.r);
  }

  if (fo->parsed() || s2->parsed() || sdb->parsed()) {
    CyclicSequence s = document_sequence(read_document(t.file));
    TorusArray a;
    int wm, wn, wr;
    if (fo->parsed()) {
      a = fold(s, t.m, t.n, t.r);
      wm = t.m; wn = t.n; wr = t.r;
    } else if (s2->parsed()) {
      a = triangular_shift_array(s, t.n, t.r);
      wm = 2; wn = t.n; wr = 2 * t.r;
    } else {
      a = debruijn_shift_array(s, t.n, t.r, t.m);
      wm = t.m; wn = t.n; wr = t.m * t.r;
    }
    if (t.check && !is_c2ds(a, wm, wn, wr).covering()) {
      std::cout << "array FAILED verification\n";
      return kExitNotCovering;
    }
    return emit_array(a, t.out, "c2ds", wm, wn, wr);
  }

  if (se->parsed()) {
    if (seed_opt->count() == 0)
      throw CLI::ValidationError("--seed", "randomized run requires an explicit seed");
    SearchConfig cfg;
    cfg.n = sc.n;
    cfg.radius = sc.r;
    cfg.target_length = sc.target;
    cfg.budget = sc.budget;
    cfg.rng_seed = sc.seed;
    SearchResult res = search_cs(cfg);
    std::cout << "length=" << res.sequence.length()
              << " evaluations=" << res.evaluations
              << (res.reached_target ? "" : " (target not reached; fallback)") << "\n";
    return emit_sequence(res.sequence, sc.out, "cs", sc.n, sc.r);
  }

  if (co->parsed()) {
    auto subs = co->get_subcommands();
    const std::string sub = subs.empty() ? "" : subs[0]->get_name();
    if (sub == "list") {
      for (const auto& e : corpus_entries())
        std::cout << e.id << " kind=" << e.kind << " n=" << e.n << " r=" << e.radius
                  << (e.m ? " m=" + std::to_string(e.m) : "")
                  << " len=" << e.claimed_length << " source=" << e.provenance << "\n";
      return kExitOk;
    }
    if (sub == "verify") {
      bool all = true;
      for (const auto& verd : verify_corpus()) {
        if (!cp.id.empty() && verd.id != cp.id) continue;
        std::cout << (verd.pass ? "PASS " : "FAIL ") << verd.id
                  << (verd.detail.empty() ? "" : " (" + verd.detail + ")") << "\n";
        all = all && verd.pass;
      }
      return all ? kExitOk : kExitNotCovering;
    }
    const CorpusEntry* e = find_entry(cp.id);
    if (!e) {
      std::cerr << "no corpus entry " << cp.id << "\n";
      return kExitError;
    }
    std::map<std::string, std::string> header = {
        {"kind", e->kind}, {"n", std::to_string(e->n)}, {"r", std::to_string(e->radius)}};
    if (e->m) header["m"] = std::to_string(e->m);
    header["len"] = std::to_string(e->claimed_length);
    write_lines(cp.out, e->payload, header);
    std::cout << "wrote " << cp.out << "\n";
    return kExitOk;
  }

  if (bo->parsed()) {
    std::cout << "sphere-covering bound: " << sphere_covering_bound(bd.n, bd.r) << "\n";
    if (const BoundsEntry* b = find_bounds(bd.n, bd.r))
      std::cout << "tabulated: " << b->lower << "-" << b->upper << " " << b->source_tag
                << "\n";
    else
      std::cout << "tabulated: (no entry)\n";
    return kExitOk;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const covseq::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
