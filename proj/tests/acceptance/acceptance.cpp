// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.
//
//   gbl_acceptance [--cli PATH] [--work DIR]
//
// With --cli the command-line tool is also exercised for the end-to-end and
// determinism criteria.

#include "gbl/catalog.hpp"
#include "gbl/certify.hpp"
#include "gbl/json_io.hpp"
#include "gbl/magnus.hpp"
#include "gbl/milnor.hpp"
#include "gbl/s_rewrite.hpp"
#include "gbl/s_search.hpp"
#include "gbl/sha256.hpp"

#include "brute_magnus.hpp"
#include "generators.hpp"
#include "hand_longitudes.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gbl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string artifact;  // digest of everything the run produced
};

struct Context {
  std::string cli;
  fs::path work;
};

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Accumulates output bytes and failure notes for one criterion.
class Recorder {
 public:
  void add(const std::string& bytes) { bytes_ += bytes; }
  void add(const Json& j) { bytes_ += dump(j); }
  void fail(const std::string& why) {
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + why;
  }
  Outcome finish(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    o.detail = failures_ == 0 ? summary : summary + "; " + std::to_string(failures_) + " failure(s): " + notes_;
    o.artifact = sha256_hex(bytes_);
    return o;
  }

 private:
  std::string bytes_;
  std::string notes_;
  int failures_ = 0;
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

int run_cli(const Context& ctx, const std::string& args) {
  const std::string cmd = "\"" + ctx.cli + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome move_round_trip(const Context&) {
  Recorder rec;
  testing::Rng rng(1001);
  Timer t;
  for (int i = 0; i < 1000; ++i) {
    const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const auto a = testing::random_seifert(rng, m, 8, 4);
    const auto e = testing::random_enlargement(rng, a, 4);
    if (!validate(a).valid || !e.legal_signs()) rec.fail("generator produced an invalid case " + std::to_string(i));
    try {
      const auto b = apply_enlargement(a, e);
      if (!validate(b).valid) rec.fail("enlargement broke validity in case " + std::to_string(i));
      if (!(apply_reduction(b, e) == a)) rec.fail("witness reduction differs in case " + std::to_string(i));
      if (!(apply_reduction(b, Reduction{e.k, e.pos_u, e.pos_v}) == a))
        rec.fail("positional reduction differs in case " + std::to_string(i));
      rec.add(b.key());
    } catch (const std::exception& ex) {
      rec.fail("case " + std::to_string(i) + ": " + ex.what());
    }
  }
  const double s = t.seconds();
  if (s >= 5.0) rec.fail("took " + fmt_seconds(s));
  return rec.finish("1000 random enlargement/reduction round trips in " + fmt_seconds(s));
}

Outcome min_to_max(const Context&) {
  Recorder rec;
  testing::Rng rng(1002);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = i < 100 ? 2 : 3;
    const auto c = testing::random_seifert(rng, m, 6, 3);
    auto red = testing::random_enlargement(rng, c, 2);
    const auto p = testing::random_congruence(rng, c.block_sizes());
    const auto c_prime = apply_congruence(c, p);
    auto enl = testing::random_enlargement(rng, c_prime, 2);
    if (i % 2 == 0) {
      red.pos_u = enl.pos_u = 0;
      red.pos_v = enl.pos_v = 1;
    }
    const auto a = apply_enlargement(c, red);
    const auto b = apply_enlargement(c_prime, enl);
    try {
      const auto out = replace_min_by_max(a, c, c_prime, b, red, p, enl);
      if (!(apply_enlargement(a, out.a_to_d) == out.d)) rec.fail("D does not enlarge A in case " + std::to_string(i));
      if (!(apply_enlargement(b, out.b_to_qdq) == apply_congruence(out.d, out.q)))
        rec.fail("Q^T D Q does not enlarge B in case " + std::to_string(i));
      if (out.d.size() != a.size() + 2 || out.d.size() != b.size() + 2) rec.fail("wrong size in case " + std::to_string(i));
      rec.add(out.d.key());
      rec.add(to_json(SMove{out.q}));
      rec.add(to_json(SMove{out.a_to_d}));
      rec.add(to_json(SMove{out.b_to_qdq}));
    } catch (const std::exception& ex) {
      rec.fail("case " + std::to_string(i) + ": " + ex.what());
    }
  }
  return rec.finish("200 local minima (100 with m = 2, 100 with m = 3) lifted, both witnesses replay");
}

Outcome commute(const Context&) {
  Recorder rec;
  testing::Rng rng(1003);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = i % 2 == 0 ? 2 : 3;
    const auto b = testing::random_seifert(rng, m, 6, 3);
    const auto p = testing::random_congruence(rng, b.block_sizes(), 4);
    const auto c = apply_congruence(b, p);
    const auto red = testing::random_enlargement(rng, c, 3);
    const auto a = apply_enlargement(c, red);
    try {
      const auto out = commute_reduction_congruence(a, red, p);
      if (!(apply_reduction(apply_congruence(a, out.q), out.reduction) == b))
        rec.fail("reduction after Q misses B in case " + std::to_string(i));
      if (!(out.b == b)) rec.fail("reported B differs in case " + std::to_string(i));
      rec.add(to_json(SMove{out.q}));
      rec.add(to_json(SMove{out.reduction}));
    } catch (const std::exception& ex) {
      rec.fail("case " + std::to_string(i) + ": " + ex.what());
    }
  }
  return rec.finish("200 reductions commuted past a congruence, all replay to B");
}

MoveSequence random_sequence(testing::Rng& rng) {
  const auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
  auto start = testing::random_seifert(rng, m, 4, 2);
  start = apply_enlargement(start, testing::random_enlargement(rng, start, 2));
  MoveSequence seq{start, {}};
  SeifertMatrix cur = start;
  const auto len = static_cast<int>(testing::uniform(rng, 1, 6));
  for (int step = 0; step < len; ++step) {
    const long roll = testing::uniform(rng, 0, 99);
    const auto reductions = find_reductions(cur);
    if (roll < 45 && !reductions.empty()) {
      const auto& r = reductions[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(reductions.size()) - 1))];
      seq.moves.emplace_back(Reduction{r.k, r.pos_u, r.pos_v});
    } else if (roll < 80) {
      seq.moves.emplace_back(testing::random_enlargement(rng, cur, 2));
    } else {
      seq.moves.emplace_back(testing::random_congruence(rng, cur.block_sizes(), 2));
    }
    cur = apply_move(cur, seq.moves.back());
  }
  return seq;
}

Outcome normalization(const Context&) {
  Recorder rec;
  testing::Rng rng(1004);
  int non_monotone = 0;
  for (int i = 0; i < 100; ++i) {
    const auto seq = random_sequence(rng);
    if (!is_monotone(seq.moves)) ++non_monotone;
    try {
      const auto end = replay(seq).back();
      const auto out = normalize_sequence(seq);
      const auto path = replay(out);
      if (!(out.start == seq.start)) rec.fail("start changed in case " + std::to_string(i));
      if (!(path.back() == end)) rec.fail("end changed in case " + std::to_string(i));
      if (!is_monotone(out.moves)) rec.fail("not single-maximum in case " + std::to_string(i));
      rec.add(to_json(out));
    } catch (const std::exception& ex) {
      rec.fail("case " + std::to_string(i) + ": " + ex.what());
    }
  }
  if (non_monotone < 10) rec.fail("only " + std::to_string(non_monotone) + " inputs had a local minimum");
  return rec.finish("100 random sequences of at most 6 moves (" + std::to_string(non_monotone) +
                    " with a local minimum) normalized with both endpoints preserved");
}

Outcome good_basis(const Context&) {
  Recorder rec;
  double worst = 0;
  int queries = 0;
  auto timed = [&](const SeifertMatrix& a) {
    Timer t;
    auto g = good_basis_form_check(a);
    worst = std::max(worst, t.seconds());
    ++queries;
    return g;
  };
  for (std::size_t m = 0; m <= 4; ++m) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> eps;
      for (std::size_t i = 0; i < m; ++i) eps.push_back(static_cast<int>((mask >> i) & 1u));
      const auto g = timed(whitehead_double_matrix(m, eps));
      if (!g) {
        rec.fail("Whitehead double matrix m=" + std::to_string(m) + " rejected");
        continue;
      }
      bool identity = g->order.size() == m && g->signs == eps;
      for (std::size_t i = 0; identity && i < m; ++i) identity = g->order[i] == PairRef{i, 0, false};
      if (!identity) rec.fail("non-identity ordering for m=" + std::to_string(m));
      rec.add(to_json(*g));
    }
  }
  if (timed(trefoil_matrix())) rec.fail("trefoil accepted");
  const auto stair = timed(matrix_from_json(load_catalog_entry("staircase-7", default_catalog_dir())));
  if (!stair) {
    rec.fail("staircase with entries 7 rejected");
  } else {
    bool identity = stair->order.size() == 3;
    for (std::size_t i = 0; identity && i < 3; ++i) identity = stair->order[i] == PairRef{0, i, false};
    if (!identity) rec.fail("staircase ordering is not the identity");
    rec.add(to_json(*stair));
  }
  if (worst >= 1.0) rec.fail("slowest query " + fmt_seconds(worst));
  return rec.finish(std::to_string(queries) + " queries (31 Whitehead doubles, trefoil, staircase), slowest " +
                    fmt_seconds(worst));
}

Outcome mu_oracle(const Context&) {
  Recorder rec;
  double worst = 0;
  auto mu = [&](const LinkDiagram& d, const MultiIndex& index, std::size_t depth = 0) {
    Timer t;
    auto v = mu_bar(d, index, depth);
    worst = std::max(worst, t.seconds());
    rec.add(index_to_string(index) + "=" + to_string(v.value) + "/" + to_string(v.indeterminacy) + ";");
    return v;
  };
  const auto dir = default_catalog_dir();
  auto load = [&](const std::string& name) { return diagram_from_json(load_catalog_entry(name, dir)); };

  const auto hopf = mu(load("hopf"), {0, 1});
  if (!(hopf.indeterminacy == 0 && (hopf.value == 1 || hopf.value == -1))) rec.fail("Hopf mu(12) = " + to_string(hopf.value));

  const auto whitehead = load("whitehead-link");
  const auto w12 = mu(whitehead, {0, 1});
  if (!(w12 == MuValue{0, 0})) rec.fail("Whitehead mu(12) = " + to_string(w12.value));
  const long long oracle = testing::coeff(testing::brute_magnus(testing::whitehead_longitude_2(), 3), "112");
  if (oracle != 1 && oracle != -1) rec.fail("hand longitude gives " + std::to_string(oracle));
  const auto w1122 = mu(whitehead, {0, 0, 1, 1}, 4);
  if (!(w1122 == MuValue{oracle, 0})) rec.fail("Whitehead mu(1122) = " + to_string(w1122.value) + ", oracle " + std::to_string(oracle));

  const auto b123 = mu(load("borromean"), {0, 1, 2});
  if (!(b123.indeterminacy == 0 && (b123.value == 1 || b123.value == -1))) rec.fail("Borromean mu(123) = " + to_string(b123.value));

  for (std::size_t n = 2; n <= 4; ++n) {
    const auto u = LinkDiagram::unlink(n);
    Timer t;
    const auto v = is_homotopically_trivial(u);
    worst = std::max(worst, t.seconds());
    for (const auto& [index, value] : v.table)
      if (!(value == MuValue{0, 0})) rec.fail(std::to_string(n) + "-unlink mu(" + index_to_string(index) + ") non-zero");
    rec.add(to_json(v.table));
    if (!(mu(u, {0, 0, 1, 1}, 4) == MuValue{0, 0})) rec.fail("unlink mu(1122) non-zero");
  }
  if (worst >= 1.0) rec.fail("slowest evaluation " + fmt_seconds(worst));
  return rec.finish("Hopf mu(12) = " + to_string(hopf.value) + ", Whitehead mu(12) = 0, mu(1122) = " +
                    to_string(w1122.value) + " (hand oracle " + std::to_string(oracle) + "), Borromean mu(123) = " +
                    to_string(b123.value) + ", unlinks zero; slowest " + fmt_seconds(worst));
}

Outcome homotopy(const Context&) {
  Recorder rec;
  Timer t;
  const auto dir = default_catalog_dir();
  auto load = [&](const std::string& name) { return diagram_from_json(load_catalog_entry(name, dir)); };
  const auto w = is_homotopically_trivial(load("whitehead-link"));
  if (!w.trivial) rec.fail("Whitehead link reported non-trivial");
  rec.add(to_json(w));
  const auto b = is_homotopically_trivial(load("borromean"));
  if (b.trivial) rec.fail("Borromean rings reported trivial");
  rec.add(to_json(b));
  int agree = 0;
  for (const std::string name : {"hopf", "hopf-negative", "torus-link-2-4", "unlink-2", "whitehead-link"}) {
    const auto d = load(name);
    const auto v = is_ht_plus_pair({d, d.labels()});
    const bool expected = d.linking_number(0, 1) == 0;
    if (v.trivial == expected) {
      ++agree;
    } else {
      rec.fail(name + ": ht+ " + (v.trivial ? "true" : "false") + " but lk = " + std::to_string(d.linking_number(0, 1)));
    }
    rec.add(to_json(v));
  }
  const double s = t.seconds();
  if (s >= 5.0) rec.fail("took " + fmt_seconds(s));
  return rec.finish("Whitehead trivial, Borromean non-trivial, (J,J) ht+ matches lk = 0 on " + std::to_string(agree) +
                    "/5 catalog links in " + fmt_seconds(s));
}

const CheckNode* find_node(const CheckNode& n, const std::string& name) {
  if (n.name == name) return &n;
  for (const auto& c : n.children)
    if (const auto* hit = find_node(c, name)) return hit;
  return nullptr;
}

const CheckNode* find_node(const Certificate& c, const std::string& name) {
  for (const auto& n : c.checks)
    if (const auto* hit = find_node(n, name)) return hit;
  return nullptr;
}

Outcome end_to_end(const Context& ctx) {
  Recorder rec;
  const auto dir = default_catalog_dir();
  double worst = 0;

  Timer t1;
  const auto lbeta = certify_theorem_a(bundle_from_json(load_catalog_entry("l-beta", dir)));
  worst = std::max(worst, t1.seconds());
  if (lbeta.verdict != Verdict::certified_freely_slice) rec.fail("L(beta) verdict " + to_string(lbeta.verdict));
  int zero_tables = 0;
  for (const std::string name : {"K-with-a1", "K-with-b1", "K-with-a2", "K-with-b2"}) {
    const auto* n = find_node(lbeta, name);
    if (!n || !n->homotopy) {
      rec.fail(name + " missing");
      continue;
    }
    bool zero = n->homotopy->trivial && !n->homotopy->table.empty();
    for (const auto& [index, value] : n->homotopy->table) zero = zero && value == MuValue{0, 0};
    if (zero) ++zero_tables; else rec.fail(name + " table not all zero");
  }
  rec.add(to_json(lbeta));

  Timer t2;
  const auto wdb = certify_theorem_a(bundle_from_json(load_catalog_entry("wd-borromean", dir)));
  worst = std::max(worst, t2.seconds());
  if (wdb.verdict != Verdict::hypothesis_failed) rec.fail("Whitehead double of Borromean verdict " + to_string(wdb.verdict));
  const auto* leaf = find_node(wdb, "K-with-a1");
  const bool witness_ok = leaf && leaf->status == CheckStatus::failed && leaf->homotopy && leaf->homotopy->witness &&
                          *leaf->homotopy->witness == MultiIndex{0, 1, 2};
  if (!witness_ok) rec.fail("failing leaf does not carry mu(123)");
  rec.add(to_json(wdb));

  std::string cli_note;
  if (!ctx.cli.empty()) {
    const auto bundle = (ctx.work / "l-beta.json").string();
    const auto cert = (ctx.work / "l-beta.cert.json").string();
    const auto wd = (ctx.work / "wd-borromean.json").string();
    const int export_code = run_cli(ctx, "catalog export l-beta -o \"" + bundle + "\"");
    const int ok_code = run_cli(ctx, "certify \"" + bundle + "\" -o \"" + cert + "\"");
    run_cli(ctx, "catalog export wd-borromean -o \"" + wd + "\"");
    const int fail_code = run_cli(ctx, "certify \"" + wd + "\"");
    if (export_code != 0) rec.fail("catalog export exit " + std::to_string(export_code));
    if (ok_code != 0) rec.fail("gbl certify L(beta) exit " + std::to_string(ok_code));
    if (fail_code != 2) rec.fail("gbl certify Whitehead double of Borromean exit " + std::to_string(fail_code));
    cli_note = "; CLI exit codes " + std::to_string(ok_code) + " and " + std::to_string(fail_code);
  }
  if (worst >= 30.0) rec.fail("slowest certification " + fmt_seconds(worst));
  return rec.finish("L(beta) certified with " + std::to_string(zero_tables) +
                    "/4 zero derived tables; Whitehead double of Borromean fails at mu(123)" + cli_note + "; slowest " +
                    fmt_seconds(worst));
}

using Criterion = std::function<Outcome(const Context&)>;

Outcome determinism(const Context& ctx, const std::vector<Criterion>& criteria, const std::vector<Outcome>& first) {
  Recorder rec;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto again = criteria[i](ctx);
    if (again.artifact != first[i].artifact) rec.fail("criterion " + std::to_string(i + 1) + " artifacts differ");
  }
  std::string cli_note;
  if (!ctx.cli.empty()) {
    const auto bundle = (ctx.work / "l-beta.json").string();
    std::vector<std::string> outputs;
    for (int run = 0; run < 2; ++run) {
      const auto cert = (ctx.work / ("repeat-" + std::to_string(run) + ".json")).string();
      const auto moves = (ctx.work / ("repeat-moves-" + std::to_string(run) + ".json")).string();
      const auto matrix = (ctx.work / "wd-matrix-3.json").string();
      run_cli(ctx, "catalog export wd-matrix-3 -o \"" + matrix + "\"");
      run_cli(ctx, "certify \"" + bundle + "\" -o \"" + cert + "\"");
      run_cli(ctx, "reduce \"" + matrix + "\" -o \"" + moves + "\"");
      try {
        outputs.push_back(read_file(cert) + read_file(moves));
      } catch (const std::exception& ex) {
        rec.fail(ex.what());
      }
    }
    if (outputs.size() == 2 && outputs[0] != outputs[1]) rec.fail("CLI outputs differ between runs");
    cli_note = " and repeated CLI outputs";
  }
  return rec.finish("criteria 1-8 rerun with byte-identical artifacts" + cli_note);
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  ctx.work = fs::temp_directory_path() / "gbl-acceptance";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      ctx.cli = argv[++i];
    } else if (arg == "--work" && i + 1 < argc) {
      ctx.work = argv[++i];
    } else {
      std::cerr << "usage: gbl_acceptance [--cli PATH] [--work DIR]\n";
      return 64;
    }
  }
  fs::create_directories(ctx.work);

  const std::vector<std::pair<std::string, Criterion>> named = {
      {"move round trip", move_round_trip},
      {"local minimum to maximum", min_to_max},
      {"reduction past congruence", commute},
      {"sequence normalization", normalization},
      {"good basis form", good_basis},
      {"mu-bar oracle table", mu_oracle},
      {"homotopy verdicts", homotopy},
      {"end-to-end certification", end_to_end},
  };
  std::vector<Criterion> criteria;
  std::vector<Outcome> outcomes;
  bool all = true;
  auto report = [&](std::size_t n, const std::string& name, const Outcome& o) {
    std::cout << "criterion " << n << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << "\n";
    all = all && o.pass;
  };
  for (std::size_t i = 0; i < named.size(); ++i) {
    criteria.push_back(named[i].second);
    Outcome o;
    try {
      o = named[i].second(ctx);
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("threw: ") + ex.what();
    }
    report(i + 1, named[i].first, o);
    outcomes.push_back(o);
  }
  Outcome det;
  try {
    det = determinism(ctx, criteria, outcomes);
  } catch (const std::exception& ex) {
    det.pass = false;
    det.detail = std::string("threw: ") + ex.what();
  }
  report(9, "determinism", det);
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
