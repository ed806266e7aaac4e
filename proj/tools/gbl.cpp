// Command-line front end: every subcommand reads JSON files, prints a short
// summary on stdout and optionally writes a JSON artifact with -o.

#include "gbl/catalog.hpp"
#include "gbl/certify.hpp"
#include "gbl/errors.hpp"
#include "gbl/json_io.hpp"
#include "gbl/milnor.hpp"
#include "gbl/s_rewrite.hpp"
#include "gbl/s_search.hpp"
#include "gbl/sha256.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gbl;

enum Exit : int { ok = 0, inconclusive = 1, failed = 2, usage = 64 };

// Thrown for unreadable inputs and bad flag values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string bytes;
  Json json;
  std::string sha256() const { return sha256_hex(bytes); }
};

Input read_input(const std::string& path) {
  Input in{path, "", {}};
  try {
    in.bytes = read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  in.json = parse_json(in.bytes);
  return in;
}

void emit(const std::string& output, const Json& artifact) {
  if (output.empty()) return;
  write_file(output, dump(artifact));
}

std::string matrix_summary(const SeifertMatrix& m) {
  std::ostringstream os;
  os << m.components() << " component(s), side " << m.size();
  return os.str();
}

void print_table(const MuTable& table) {
  for (const auto& [index, v] : table) {
    std::cout << "  mu(" << index_to_string(index) << ") = " << v.value;
    if (v.indeterminacy != 0) std::cout << " mod " << v.indeterminacy;
    std::cout << "\n";
  }
}

void print_checks(const std::vector<CheckNode>& nodes, int indent) {
  for (const auto& n : nodes) {
    std::cout << std::string(static_cast<std::size_t>(indent), ' ') << n.name << ": " << to_string(n.status);
    if (!n.code.empty()) std::cout << " [" << n.code << "]";
    if (!n.detail.empty()) std::cout << " - " << n.detail;
    std::cout << "\n";
    print_checks(n.children, indent + 2);
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::certified_freely_slice: return ok;
    case Verdict::hypothesis_failed: return failed;
    case Verdict::inconclusive: return inconclusive;
  }
  return inconclusive;
}

int report_certificate(const Certificate& cert, const std::string& output) {
  std::cout << "verdict: " << to_string(cert.verdict) << "\n";
  print_checks(cert.checks, 2);
  if (cert.verdict == Verdict::certified_freely_slice) {
    std::cout << "the supplied data satisfy the hypotheses of the free-sliceness theorem for good boundary links\n";
  }
  emit(output, to_json(cert));
  return verdict_exit(cert.verdict);
}

int cmd_validate(const std::string& path, const std::string& output) {
  auto m = matrix_from_json(read_input(path).json);
  auto report = validate(m);
  std::cout << matrix_summary(m) << ": " << (report.valid ? "valid" : "invalid") << "\n";
  for (const auto& v : report.violations) {
    std::cout << "  " << v.rule << " (" << v.i + 1 << "," << v.j + 1 << "): " << v.detail << "\n";
  }
  emit(output, to_json(report));
  return report.valid ? ok : failed;
}

int cmd_reduce(const std::string& path, std::uint64_t budget, const std::string& output) {
  auto m = matrix_from_json(read_input(path).json);
  require_valid(m);
  auto result = reduce_to_null(m, ReduceOptions{budget, false});
  std::cout << to_string(result.status) << " after " << result.nodes << " node(s)";
  if (result.found()) std::cout << ": " << result.sequence->moves.size() << " reduction(s) to the null matrix";
  std::cout << "\n";
  if (!result.found()) std::cout << "no reduction-only path found; this does not decide S-equivalence\n";
  emit(output, to_json(result));
  return result.found() ? ok : inconclusive;
}

int cmd_goodbasis(const std::string& path, const std::string& output) {
  auto m = matrix_from_json(read_input(path).json);
  require_valid(m);
  auto ordering = good_basis_form_check(m);
  if (!ordering) {
    std::cout << "no ordering of the basis pairs gives the staircase form\n";
    emit(output, Json(nullptr));
    return failed;
  }
  std::cout << "staircase ordering:";
  for (const auto& p : ordering->order) {
    std::cout << " (" << p.component + 1 << ":" << p.index + 1 << (p.flipped ? "'" : "") << ")";
  }
  std::cout << "\nsigns:";
  for (int s : ordering->signs) std::cout << " " << s;
  std::cout << "\n";
  emit(output, to_json(*ordering));
  return ok;
}

MoveSequence load_sequence(const std::string& matrix_path, const std::string& moves_path) {
  auto m = matrix_from_json(read_input(matrix_path).json);
  auto seq = moves_from_json(read_input(moves_path).json);
  if (!(seq.start == m)) throw WitnessError("move file starts from a different matrix");
  return seq;
}

int cmd_replay(const std::string& matrix_path, const std::string& moves_path, const std::string& output) {
  auto seq = load_sequence(matrix_path, moves_path);
  auto path = replay(seq);
  std::cout << "replayed " << seq.moves.size() << " move(s); end: " << matrix_summary(path.back()) << "\n";
  emit(output, to_json(path.back()));
  return ok;
}

int cmd_normalize(const std::string& matrix_path, const std::string& moves_path, const std::string& output) {
  auto seq = load_sequence(matrix_path, moves_path);
  auto normal = normalize_sequence(seq);
  std::cout << seq.moves.size() << " move(s) in, " << normal.moves.size() << " out; enlargements precede reductions\n";
  emit(output, to_json(normal));
  return ok;
}

LinkDiagram load_diagram(const std::string& path) { return diagram_from_json(read_input(path).json); }

int cmd_mu(const std::string& path, const std::string& index_text, std::size_t depth, const std::string& output) {
  auto d = load_diagram(path);
  auto index = parse_index(index_text);
  auto v = mu_bar(d, index, depth);
  std::cout << "mu(" << index_to_string(index) << ") = " << v.value << ", indeterminacy " << v.indeterminacy << "\n";
  Json j;
  j["index"] = Json::array();
  for (int i : index) j["index"].push_back(i + 1);
  j["value"] = to_json(v.value);
  j["indeterminacy"] = to_json(v.indeterminacy);
  emit(output, j);
  return ok;
}

int cmd_ht(const std::string& path, std::size_t depth, const std::string& output) {
  auto d = load_diagram(path);
  auto v = is_homotopically_trivial(d, depth);
  std::cout << (v.trivial ? "homotopically trivial" : "not homotopically trivial") << "\n";
  print_table(v.table);
  emit(output, to_json(v));
  return v.trivial ? ok : failed;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_htplus(const std::string& path, const std::string& sublink_text, std::size_t depth,
               const std::string& output) {
  auto d = load_diagram(path);
  PairedLink p{d, sublink_text.empty() ? d.labels() : split_labels(sublink_text)};
  auto v = is_ht_plus_pair(p, depth);
  std::cout << (v.trivial ? "homotopically trivial+" : "not homotopically trivial+") << "\n";
  for (const auto& c : v.components) {
    std::cout << " K with parallel of " << c.component << ": " << (c.verdict.trivial ? "trivial" : "nontrivial");
    if (c.verdict.witness) std::cout << " (mu(" << index_to_string(*c.verdict.witness) << ") != 0)";
    std::cout << "\n";
  }
  emit(output, to_json(v));
  return v.trivial ? ok : failed;
}

int cmd_certify(const std::string& path, const std::vector<std::string>& derived, const CertifyOptions& options,
                const std::string& output) {
  auto in = read_input(path);
  Bundle bundle;
  Certificate cert;
  std::vector<std::pair<std::string, std::string>> inputs;
  if (in.json.is_object() && in.json.contains("derived")) {
    if (!derived.empty()) throw UsageError("--derived cannot be combined with a bundle file");
    bundle = bundle_from_json(in.json);
    inputs.emplace_back("bundle", in.sha256());
  } else {
    bundle.matrix = matrix_from_json(in.json);
    inputs.emplace_back("matrix", in.sha256());
    for (std::size_t i = 0; i < derived.size(); ++i) {
      auto pair = read_input(derived[i]);
      if (!pair.json.is_object() || !pair.json.contains("a") || !pair.json.contains("b")) {
        throw ParseError(derived[i] + ": expected {\"a\": diagram, \"b\": diagram}");
      }
      bundle.derived.push_back(DerivedPair{diagram_from_json(pair.json["a"]), diagram_from_json(pair.json["b"])});
      inputs.emplace_back("derived-" + std::to_string(i + 1), pair.sha256());
    }
  }
  cert = certify_theorem_a(bundle, options);
  cert.inputs = inputs;
  return report_certificate(cert, output);
}

int cmd_lbeta(const std::string& path, const std::string& bundle_out, const CertifyOptions& options,
              const std::string& output) {
  auto in = read_input(path);
  auto beta = diagram_from_json(in.json);
  auto bundle = build_l_beta_bundle(beta);
  std::cout << "built bundle: " << matrix_summary(bundle.matrix) << ", " << bundle.derived.size() << " derived pair(s)\n";
  emit(bundle_out, to_json(bundle));
  auto cert = certify_theorem_a(bundle, options);
  cert.inputs = {{"beta", in.sha256()}};
  return report_certificate(cert, output);
}

int cmd_catalog_list(const std::string& dir) {
  for (const auto& e : load_manifest(dir)) {
    std::cout << e.name << "\t" << to_string(e.kind) << "\t" << e.description << "\n";
  }
  return ok;
}

int cmd_catalog_export(const std::string& name, const std::string& dir, const std::string& output) {
  Json j = load_catalog_entry(name, dir);
  if (output.empty()) {
    std::cout << dump(j);
  } else {
    write_file(output, dump(j));
    std::cout << "wrote " << output << "\n";
  }
  return ok;
}

int cmd_catalog_build(const std::string& dir) {
  write_catalog(dir);
  std::cout << "wrote " << catalog_entries().size() << " entries and manifest.json to " << dir << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert matrix S-calculus, Milnor invariants and free-sliceness certificates"};
  app.set_version_flag("--version", std::string(GBL_VERSION));
  app.require_subcommand(1);

  std::string input, second, output, index, sublink, bundle_out, name;
  std::string catalog_dir = gbl::default_catalog_dir().string();
  std::vector<std::string> derived;
  std::uint64_t budget = 1'000'000;
  std::size_t depth = 0;
  std::function<int()> run;

  auto add_output = [&](CLI::App* sub, const char* what) { sub->add_option("-o,--output", output, what); };

  auto* validate_cmd = app.add_subcommand("validate", "Check the boundary-link Seifert matrix conditions");
  validate_cmd->add_option("matrix", input, "matrix JSON file")->required();
  add_output(validate_cmd, "write the validation report");
  validate_cmd->callback([&] { run = [&] { return cmd_validate(input, output); }; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Search for elementary S-reductions to the null matrix");
  reduce_cmd->add_option("matrix", input, "matrix JSON file")->required();
  reduce_cmd->add_option("--budget", budget, "search node limit")->capture_default_str();
  add_output(reduce_cmd, "write the search result with its move sequence");
  reduce_cmd->callback([&] { run = [&] { return cmd_reduce(input, budget, output); }; });

  auto* goodbasis_cmd = app.add_subcommand("goodbasis", "Find a pair ordering giving the staircase form");
  goodbasis_cmd->add_option("matrix", input, "matrix JSON file")->required();
  add_output(goodbasis_cmd, "write the ordering, signs and reductions");
  goodbasis_cmd->callback([&] { run = [&] { return cmd_goodbasis(input, output); }; });

  auto* replay_cmd = app.add_subcommand("replay", "Replay and verify a move sequence");
  replay_cmd->add_option("matrix", input, "start matrix JSON file")->required();
  replay_cmd->add_option("moves", second, "move sequence JSON file")->required();
  add_output(replay_cmd, "write the end matrix");
  replay_cmd->callback([&] { run = [&] { return cmd_replay(input, second, output); }; });

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a move sequence so no enlargement follows a reduction");
  normalize_cmd->add_option("matrix", input, "start matrix JSON file")->required();
  normalize_cmd->add_option("moves", second, "move sequence JSON file")->required();
  add_output(normalize_cmd, "write the normalized sequence");
  normalize_cmd->callback([&] { run = [&] { return cmd_normalize(input, second, output); }; });

  auto* mu_cmd = app.add_subcommand("mu", "Milnor invariant of a closed link diagram");
  mu_cmd->add_option("diagram", input, "diagram JSON file")->required();
  mu_cmd->add_option("--index", index, "multi-index, e.g. 123 or 1,2,3")->required();
  mu_cmd->add_option("--depth", depth, "longest index supported (default: index length)");
  add_output(mu_cmd, "write value and indeterminacy");
  mu_cmd->callback([&] { run = [&] { return cmd_mu(input, index, depth, output); }; });

  auto* ht_cmd = app.add_subcommand("ht", "Link-homotopy triviality via non-repeating Milnor invariants");
  ht_cmd->add_option("diagram", input, "diagram JSON file")->required();
  ht_cmd->add_option("--depth", depth, "longest index evaluated (default: component count)");
  add_output(ht_cmd, "write verdict and invariant table");
  ht_cmd->callback([&] { run = [&] { return cmd_ht(input, depth, output); }; });

  auto* htplus_cmd = app.add_subcommand("htplus", "Homotopically trivial+ test of a link relative to a sublink");
  htplus_cmd->add_option("diagram", input, "diagram JSON file")->required();
  htplus_cmd->add_option("--sublink", sublink, "comma-separated component labels of K (default: all)");
  htplus_cmd->add_option("--depth", depth, "longest index evaluated (default: component count)");
  add_output(htplus_cmd, "write per-component verdicts");
  htplus_cmd->callback([&] { run = [&] { return cmd_htplus(input, sublink, depth, output); }; });

  CertifyOptions options;
  auto* certify_cmd = app.add_subcommand("certify", "Verify the free-sliceness hypotheses for a matrix and its derived links");
  certify_cmd->add_option("input", input, "bundle JSON, or matrix JSON together with --derived")->required();
  certify_cmd->add_option("--derived", derived, "one {\"a\", \"b\"} diagram pair file per basis pair, in order");
  certify_cmd->add_option("--depth", options.depth, "longest index evaluated (default: component count)");
  certify_cmd->add_option("--budget", options.budget, "reduction search node limit")->capture_default_str();
  add_output(certify_cmd, "write the certificate");
  certify_cmd->callback([&] { run = [&] { return cmd_certify(input, derived, options, output); }; });

  auto* lbeta_cmd = app.add_subcommand("lbeta", "Build and certify the cable construction from a 2-strand string link");
  lbeta_cmd->add_option("beta", input, "string link JSON file")->required();
  lbeta_cmd->add_option("--bundle", bundle_out, "write the generated bundle");
  lbeta_cmd->add_option("--depth", options.depth, "longest index evaluated (default: component count)");
  add_output(lbeta_cmd, "write the certificate");
  lbeta_cmd->callback([&] { run = [&] { return cmd_lbeta(input, bundle_out, options, output); }; });

  auto* catalog_cmd = app.add_subcommand("catalog", "Bundled example matrices, diagrams and bundles");
  catalog_cmd->add_option("--dir", catalog_dir, "catalog directory")->capture_default_str();
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List entries");
  list_cmd->callback([&] { run = [&] { return cmd_catalog_list(catalog_dir); }; });
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Print or write one entry after checking its checksum");
  export_cmd->add_option("name", name, "entry name")->required();
  add_output(export_cmd, "write the entry instead of printing it");
  export_cmd->callback([&] { run = [&] { return cmd_catalog_export(name, catalog_dir, output); }; });
  auto* build_cmd = catalog_cmd->add_subcommand("build", "Regenerate every entry and the manifest");
  build_cmd->add_option("dir", catalog_dir, "output directory")->required();
  build_cmd->callback([&] { run = [&] { return cmd_catalog_build(catalog_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  } catch (const InvalidMatrixError& e) {
    std::cerr << "invalid matrix: " << e.what() << "\n";
    return failed;
  } catch (const WitnessError& e) {
    std::cerr << "witness rejected: " << e.what() << "\n";
    return failed;
  } catch (const DiagramError& e) {
    std::cerr << "diagram rejected: " << e.what() << "\n";
    return failed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
}
