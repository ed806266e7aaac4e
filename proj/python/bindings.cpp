#include "gbl/catalog.hpp"
#include "gbl/certify.hpp"
#include "gbl/errors.hpp"
#include "gbl/json_io.hpp"
#include "gbl/milnor.hpp"
#include "gbl/s_rewrite.hpp"
#include "gbl/s_search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace gbl;

// Every entry point takes and returns JSON text in the file formats of the
// command-line tool; the Python package converts to and from dicts.

namespace {

std::string out(const Json& j) { return dump(j); }

SeifertMatrix matrix_arg(const std::string& text) { return matrix_from_json(parse_json(text)); }
LinkDiagram diagram_arg(const std::string& text) { return diagram_from_json(parse_json(text)); }

MultiIndex index_arg(const std::vector<int>& one_based) {
  MultiIndex idx;
  for (int i : one_based) {
    if (i < 1) throw ParseError("multi-index entries start at 1");
    idx.push_back(i - 1);
  }
  return idx;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seifert matrix S-calculus, link diagrams and Milnor invariants";
  m.attr("__version__") = GBL_VERSION;

  py::register_exception<Error>(m, "GblError");

  m.def("validate", [](const std::string& matrix) { return out(to_json(validate(matrix_arg(matrix)))); },
        py::arg("matrix"));

  m.def("whitehead_double_matrix",
        [](std::size_t components, const std::vector<int>& eps) { return out(to_json(whitehead_double_matrix(components, eps))); },
        py::arg("components"), py::arg("eps"));

  m.def("reduce_to_null",
        [](const std::string& matrix, std::uint64_t budget) {
          return out(to_json(reduce_to_null(matrix_arg(matrix), ReduceOptions{budget, false})));
        },
        py::arg("matrix"), py::arg("budget") = 1'000'000);

  m.def("good_basis",
        [](const std::string& matrix) -> py::object {
          auto g = good_basis_form_check(matrix_arg(matrix));
          if (!g) return py::none();
          return py::str(out(to_json(*g)));
        },
        py::arg("matrix"));

  m.def("replay",
        [](const std::string& moves) {
          auto path = replay(moves_from_json(parse_json(moves)));
          return out(to_json(path.back()));
        },
        py::arg("moves"), "End matrix of a move sequence; raises GblError if a move does not replay.");

  m.def("normalize",
        [](const std::string& moves) { return out(to_json(normalize_sequence(moves_from_json(parse_json(moves))))); },
        py::arg("moves"));

  m.def("mu_bar",
        [](const std::string& diagram, const std::vector<int>& index, std::size_t depth) {
          auto v = mu_bar(diagram_arg(diagram), index_arg(index), depth);
          Json j;
          j["value"] = to_json(v.value);
          j["indeterminacy"] = to_json(v.indeterminacy);
          return out(j);
        },
        py::arg("diagram"), py::arg("index"), py::arg("depth") = 0);

  m.def("homotopy",
        [](const std::string& diagram, std::size_t depth) {
          return out(to_json(is_homotopically_trivial(diagram_arg(diagram), depth)));
        },
        py::arg("diagram"), py::arg("depth") = 0);

  m.def("ht_plus",
        [](const std::string& diagram, std::vector<std::string> sublink, std::size_t depth) {
          auto d = diagram_arg(diagram);
          if (sublink.empty()) sublink = d.labels();
          return out(to_json(is_ht_plus_pair(PairedLink{d, sublink}, depth)));
        },
        py::arg("diagram"), py::arg("sublink") = std::vector<std::string>{}, py::arg("depth") = 0);

  m.def("certify",
        [](const std::string& bundle, std::size_t depth, std::uint64_t budget) {
          return out(to_json(certify_theorem_a(bundle_from_json(parse_json(bundle)), CertifyOptions{depth, budget})));
        },
        py::arg("bundle"), py::arg("depth") = 0, py::arg("budget") = 1'000'000);

  m.def("l_beta_bundle", [](const std::string& beta) { return out(to_json(build_l_beta_bundle(diagram_arg(beta)))); },
        py::arg("beta"));

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });

  m.def("catalog_entry",
        [](const std::string& name, const std::string& dir) {
          return out(load_catalog_entry(name, dir.empty() ? default_catalog_dir() : std::filesystem::path(dir)));
        },
        py::arg("name"), py::arg("dir") = "");
}
