#include "gbl/certify.hpp"

#include "gbl/errors.hpp"

#include <stdexcept>

namespace gbl {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

CheckNode homotopy_check(const std::string& name, const LinkDiagram& d, std::size_t depth) {
  CheckNode node{name, CheckStatus::passed, "", "", std::nullopt, {}};
  node.homotopy = is_homotopically_trivial(d, depth);
  if (node.homotopy->trivial) {
    node.detail = str(d.strand_count()) + "-component link, all non-repeating invariants vanish";
  } else {
    node.status = CheckStatus::failed;
    node.code = "homotopically-nontrivial";
    const auto& w = *node.homotopy->witness;
    node.detail = "mu(" + index_to_string(w) + ") = " + to_string(node.homotopy->table.at(w).value);
  }
  return node;
}

// Worst status among the children: failed beats inconclusive beats passed.
CheckStatus combine(const std::vector<CheckNode>& nodes) {
  CheckStatus out = CheckStatus::passed;
  for (const auto& n : nodes) {
    if (n.status == CheckStatus::failed) return CheckStatus::failed;
    if (n.status == CheckStatus::inconclusive) out = CheckStatus::inconclusive;
  }
  return out;
}

std::vector<std::size_t> pair_of_row(const SeifertMatrix& m) {
  std::vector<std::size_t> out;
  std::size_t pair = 0;
  for (auto size : m.block_sizes()) {
    for (std::size_t r = 0; r < size; ++r) out.push_back(pair + r / 2);
    pair += size / 2;
  }
  return out;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_freely_slice: return "certified-freely-slice";
    case Verdict::hypothesis_failed: return "hypothesis-failed";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CheckNode is_ht_plus_good_basis(const SeifertMatrix& matrix, const std::vector<DerivedPair>& derived,
                                std::size_t depth) {
  if (!good_basis_form_check(matrix)) throw Error("matrix is not in staircase form");
  const std::size_t pairs = matrix.size() / 2;
  if (derived.size() != pairs) {
    throw Error("expected derived links for " + str(pairs) + " pairs, got " + str(derived.size()));
  }

  CheckNode root{"homotopically-trivial-plus", CheckStatus::passed, "", "", std::nullopt, {}};
  CheckNode star{"star-entries-vanish", CheckStatus::passed, "", "", std::nullopt, {}};
  auto owner = pair_of_row(matrix);
  for (std::size_t r = 0; r < matrix.size() && star.status == CheckStatus::passed; ++r) {
    for (std::size_t c = 0; c < matrix.size(); ++c) {
      if (owner[r] != owner[c] && matrix(r, c) != 0) {
        star.status = CheckStatus::failed;
        star.code = "star-entries-nonzero";
        star.detail = "entry (" + str(r + 1) + "," + str(c + 1) + ") = " + to_string(matrix(r, c)) +
                      " links different pairs; the derived links claim a homotopically trivial+ basis";
        break;
      }
    }
  }
  root.children.push_back(star);

  for (std::size_t p = 0; p < pairs; ++p) {
    CheckNode pair{"pair-" + str(p + 1), CheckStatus::skipped, "", "", std::nullopt, {}};
    if (star.status == CheckStatus::passed) {
      pair.children.push_back(homotopy_check("K-with-a" + str(p + 1), derived[p].a, depth));
      pair.children.push_back(homotopy_check("K-with-b" + str(p + 1), derived[p].b, depth));
      pair.status = combine(pair.children);
    }
    root.children.push_back(std::move(pair));
  }
  root.status = star.status == CheckStatus::passed ? combine(root.children) : CheckStatus::failed;
  if (root.status == CheckStatus::failed) {
    root.code = star.status == CheckStatus::passed ? "homotopically-nontrivial" : star.code;
  }
  return root;
}

Certificate certify_theorem_a(const Bundle& bundle, const CertifyOptions& options) {
  Certificate cert;
  const SeifertMatrix& m = bundle.matrix;

  CheckNode valid{"seifert-matrix-valid", CheckStatus::passed, "", "", std::nullopt, {}};
  auto report = validate(m);
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    valid.status = CheckStatus::failed;
    valid.code = "invalid-seifert-matrix";
    valid.detail = v.rule + ": " + v.detail;
  }
  cert.checks.push_back(valid);

  CheckNode form{"good-basis-form", CheckStatus::skipped, "", "", std::nullopt, {}};
  if (valid.status == CheckStatus::passed) {
    bool odd = false;
    for (auto s : m.block_sizes()) odd = odd || s % 2 != 0;
    if (odd) {
      form.status = CheckStatus::failed;
      form.code = "odd-block";
      form.detail = "a block of odd size has no symplectic basis";
    } else if (auto ordering = good_basis_form_check(m)) {
      form.status = CheckStatus::passed;
      form.detail = str(ordering->order.size()) + " pairs reduce to the null matrix";
      cert.ordering = std::move(*ordering);
    } else {
      auto search = reduce_to_null(m, ReduceOptions{options.budget, false});
      if (search.found()) {
        form.status = CheckStatus::inconclusive;
        form.code = "reducible-outside-pair-layout";
        form.detail = "elementary reductions reach the null matrix, but not pair by pair in the given basis order";
      } else if (search.status == SearchStatus::budget_exceeded) {
        form.status = CheckStatus::inconclusive;
        form.code = "search-budget-exceeded";
        form.detail = "no staircase ordering; reduction search stopped after " + std::to_string(search.nodes) + " nodes";
      } else {
        form.status = CheckStatus::failed;
        form.code = "not-good-basis";
        form.detail = "no ordering of the pairs gives the staircase form and no reduction sequence exists";
      }
    }
  }
  cert.checks.push_back(form);

  CheckNode links{"homotopically-trivial-plus", CheckStatus::skipped, "", "", std::nullopt, {}};
  if (form.status == CheckStatus::passed) {
    try {
      links = is_ht_plus_good_basis(m, bundle.derived, options.depth);
    } catch (const std::invalid_argument& e) {
      links.status = CheckStatus::inconclusive;
      links.code = "depth-too-small";
      links.detail = e.what();
    } catch (const Error& e) {
      links.status = CheckStatus::failed;
      links.code = "missing-derived-links";
      links.detail = e.what();
    }
  }
  cert.checks.push_back(std::move(links));

  bool skipped = false;
  for (const auto& c : cert.checks) skipped = skipped || c.status == CheckStatus::skipped;
  switch (combine(cert.checks)) {
    case CheckStatus::failed: cert.verdict = Verdict::hypothesis_failed; break;
    case CheckStatus::passed:
      cert.verdict = skipped ? Verdict::inconclusive : Verdict::certified_freely_slice;
      break;
    default: cert.verdict = Verdict::inconclusive; break;
  }
  return cert;
}

Bundle build_l_beta_bundle(const LinkDiagram& beta) {
  if (!beta.is_string_link() || beta.strand_count() != 2) throw DiagramError("beta must be a 2-strand string link");
  if (beta.bottom() != std::vector<std::size_t>{0, 1}) throw DiagramError("beta must be a pure string link");
  int lk = closure(beta).linking_number(0, 1);
  if (lk != 0) {
    throw DiagramError("closure of beta has linking number " + std::to_string(lk) + "; the construction needs 0");
  }
  LinkDiagram b1 = closure(cable(beta, {2, 1}));
  LinkDiagram b2 = closure(cable(beta, {1, 2}));
  LinkDiagram a = closure(product(split_union(LinkDiagram::trivial(1), beta), cable(beta, {1, 2})));
  Bundle out;
  out.matrix = whitehead_double_matrix(2, {1, 1});
  out.derived = {DerivedPair{a, b1}, DerivedPair{a, b2}};
  return out;
}

}  // namespace gbl
