#pragma once

#include "gbl/diagram.hpp"
#include "gbl/milnor.hpp"
#include "gbl/s_search.hpp"
#include "gbl/seifert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gbl {

/// The links K u a_j and K u b_j for one basis pair.
struct DerivedPair {
  LinkDiagram a;
  LinkDiagram b;
};

/// A Seifert matrix with one derived pair per basis pair, pairs numbered
/// block by block in matrix order.
struct Bundle {
  SeifertMatrix matrix;
  std::vector<DerivedPair> derived;
};

enum class CheckStatus { passed, failed, skipped, inconclusive };
std::string to_string(CheckStatus s);

struct CheckNode {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::string detail;
  /// Stable machine-readable reason for a failure, e.g. "star-entries-nonzero".
  std::string code;
  std::optional<HomotopyVerdict> homotopy;
  std::vector<CheckNode> children;
};

enum class Verdict { certified_freely_slice, hypothesis_failed, inconclusive };
std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  std::vector<CheckNode> checks;
  std::optional<GoodBasisOrdering> ordering;
  /// (role, sha256 hex) of every input file; filled in by the caller.
  std::vector<std::pair<std::string, std::string>> inputs;
};

/// Checks that every derived link is homotopically trivial after confirming
/// that the entries outside the 2x2 pair blocks of the staircase form vanish,
/// which a homotopically trivial+ good basis forces. The returned node is
/// failed with code "star-entries-nonzero" when that cross-check fails, and
/// the homotopy checks are then skipped. Throws Error when the matrix is not
/// in staircase form or a pair has no derived diagrams.
CheckNode is_ht_plus_good_basis(const SeifertMatrix& matrix, const std::vector<DerivedPair>& derived,
                                std::size_t depth = 0);

struct CertifyOptions {
  std::size_t depth = 0;             // 0: component count of each tested link
  std::uint64_t budget = 1'000'000;  // reduction search nodes when the staircase check fails
};

/// Verifies the combinatorial hypotheses of the free-sliceness criterion for
/// good boundary links: a valid matrix, a staircase (good basis) form, and
/// homotopically trivial derived links for every pair. Never throws on
/// mathematical failure; the failing leaf is recorded instead.
Certificate certify_theorem_a(const Bundle& bundle, const CertifyOptions& options = {});

/// Matrix and derived links of the two-component link assembled from a
/// 2-strand string link beta with zero-linking closure: one genus-one pair per
/// component, b_1 from the (2,1) cable, b_2 from the (1,2) cable, and both
/// a-curves from the product of (trivial strand (x) beta) with the (1,2) cable.
/// Throws DiagramError when beta is not a pure 2-strand string link or its
/// closure has non-zero linking number (the value is reported).
Bundle build_l_beta_bundle(const LinkDiagram& beta);

}  // namespace gbl
