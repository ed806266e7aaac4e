#pragma once

#include "gbl/s_moves.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gbl {

enum class SearchStatus {
  found,
  /// Every choice was explored without reaching the target. For reduce_to_null
  /// this rules out elementary reductions in the given basis only; it says
  /// nothing about S-equivalence after a change of basis.
  exhausted,
  budget_exceeded,
};

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<MoveSequence> sequence;  // present iff status == found, replay-verified
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

struct ReduceOptions {
  std::uint64_t budget = 1'000'000;
  /// Only accept the pattern with the new pair at the front of the block,
  /// i.e. reductions that need no permutation congruence.
  bool front_only = false;
};

/// Depth-first search over elementary S-reductions (no congruences, no
/// enlargements) from a to the null matrix, memoizing dead ends.
SearchResult reduce_to_null(const SeifertMatrix& a, const ReduceOptions& options = {});

/// One basis pair (a_i, b_i): the rows 2t and 2t+1 of a block, with flipped
/// meaning that row 2t+1 plays a_i.
struct PairRef {
  std::size_t component = 0;
  std::size_t index = 0;  // pair index inside the block
  bool flipped = false;

  friend bool operator==(const PairRef&, const PairRef&) = default;
};

struct GoodBasisOrdering {
  std::vector<PairRef> order;  // a_1 b_1, a_2 b_2, ... of the staircase form
  std::vector<int> signs;      // eps_i = entry (a_i, b_i)
  /// Elementary reductions peeling the pairs from last to first; replays to null.
  MoveSequence reductions;
};

/// Looks for an ordering of the basis pairs that puts the matrix into the
/// staircase form: diagonal pair blocks [[0, e], [1 - e, 0]], the a-row and
/// a-column of each pair zero outside its own pair and the later pairs' b-entries,
/// and each b-row equal to its b-column outside the pair. The last pair of the
/// ordering is then an elementary S-reduction, and so on down to the null matrix.
/// Throws StructuralError on an odd block size.
std::optional<GoodBasisOrdering> good_basis_form_check(const SeifertMatrix& a);

struct EquivalenceOptions {
  /// Largest matrix side visited; 0 means max(side(A), side(B)) + 4.
  std::size_t size_cap = 0;
  /// Largest absolute entry of any visited matrix.
  long entry_cap = 8;
  /// Entries of the x-rows tried for enlargements range over [-bound, bound].
  long enlargement_row_bound = 1;
  std::uint64_t node_budget = 200'000;
};

/// Bidirectional breadth-first search through congruence generators
/// (transvections, adjacent swaps, sign changes within a block), enlargements
/// and reductions. A found path is replay-verified; anything else is inconclusive.
SearchResult s_equivalent_bounded(const SeifertMatrix& a, const SeifertMatrix& b,
                                  const EquivalenceOptions& options = {});

/// Reverses a replayable path: every move is replaced by its inverse.
MoveSequence reverse_sequence(const MoveSequence& seq);

}  // namespace gbl
