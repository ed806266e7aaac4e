#pragma once

#include "gbl/seifert.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace gbl {

/// Block-diagonal change of basis diag(P_1, ..., P_m); applying it sends A to P^T A P.
struct Congruence {
  std::vector<IntMatrix> blocks;

  static Congruence identity(const std::vector<std::size_t>& block_sizes);
  IntMatrix full() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Blockwise product: applying compose(p, q) equals applying p and then q.
Congruence compose(const Congruence& p, const Congruence& q);
/// Blockwise inverse; throws WitnessError if some block is not unimodular.
Congruence inverse(const Congruence& p);

/// Witness for an S-enlargement at block k.
///
/// The two new basis vectors u, v land at positions pos_u, pos_v of the enlarged
/// block k; the remaining positions keep the old order. With (pos_u, pos_v) = (0, 1)
/// the result is the textbook block form
///
///   B_kk = [[0, eps', 0], [eps, 0, x_k], [0, x_k^T, A_kk]],  B_kj = [[0], [x_j], [A_kj]].
///
/// Other positions amount to the same move followed by a permutation congruence.
struct Enlargement {
  std::size_t k = 0;
  int eps = 1;
  int eps_prime = 0;
  /// rows[j] has the length of block j before the move.
  std::vector<std::vector<Integer>> rows;
  std::size_t pos_u = 0;
  std::size_t pos_v = 1;

  bool legal_signs() const { return (eps == 1 && eps_prime == 0) || (eps == 0 && eps_prime == 1); }
  bool front() const { return pos_u == 0 && pos_v == 1; }

  friend bool operator==(const Enlargement&, const Enlargement&) = default;
};

/// Removal of the basis pair (u, v) of block k; u, v are positions inside the block.
struct Reduction {
  std::size_t k = 0;
  std::size_t u = 0;
  std::size_t v = 1;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

using SMove = std::variant<Congruence, Enlargement, Reduction>;

struct MoveSequence {
  SeifertMatrix start;
  std::vector<SMove> moves;
};

SeifertMatrix apply_congruence(const SeifertMatrix& a, const Congruence& p);
SeifertMatrix apply_enlargement(const SeifertMatrix& a, const Enlargement& e);

/// If B matches the enlargement pattern with new vectors at (u, v) of block k,
/// returns the witness E with apply_enlargement(reduced B, E) == B.
std::optional<Enlargement> match_reduction(const SeifertMatrix& b, const Reduction& r);

/// Every elementary S-reduction of B, one per unordered position pair {u, v}
/// within a block. When both orientations of a pair match, the one with u < v is
/// reported. front_only restricts to (u, v) = (0, 1). Sorted by (k, u, v).
std::vector<Enlargement> find_reductions(const SeifertMatrix& b, bool front_only = false);

/// Throws WitnessError when the pattern does not match at apply time.
SeifertMatrix apply_reduction(const SeifertMatrix& b, const Reduction& r);
/// Same, and also checks that the full witness agrees with the matched pattern.
SeifertMatrix apply_reduction(const SeifertMatrix& b, const Enlargement& witness);

SeifertMatrix apply_move(const SeifertMatrix& a, const SMove& move);

/// Every matrix along the sequence, starting with seq.start. Throws WitnessError
/// naming the first move that fails.
std::vector<SeifertMatrix> replay(const MoveSequence& seq);

/// Matrix side length change of a move: +2, -2 or 0.
int size_delta(const SMove& move);

/// True when no enlargement appears after a reduction.
bool is_monotone(const std::vector<SMove>& moves);

/// Permutation congruence moving entries to new positions inside each block:
/// perms[j][new_pos] = old_pos.
Congruence permutation_congruence(const std::vector<std::vector<std::size_t>>& perms);

}  // namespace gbl
