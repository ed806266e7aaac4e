#pragma once

#include "gbl/s_moves.hpp"

namespace gbl {

/// Output of replace_min_by_max: A enlarges to D, and Q^T D Q enlarges B.
struct MinToMax {
  SeifertMatrix d;
  Congruence q;
  Enlargement a_to_d;    // apply_enlargement(A, a_to_d) == D
  Enlargement b_to_qdq;  // apply_enlargement(B, b_to_qdq) == Q^T D Q
};

/// Turns a local minimum A \ C ~ C' / B into a local maximum A / D ~ Q^T D Q \ B.
///
/// reduction: C enlarges to A (apply_enlargement(C, reduction) == A).
/// p: C' = P^T C P.
/// enlargement: C' enlarges to B.
///
/// D adds the pair of the second enlargement to A with rows y_j P_j^{-1}
/// (zero on the pair removed by the first move), and Q is P_j on the old basis
/// and the identity on both new pairs. Works for any blocks and positions.
/// Throws WitnessError if the inputs do not replay.
MinToMax replace_min_by_max(const SeifertMatrix& a, const SeifertMatrix& c, const SeifertMatrix& c_prime,
                            const SeifertMatrix& b, const Enlargement& reduction, const Congruence& p,
                            const Enlargement& enlargement);

struct CommutedReduction {
  Congruence q;
  Enlargement reduction;  // apply_reduction(apply_congruence(A, q), reduction) == b
  SeifertMatrix b;
};

/// Given A \ P^T B P (witness: reduction) and P, produces Q and a reduction
/// with Q^T A Q \ B. Q is P_j^{-1} on the surviving basis and the identity on
/// the removed pair.
CommutedReduction commute_reduction_congruence(const SeifertMatrix& a, const Enlargement& reduction,
                                               const Congruence& p);

struct NormalizeOptions {
  /// Also push every congruence that follows the maximum in front of the
  /// reductions and merge adjacent congruences.
  bool fold_congruences = true;
};

/// Rewrites a replayable sequence so that every enlargement precedes every
/// reduction, keeping both endpoints bit-exact.
MoveSequence normalize_sequence(const MoveSequence& seq, const NormalizeOptions& options = {});

}  // namespace gbl
