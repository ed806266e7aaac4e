#pragma once

#include "gbl/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gbl {

/// Square integer matrix partitioned into m x m blocks, one row/column group per
/// link component. Construction checks shape only; use validate() for the
/// boundary-link Seifert matrix conditions.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  /// Throws StructuralError when entries is not square or the block sizes do
  /// not sum to its side.
  SeifertMatrix(std::vector<std::size_t> block_sizes, IntMatrix entries);

  /// The null matrix: m components, every block empty.
  static SeifertMatrix null(std::size_t m);

  std::size_t components() const { return block_sizes_.size(); }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  std::size_t size() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  /// Global index of the first row of block i.
  std::size_t offset(std::size_t i) const;
  /// Block containing global index r.
  std::size_t block_of(std::size_t r) const;
  IntMatrix block(std::size_t i, std::size_t j) const;

  bool is_null() const { return size() == 0; }

  /// Byte-exact identity of the matrix, used as a memo key by the searches.
  std::string key() const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::size_t> block_sizes_;
  IntMatrix entries_;
};

struct Violation {
  std::string rule;  // "diagonal-unimodular" or "off-diagonal-transpose"
  std::size_t i = 0;
  std::size_t j = 0;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks det(A_ii - A_ii^T) = +-1 for every i and A_ij = A_ji^T for i != j.
ValidationReport validate(const SeifertMatrix& m);

/// Throws InvalidMatrixError listing the first violation.
void require_valid(const SeifertMatrix& m);

/// The blocks A_ii - A_ii^T, one per component.
std::vector<IntMatrix> intersection_form(const SeifertMatrix& m);

/// Block-diagonal sum of [[0, e], [1 - e, 0]], one pair per entry of eps.
/// assignment[t] names the component carrying pair t; empty means pair t lies on
/// component t (and then eps.size() must equal m).
SeifertMatrix whitehead_double_matrix(std::size_t m, const std::vector<int>& eps,
                                      const std::vector<std::size_t>& assignment = {});

std::string describe(const SeifertMatrix& m);

}  // namespace gbl
