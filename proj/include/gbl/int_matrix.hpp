#pragma once

#include "gbl/integer.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gbl {

/// Dense row-major matrix over the integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  /// Throws StructuralError on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<std::vector<Integer>> to_rows() const;

  IntMatrix transpose() const;
  IntMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
  /// Rows and columns picked by index lists, in the given order.
  IntMatrix select(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const;

  /// Exact determinant by fraction-free (Bareiss) elimination. Empty matrix has determinant 1.
  Integer determinant() const;
  bool is_unimodular() const;
  /// Integer inverse, present exactly when the matrix is square with determinant +-1.
  std::optional<IntMatrix> unimodular_inverse() const;

  bool is_zero() const;
  Integer max_abs() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix.
std::vector<Integer> row_times(const std::vector<Integer>& v, const IntMatrix& m);

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

}  // namespace gbl
