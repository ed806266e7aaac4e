#include "gbl/int_matrix.hpp"

#include "gbl/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <utility>

namespace gbl {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.front().size();
  IntMatrix m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].size() != ncols) {
      throw StructuralError("ragged matrix: row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " entries, expected " +
                            std::to_string(ncols));
    }
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                               std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw StructuralError("submatrix out of range");
  }
  IntMatrix s(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) s(r, c) = (*this)(row0 + r, col0 + c);
  return s;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) s(r, c) = (*this)(row_idx[r], col_idx[c]);
  return s;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
  if (!is_square()) return false;
  const Integer d = determinant();
  return d == 1 || d == -1;
}

std::optional<IntMatrix> IntMatrix::unimodular_inverse() const {
  if (!is_unimodular()) return std::nullopt;
  const std::size_t n = rows_;
  // Gauss-Jordan over the rationals; the result is integral because det = +-1.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational((*this)(r, c));
    aug[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (aug[pivot][col] == 0) ++pivot;
    std::swap(aug[pivot], aug[col]);
    const Rational inv = Rational(1) / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = aug[r][n + c];
      if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
      out(r, c) = boost::multiprecision::numerator(v);
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& v : data_) {
    Integer a = boost::multiprecision::abs(v);
    if (a > best) best = a;
  }
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product size mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum size mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference size mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> row_times(const std::vector<Integer>& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw StructuralError("row vector length does not match matrix");
  std::vector<Integer> out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw StructuralError("block_diagonal expects square blocks");
    n += b.rows();
  }
  IntMatrix out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return out;
}

}  // namespace gbl
