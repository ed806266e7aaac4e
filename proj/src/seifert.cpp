#include "gbl/seifert.hpp"

#include "gbl/errors.hpp"

#include <numeric>
#include <sstream>

namespace gbl {

SeifertMatrix::SeifertMatrix(std::vector<std::size_t> block_sizes, IntMatrix entries)
    : block_sizes_(std::move(block_sizes)), entries_(std::move(entries)) {
  if (!entries_.is_square()) {
    throw StructuralError("matrix is " + std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()) + ", not square");
  }
  const std::size_t total = std::accumulate(block_sizes_.begin(), block_sizes_.end(), std::size_t{0});
  if (total != entries_.rows()) {
    throw StructuralError("block sizes sum to " + std::to_string(total) + " but the matrix side is " +
                          std::to_string(entries_.rows()));
  }
}

SeifertMatrix SeifertMatrix::null(std::size_t m) {
  return SeifertMatrix(std::vector<std::size_t>(m, 0), IntMatrix(0, 0));
}

std::size_t SeifertMatrix::offset(std::size_t i) const {
  std::size_t off = 0;
  for (std::size_t b = 0; b < i; ++b) off += block_sizes_.at(b);
  return off;
}

std::size_t SeifertMatrix::block_of(std::size_t r) const {
  std::size_t off = 0;
  for (std::size_t b = 0; b < block_sizes_.size(); ++b) {
    off += block_sizes_[b];
    if (r < off) return b;
  }
  throw StructuralError("index " + std::to_string(r) + " outside the matrix");
}

IntMatrix SeifertMatrix::block(std::size_t i, std::size_t j) const {
  return entries_.submatrix(offset(i), block_sizes_.at(i), offset(j), block_sizes_.at(j));
}

std::string SeifertMatrix::key() const {
  std::string k;
  for (auto b : block_sizes_) {
    k += std::to_string(b);
    k += ',';
  }
  k += '|';
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t c = 0; c < size(); ++c) {
      k += entries_(r, c).str();
      k += ',';
    }
  }
  return k;
}

ValidationReport validate(const SeifertMatrix& m) {
  ValidationReport report;
  const std::size_t n = m.components();
  for (std::size_t i = 0; i < n; ++i) {
    const IntMatrix a = m.block(i, i);
    const Integer det = (a - a.transpose()).determinant();
    if (det != 1 && det != -1) {
      report.violations.push_back(
          {"diagonal-unimodular", i, i, "det(A_ii - A_ii^T) = " + det.str() + " for block " + std::to_string(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.block(i, j) != m.block(j, i).transpose()) {
        report.violations.push_back({"off-diagonal-transpose", i, j,
                                     "A_" + std::to_string(i) + std::to_string(j) + " != A_" +
                                         std::to_string(j) + std::to_string(i) + "^T"});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

void require_valid(const SeifertMatrix& m) {
  const auto report = validate(m);
  if (!report.valid) {
    throw InvalidMatrixError("not a boundary link Seifert matrix: " + report.violations.front().detail);
  }
}

std::vector<IntMatrix> intersection_form(const SeifertMatrix& m) {
  require_valid(m);
  std::vector<IntMatrix> out;
  out.reserve(m.components());
  for (std::size_t i = 0; i < m.components(); ++i) {
    const IntMatrix a = m.block(i, i);
    out.push_back(a - a.transpose());
  }
  return out;
}

SeifertMatrix whitehead_double_matrix(std::size_t m, const std::vector<int>& eps,
                                      const std::vector<std::size_t>& assignment) {
  for (int e : eps) {
    if (e != 0 && e != 1) throw InvalidMatrixError("clasp sign must be 0 or 1, got " + std::to_string(e));
  }
  std::vector<std::size_t> owner = assignment;
  if (owner.empty()) {
    if (eps.size() != m) {
      throw StructuralError("default assignment needs one sign per component (" + std::to_string(m) +
                            "), got " + std::to_string(eps.size()));
    }
    owner.resize(m);
    std::iota(owner.begin(), owner.end(), std::size_t{0});
  }
  if (owner.size() != eps.size()) throw StructuralError("assignment and sign vector differ in length");

  std::vector<std::vector<IntMatrix>> per_block(m);
  for (std::size_t t = 0; t < eps.size(); ++t) {
    if (owner[t] >= m) throw StructuralError("pair assigned to missing component " + std::to_string(owner[t]));
    IntMatrix pair(2, 2);
    pair(0, 1) = eps[t];
    pair(1, 0) = 1 - eps[t];
    per_block[owner[t]].push_back(pair);
  }
  std::vector<IntMatrix> blocks;
  std::vector<std::size_t> sizes;
  for (auto& pairs : per_block) {
    sizes.push_back(2 * pairs.size());
    blocks.push_back(block_diagonal(pairs));
  }
  return SeifertMatrix(sizes, block_diagonal(blocks));
}

std::string describe(const SeifertMatrix& m) {
  std::ostringstream os;
  os << "m=" << m.components() << " blocks=(";
  for (std::size_t i = 0; i < m.components(); ++i) os << (i ? "," : "") << m.block_sizes()[i];
  os << ") " << m.entries().to_string();
  return os.str();
}

}  // namespace gbl
