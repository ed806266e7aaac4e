#include "gbl/s_moves.hpp"

#include "gbl/errors.hpp"

#include <string>

namespace gbl {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

void check_congruence_shape(const SeifertMatrix& a, const Congruence& p) {
  if (p.blocks.size() != a.components()) {
    throw StructuralError("congruence has " + str(p.blocks.size()) + " blocks, matrix has " +
                          str(a.components()) + " components");
  }
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& b = p.blocks[i];
    if (!b.is_square() || b.rows() != a.block_sizes()[i]) {
      throw StructuralError("congruence block " + str(i) + " does not match block size " +
                            str(a.block_sizes()[i]));
    }
  }
}

}  // namespace

Congruence Congruence::identity(const std::vector<std::size_t>& block_sizes) {
  Congruence c;
  for (auto n : block_sizes) c.blocks.push_back(IntMatrix::identity(n));
  return c;
}

IntMatrix Congruence::full() const { return block_diagonal(blocks); }

Congruence compose(const Congruence& p, const Congruence& q) {
  if (p.blocks.size() != q.blocks.size()) throw StructuralError("composing congruences of different shape");
  Congruence out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) out.blocks.push_back(p.blocks[i] * q.blocks[i]);
  return out;
}

Congruence inverse(const Congruence& p) {
  Congruence out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    auto inv = p.blocks[i].unimodular_inverse();
    if (!inv) throw WitnessError("congruence block " + str(i) + " is not unimodular");
    out.blocks.push_back(std::move(*inv));
  }
  return out;
}

SeifertMatrix apply_congruence(const SeifertMatrix& a, const Congruence& p) {
  check_congruence_shape(a, p);
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (!p.blocks[i].is_unimodular()) {
      throw WitnessError("congruence block " + str(i) + " has determinant " +
                         p.blocks[i].determinant().str() + ", expected +-1");
    }
  }
  const IntMatrix full = p.full();
  return SeifertMatrix(a.block_sizes(), full.transpose() * a.entries() * full);
}

SeifertMatrix apply_enlargement(const SeifertMatrix& a, const Enlargement& e) {
  const std::size_t m = a.components();
  if (e.k >= m) throw StructuralError("enlargement targets block " + str(e.k) + " of " + str(m));
  if (!e.legal_signs()) {
    throw WitnessError("illegal (eps, eps') = (" + std::to_string(e.eps) + ", " + std::to_string(e.eps_prime) + ")");
  }
  if (e.rows.size() != m) throw StructuralError("enlargement needs one row vector per component");
  for (std::size_t j = 0; j < m; ++j) {
    if (e.rows[j].size() != a.block_sizes()[j]) {
      throw StructuralError("enlargement row " + str(j) + " has length " + str(e.rows[j].size()) +
                            ", block has size " + str(a.block_sizes()[j]));
    }
  }
  const std::size_t nk = a.block_sizes()[e.k] + 2;
  if (e.pos_u >= nk || e.pos_v >= nk || e.pos_u == e.pos_v) {
    throw StructuralError("enlargement positions (" + str(e.pos_u) + ", " + str(e.pos_v) +
                          ") invalid for a block of size " + str(nk));
  }

  std::vector<std::size_t> sizes = a.block_sizes();
  sizes[e.k] += 2;
  const std::size_t n = a.size() + 2;
  const std::size_t base = a.offset(e.k);
  const std::size_t gu = base + e.pos_u;
  const std::size_t gv = base + e.pos_v;

  // old global index -> new global index
  std::vector<std::size_t> to_new(a.size());
  {
    std::size_t next = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (g == gu || g == gv) continue;
      to_new[next++] = g;
    }
  }

  IntMatrix b(n, n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) b(to_new[i], to_new[j]) = a(i, j);
  b(gu, gv) = e.eps_prime;
  b(gv, gu) = e.eps;
  std::size_t old = 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& x : e.rows[j]) {
      b(gv, to_new[old]) = x;
      b(to_new[old], gv) = x;
      ++old;
    }
  }
  return SeifertMatrix(sizes, std::move(b));
}

std::optional<Enlargement> match_reduction(const SeifertMatrix& b, const Reduction& r) {
  if (r.k >= b.components()) return std::nullopt;
  const std::size_t nk = b.block_sizes()[r.k];
  if (r.u >= nk || r.v >= nk || r.u == r.v) return std::nullopt;
  const std::size_t base = b.offset(r.k);
  const std::size_t gu = base + r.u;
  const std::size_t gv = base + r.v;
  const std::size_t n = b.size();

  for (std::size_t c = 0; c < n; ++c) {
    if (c == gv) continue;
    if (b(gu, c) != 0 || b(c, gu) != 0) return std::nullopt;
  }
  Enlargement w;
  w.k = r.k;
  if (b(gu, gv) > 1 || b(gu, gv) < 0 || b(gv, gu) > 1 || b(gv, gu) < 0) return std::nullopt;
  w.eps_prime = static_cast<int>(b(gu, gv));
  w.eps = static_cast<int>(b(gv, gu));
  if (!w.legal_signs()) return std::nullopt;
  if (b(gv, gv) != 0) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    if (c == gu || c == gv) continue;
    if (b(gv, c) != b(c, gv)) return std::nullopt;
  }
  w.pos_u = r.u;
  w.pos_v = r.v;
  w.rows.resize(b.components());
  for (std::size_t j = 0; j < b.components(); ++j) {
    const std::size_t off = b.offset(j);
    for (std::size_t t = 0; t < b.block_sizes()[j]; ++t) {
      const std::size_t g = off + t;
      if (g == gu || g == gv) continue;
      w.rows[j].push_back(b(gv, g));
    }
  }
  return w;
}

std::vector<Enlargement> find_reductions(const SeifertMatrix& b, bool front_only) {
  std::vector<Enlargement> out;
  for (std::size_t k = 0; k < b.components(); ++k) {
    const std::size_t nk = b.block_sizes()[k];
    if (nk < 2) continue;
    if (front_only) {
      if (auto w = match_reduction(b, {k, 0, 1})) out.push_back(std::move(*w));
      continue;
    }
    for (std::size_t u = 0; u < nk; ++u) {
      for (std::size_t v = u + 1; v < nk; ++v) {
        if (auto w = match_reduction(b, {k, u, v})) {
          out.push_back(std::move(*w));
        } else if (auto w2 = match_reduction(b, {k, v, u})) {
          out.push_back(std::move(*w2));
        }
      }
    }
  }
  return out;
}

SeifertMatrix apply_reduction(const SeifertMatrix& b, const Reduction& r) {
  if (!match_reduction(b, r)) {
    throw WitnessError("no S-reduction pattern at block " + str(r.k) + " positions (" + str(r.u) + ", " +
                       str(r.v) + ")");
  }
  const std::size_t base = b.offset(r.k);
  const std::size_t gu = base + r.u;
  const std::size_t gv = base + r.v;
  std::vector<std::size_t> keep;
  for (std::size_t g = 0; g < b.size(); ++g)
    if (g != gu && g != gv) keep.push_back(g);
  std::vector<std::size_t> sizes = b.block_sizes();
  sizes[r.k] -= 2;
  return SeifertMatrix(sizes, b.entries().select(keep, keep));
}

SeifertMatrix apply_reduction(const SeifertMatrix& b, const Enlargement& witness) {
  const Reduction r{witness.k, witness.pos_u, witness.pos_v};
  auto matched = match_reduction(b, r);
  if (!matched || !(*matched == witness)) {
    throw WitnessError("reduction witness does not match the matrix at block " + str(witness.k));
  }
  return apply_reduction(b, r);
}

SeifertMatrix apply_move(const SeifertMatrix& a, const SMove& move) {
  return std::visit(
      [&](const auto& mv) -> SeifertMatrix {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, Congruence>) {
          return apply_congruence(a, mv);
        } else if constexpr (std::is_same_v<T, Enlargement>) {
          return apply_enlargement(a, mv);
        } else {
          return apply_reduction(a, mv);
        }
      },
      move);
}

std::vector<SeifertMatrix> replay(const MoveSequence& seq) {
  std::vector<SeifertMatrix> path{seq.start};
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    try {
      path.push_back(apply_move(path.back(), seq.moves[i]));
    } catch (const Error& e) {
      throw WitnessError("move " + str(i) + " does not replay: " + e.what());
    }
  }
  return path;
}

int size_delta(const SMove& move) {
  if (std::holds_alternative<Enlargement>(move)) return 2;
  if (std::holds_alternative<Reduction>(move)) return -2;
  return 0;
}

bool is_monotone(const std::vector<SMove>& moves) {
  bool seen_reduction = false;
  for (const auto& mv : moves) {
    if (std::holds_alternative<Reduction>(mv)) seen_reduction = true;
    if (std::holds_alternative<Enlargement>(mv) && seen_reduction) return false;
  }
  return true;
}

Congruence permutation_congruence(const std::vector<std::vector<std::size_t>>& perms) {
  Congruence c;
  for (const auto& perm : perms) {
    IntMatrix p(perm.size(), perm.size());
    for (std::size_t nw = 0; nw < perm.size(); ++nw) p(perm[nw], nw) = 1;
    c.blocks.push_back(std::move(p));
  }
  return c;
}

}  // namespace gbl
