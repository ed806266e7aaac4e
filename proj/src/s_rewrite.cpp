#include "gbl/s_rewrite.hpp"

#include "gbl/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gbl {

namespace {

enum class Tag { basis, e_u, e_v, d_u, d_v };

struct Item {
  Tag tag;
  std::size_t idx = 0;  // basis index for Tag::basis
};

struct Special {
  std::size_t gap;  // number of basis vectors before it
  int group;        // 0: pair removed by the reduction, 1: pair added by the enlargement
  std::size_t pos;  // position in its own layout
  Tag tag;
};

std::size_t gap_of(std::size_t pos, std::size_t other) { return pos - (other < pos ? 1 : 0); }

// Merge basis vectors of one block with the specials, keeping the relative
// order each pair had in its own layout.
std::vector<Item> merged_layout(std::size_t basis, std::vector<Special> specials) {
  std::sort(specials.begin(), specials.end(),
            [](const Special& l, const Special& r) { return std::tie(l.gap, l.group, l.pos) < std::tie(r.gap, r.group, r.pos); });
  std::vector<Item> out;
  std::size_t s = 0;
  for (std::size_t g = 0; g <= basis; ++g) {
    while (s < specials.size() && specials[s].gap == g) out.push_back({specials[s++].tag, 0});
    if (g < basis) out.push_back({Tag::basis, g});
  }
  return out;
}

std::size_t position_of(const std::vector<Item>& layout, Tag tag) {
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i].tag == tag) return i;
  throw std::logic_error("tag missing from layout");
}

bool is_e(Tag t) { return t == Tag::e_u || t == Tag::e_v; }
bool is_d(Tag t) { return t == Tag::d_u || t == Tag::d_v; }

std::vector<Integer> scatter(const std::vector<Item>& layout, const std::vector<Integer>& basis_values,
                             bool (*skip)(Tag)) {
  std::vector<Integer> out;
  for (const auto& it : layout) {
    if (skip(it.tag)) continue;
    out.push_back(it.tag == Tag::basis ? basis_values[it.idx] : Integer(0));
  }
  return out;
}

void expect_equal(const SeifertMatrix& got, const SeifertMatrix& want, const char* what) {
  if (!(got == want)) throw WitnessError(std::string("witness does not replay: ") + what);
}

Congruence merge_congruences(const std::vector<const Congruence*>& cs, const std::vector<std::size_t>& sizes) {
  Congruence out = Congruence::identity(sizes);
  for (const auto* c : cs) out = compose(out, *c);
  return out;
}

bool is_identity(const Congruence& c) {
  for (const auto& b : c.blocks)
    if (b != IntMatrix::identity(b.rows())) return false;
  return true;
}

}  // namespace

MinToMax replace_min_by_max(const SeifertMatrix& a, const SeifertMatrix& c, const SeifertMatrix& c_prime,
                            const SeifertMatrix& b, const Enlargement& reduction, const Congruence& p,
                            const Enlargement& enlargement) {
  expect_equal(apply_enlargement(c, reduction), a, "C does not enlarge to A");
  expect_equal(apply_congruence(c, p), c_prime, "P^T C P differs from C'");
  expect_equal(apply_enlargement(c_prime, enlargement), b, "C' does not enlarge to B");

  const Congruence p_inv = inverse(p);
  const std::size_t m = c.components();
  const std::size_t k1 = reduction.k;
  const std::size_t k2 = enlargement.k;

  std::vector<std::vector<Item>> layout(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Special> specials;
    if (j == k1) {
      specials.push_back({gap_of(reduction.pos_u, reduction.pos_v), 0, reduction.pos_u, Tag::e_u});
      specials.push_back({gap_of(reduction.pos_v, reduction.pos_u), 0, reduction.pos_v, Tag::e_v});
    }
    if (j == k2) {
      specials.push_back({gap_of(enlargement.pos_u, enlargement.pos_v), 1, enlargement.pos_u, Tag::d_u});
      specials.push_back({gap_of(enlargement.pos_v, enlargement.pos_u), 1, enlargement.pos_v, Tag::d_v});
    }
    layout[j] = merged_layout(c.block_sizes()[j], std::move(specials));
  }

  // A / D: second pair, rows y_j P_j^{-1}, zero on the first pair.
  Enlargement a_to_d;
  a_to_d.k = k2;
  a_to_d.eps = enlargement.eps;
  a_to_d.eps_prime = enlargement.eps_prime;
  a_to_d.pos_u = position_of(layout[k2], Tag::d_u);
  a_to_d.pos_v = position_of(layout[k2], Tag::d_v);
  for (std::size_t j = 0; j < m; ++j) {
    a_to_d.rows.push_back(scatter(layout[j], row_times(enlargement.rows[j], p_inv.blocks[j]), is_d));
  }
  SeifertMatrix d = apply_enlargement(a, a_to_d);

  Congruence q;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& lay = layout[j];
    IntMatrix qj = IntMatrix::identity(lay.size());
    for (std::size_t r = 0; r < lay.size(); ++r) {
      if (lay[r].tag != Tag::basis) continue;
      for (std::size_t s = 0; s < lay.size(); ++s) {
        if (lay[s].tag != Tag::basis) continue;
        qj(r, s) = p.blocks[j](lay[r].idx, lay[s].idx);
      }
    }
    q.blocks.push_back(std::move(qj));
  }

  // B / Q^T D Q: first pair, rows x_j P_j, zero on the second pair.
  Enlargement b_to_qdq;
  b_to_qdq.k = k1;
  b_to_qdq.eps = reduction.eps;
  b_to_qdq.eps_prime = reduction.eps_prime;
  b_to_qdq.pos_u = position_of(layout[k1], Tag::e_u);
  b_to_qdq.pos_v = position_of(layout[k1], Tag::e_v);
  for (std::size_t j = 0; j < m; ++j) {
    b_to_qdq.rows.push_back(scatter(layout[j], row_times(reduction.rows[j], p.blocks[j]), is_e));
  }

  const SeifertMatrix qdq = apply_congruence(d, q);
  if (!(apply_enlargement(b, b_to_qdq) == qdq)) {
    throw std::logic_error("replace_min_by_max: constructed witness failed to replay");
  }
  return {std::move(d), std::move(q), std::move(a_to_d), std::move(b_to_qdq)};
}

CommutedReduction commute_reduction_congruence(const SeifertMatrix& a, const Enlargement& reduction,
                                               const Congruence& p) {
  const SeifertMatrix c = apply_reduction(a, reduction);
  if (p.blocks.size() != c.components()) throw StructuralError("congruence does not match the reduced matrix");
  const Congruence p_inv = inverse(p);
  SeifertMatrix b = apply_congruence(c, p_inv);

  const std::size_t m = a.components();
  Congruence q;
  Enlargement out = reduction;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t n = a.block_sizes()[j];
    std::vector<std::size_t> keep;
    for (std::size_t t = 0; t < n; ++t) {
      if (j == reduction.k && (t == reduction.pos_u || t == reduction.pos_v)) continue;
      keep.push_back(t);
    }
    IntMatrix qj = IntMatrix::identity(n);
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t s = 0; s < keep.size(); ++s) qj(keep[r], keep[s]) = p_inv.blocks[j](r, s);
    q.blocks.push_back(std::move(qj));
    out.rows[j] = row_times(reduction.rows[j], p_inv.blocks[j]);
  }
  if (!(apply_reduction(apply_congruence(a, q), out) == b)) {
    throw std::logic_error("commute_reduction_congruence: constructed witness failed to replay");
  }
  return {std::move(q), std::move(out), std::move(b)};
}

MoveSequence normalize_sequence(const MoveSequence& seq, const NormalizeOptions& options) {
  std::vector<SMove> moves = seq.moves;
  const SeifertMatrix end = replay(seq).back();

  // Lift every local minimum of the size.
  while (true) {
    const auto path = replay({seq.start, moves});
    std::size_t first_enl = moves.size();
    long last_red = -1;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      if (std::holds_alternative<Reduction>(moves[i])) last_red = static_cast<long>(i);
      if (std::holds_alternative<Enlargement>(moves[i]) && last_red >= 0) {
        first_enl = i;
        break;
      }
    }
    if (first_enl == moves.size()) break;

    const auto i = static_cast<std::size_t>(last_red);
    const std::size_t j = first_enl;
    std::vector<const Congruence*> between;
    for (std::size_t t = i + 1; t < j; ++t) between.push_back(&std::get<Congruence>(moves[t]));
    const Congruence p = merge_congruences(between, path[i + 1].block_sizes());

    const auto red = match_reduction(path[i], std::get<Reduction>(moves[i]));
    if (!red) throw WitnessError("reduction " + std::to_string(i) + " lost its pattern");
    const auto lifted = replace_min_by_max(path[i], path[i + 1], path[j], path[j + 1], *red, p,
                                           std::get<Enlargement>(moves[j]));

    std::vector<SMove> next(moves.begin(), moves.begin() + static_cast<long>(i));
    next.emplace_back(lifted.a_to_d);
    next.emplace_back(lifted.q);
    next.emplace_back(Reduction{lifted.b_to_qdq.k, lifted.b_to_qdq.pos_u, lifted.b_to_qdq.pos_v});
    next.insert(next.end(), moves.begin() + static_cast<long>(j) + 1, moves.end());
    moves = std::move(next);
  }

  if (options.fold_congruences) {
    std::size_t tail = 0;
    for (std::size_t i = 0; i < moves.size(); ++i)
      if (std::holds_alternative<Enlargement>(moves[i])) tail = i + 1;

    bool changed = true;
    while (changed) {
      changed = false;
      const auto path = replay({seq.start, moves});
      for (std::size_t i = tail; i + 1 < moves.size(); ++i) {
        if (std::holds_alternative<Congruence>(moves[i]) && std::holds_alternative<Congruence>(moves[i + 1])) {
          Congruence merged = compose(std::get<Congruence>(moves[i]), std::get<Congruence>(moves[i + 1]));
          moves[i] = std::move(merged);
          moves.erase(moves.begin() + static_cast<long>(i) + 1);
          changed = true;
          break;
        }
        if (std::holds_alternative<Reduction>(moves[i]) && std::holds_alternative<Congruence>(moves[i + 1])) {
          const auto red = match_reduction(path[i], std::get<Reduction>(moves[i]));
          if (!red) throw WitnessError("reduction " + std::to_string(i) + " lost its pattern");
          const auto swapped = commute_reduction_congruence(path[i], *red, inverse(std::get<Congruence>(moves[i + 1])));
          moves[i] = swapped.q;
          moves[i + 1] = Reduction{swapped.reduction.k, swapped.reduction.pos_u, swapped.reduction.pos_v};
          changed = true;
          break;
        }
      }
    }
    std::erase_if(moves, [](const SMove& mv) {
      const auto* c = std::get_if<Congruence>(&mv);
      return c && is_identity(*c);
    });
  }

  MoveSequence out{seq.start, std::move(moves)};
  if (!(replay(out).back() == end)) throw std::logic_error("normalize_sequence changed the end matrix");
  return out;
}

}  // namespace gbl
