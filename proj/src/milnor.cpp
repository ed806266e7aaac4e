#include "gbl/milnor.hpp"

#include "gbl/magnus.hpp"
#include "gbl/wirtinger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gbl {

namespace {

bool has_repeat(const MultiIndex& index) {
  return std::set<int>(index.begin(), index.end()).size() != index.size();
}

// Every sequence of length >= 2 obtained from a cyclic permutation of the
// index by deleting at least one entry.
std::set<MultiIndex> lower_order_indices(const MultiIndex& index) {
  std::set<MultiIndex> out;
  const std::size_t k = index.size();
  for (std::size_t r = 0; r < k; ++r) {
    MultiIndex rotated;
    for (std::size_t t = 0; t < k; ++t) rotated.push_back(index[(r + t) % k]);
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
      MultiIndex sub;
      for (std::size_t t = 0; t < k; ++t) {
        if (mask & (1u << t)) sub.push_back(rotated[t]);
      }
      if (sub.size() >= 2) out.insert(sub);
    }
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(const LinkDiagram& d, std::size_t degree_cap, bool reduced)
      : series_(longitude_series(d, degree_cap, reduced)) {}

  Integer raw(const MultiIndex& index) const {
    MultiIndex head(index.begin(), index.end() - 1);
    return series_[static_cast<std::size_t>(index.back())].coefficient(head);
  }

  MuValue value(const MultiIndex& index) const {
    Integer delta = 0;
    for (const auto& sub : lower_order_indices(index)) delta = gcd(delta, raw(sub));
    Integer v = raw(index);
    if (delta != 0) {
      v %= delta;
      if (v < 0) v += delta;
    }
    return MuValue{v, delta};
  }

 private:
  std::vector<MagnusSeries> series_;
};

void check_index(const LinkDiagram& d, const MultiIndex& index) {
  if (index.size() < 2) throw std::invalid_argument("multi-index needs at least two entries");
  for (int j : index) {
    if (j < 0 || static_cast<std::size_t>(j) >= d.strand_count()) {
      throw std::invalid_argument("multi-index entry " + std::to_string(j + 1) + " names no component");
    }
  }
}

// Non-repeating sequences of the given length over 0 .. m-1, lexicographic.
std::vector<MultiIndex> injective_indices(std::size_t m, std::size_t length) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  std::vector<bool> used(m, false);
  auto rec = [&](auto& self) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back(static_cast<int>(j));
      self(self);
      cur.pop_back();
      used[j] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

std::string index_to_string(const MultiIndex& index) {
  std::string out;
  bool wide = false;
  for (int j : index) wide = wide || j >= 9;
  for (std::size_t t = 0; t < index.size(); ++t) {
    if (wide && t > 0) out += ',';
    out += std::to_string(index[t] + 1);
  }
  return out;
}

MuTable mu_table(const LinkDiagram& d, const std::vector<MultiIndex>& indices, std::size_t depth) {
  if (d.is_string_link()) throw std::invalid_argument("Milnor invariants need a closed diagram");
  std::size_t longest = 0;
  bool reduced = true;
  for (const auto& index : indices) {
    check_index(d, index);
    longest = std::max(longest, index.size());
    reduced = reduced && !has_repeat(index);
  }
  if (indices.empty()) return {};
  if (depth == 0) depth = longest;
  if (longest > depth) {
    throw std::invalid_argument("index of length " + std::to_string(longest) + " needs depth >= " +
                                std::to_string(longest));
  }
  Evaluator eval(d, longest - 1, reduced);
  MuTable table;
  for (const auto& index : indices) table[index] = eval.value(index);
  return table;
}

MuValue mu_bar(const LinkDiagram& d, const MultiIndex& index, std::size_t depth) {
  return mu_table(d, {index}, depth).at(index);
}

HomotopyVerdict is_homotopically_trivial(const LinkDiagram& d, std::size_t depth) {
  if (d.is_string_link()) throw std::invalid_argument("homotopy triviality needs a closed diagram");
  const std::size_t m = d.strand_count();
  HomotopyVerdict verdict;
  if (m < 2) return verdict;
  if (depth != 0 && depth < m) {
    throw std::invalid_argument("depth " + std::to_string(depth) + " cannot decide a " + std::to_string(m) +
                                "-component link");
  }
  Evaluator eval(d, m - 1, true);
  for (std::size_t length = 2; length <= m && verdict.trivial; ++length) {
    for (const auto& index : injective_indices(m, length)) {
      MuValue v = eval.value(index);
      if (v.value != 0 && verdict.trivial) {
        verdict.trivial = false;
        verdict.witness = index;
      }
      verdict.table[index] = std::move(v);
    }
  }
  return verdict;
}

HtPlusVerdict is_ht_plus_pair(const PairedLink& p, std::size_t depth) {
  for (const auto& label : p.sublink) p.diagram.index_of(label);
  const auto labels = p.diagram.labels();
  std::vector<std::string> internal;
  for (std::size_t i = 0; i < labels.size(); ++i) internal.push_back("#" + std::to_string(i));
  const LinkDiagram renamed = relabel(p.diagram, internal);
  std::vector<std::string> k;
  for (const auto& label : p.sublink) k.push_back(internal[p.diagram.index_of(label)]);

  HtPlusVerdict out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    LinkDiagram with_copy = pushoff(renamed, internal[i]);
    auto kept = k;
    kept.push_back(internal[i] + "+");
    ComponentVerdict cv{labels[i], is_homotopically_trivial(sublink(with_copy, kept), depth)};
    out.trivial = out.trivial && cv.verdict.trivial;
    out.components.push_back(std::move(cv));
  }
  return out;
}

}  // namespace gbl
