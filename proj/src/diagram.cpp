#include "gbl/diagram.hpp"

#include "gbl/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace gbl {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(str(i + 1));
  return out;
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void require_string_link(const LinkDiagram& d, const char* op) {
  if (!d.is_string_link()) throw DiagramError(std::string(op) + " needs a string link");
}

// Accumulates crossings and per-strand passage lists for a diagram under construction.
struct Builder {
  std::vector<Strand> strands;
  std::vector<Crossing> crossings;

  explicit Builder(std::vector<std::string> labels) {
    for (auto& l : labels) strands.push_back(Strand{std::move(l), {}});
  }

  std::size_t add_crossing(std::size_t over, std::size_t under, int sign) {
    crossings.push_back(Crossing{over, under, sign});
    return crossings.size() - 1;
  }
};

// Passages of a braid on the given strands, in order of traversal per strand.
// positions[p] is the strand currently at position p; generators are (index, sign).
void append_braid(Builder& b, std::vector<std::vector<Passage>>& lists, std::vector<std::size_t> positions,
                  const std::vector<std::pair<std::size_t, int>>& word,
                  const std::vector<std::size_t>& list_of_strand) {
  for (auto [j, sign] : word) {
    std::size_t left = positions[j];
    std::size_t right = positions[j + 1];
    std::size_t over = sign > 0 ? right : left;
    std::size_t under = sign > 0 ? left : right;
    std::size_t c = b.add_crossing(over, under, sign);
    lists[list_of_strand[over]].push_back(Passage{c, true});
    lists[list_of_strand[under]].push_back(Passage{c, false});
    std::swap(positions[j], positions[j + 1]);
  }
}

std::vector<std::vector<std::size_t>> strand_cycles(const LinkDiagram& d) {
  std::vector<std::vector<std::size_t>> cycles;
  if (!d.is_string_link()) {
    for (std::size_t i = 0; i < d.strand_count(); ++i) cycles.push_back({i});
    return cycles;
  }
  std::vector<bool> seen(d.strand_count(), false);
  for (std::size_t i = 0; i < d.strand_count(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t s = i; !seen[s]; s = d.bottom()[s]) {
      seen[s] = true;
      cycle.push_back(s);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// Parallel copies of every strand plus framing twists at the top of each
// closure cycle. Copy c of strand i becomes strand offset[i] + c.
LinkDiagram parallel(const LinkDiagram& d, const std::vector<std::size_t>& mult,
                     const std::vector<std::vector<std::string>>& copy_labels) {
  const std::size_t n = d.strand_count();
  if (mult.size() != n) {
    throw DiagramError("expected " + str(n) + " multiplicities, got " + str(mult.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mult[i] == 0) throw DiagramError("zero multiplicity for strand " + str(i + 1));
  }
  auto cycles = strand_cycles(d);
  std::vector<std::size_t> cycle_of(n);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (auto s : cycles[c]) {
      cycle_of[s] = c;
      if (mult[s] != mult[cycles[c].front()]) {
        throw DiagramError("strands joined by the closure need equal multiplicities");
      }
    }
  }

  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + mult[i];
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < mult[i]; ++c) labels.push_back(copy_labels[i][c]);
  }
  Builder b(labels);
  const std::size_t total = offset[n];
  std::vector<std::vector<Passage>> twist(total), body(total);
  std::vector<std::size_t> own = identity_permutation(total);

  // Framing correction: -W full twists on the copies of the first strand of
  // each cycle, W being the writhe of the cycle's closure component.
  for (const auto& cycle : cycles) {
    std::size_t head = cycle.front();
    std::size_t k = mult[head];
    if (k < 2) continue;
    int w = 0;
    for (const auto& x : d.crossings()) {
      if (cycle_of[x.over] == cycle_of[head] && cycle_of[x.under] == cycle_of[head]) w += x.sign;
    }
    if (w == 0) continue;
    int sign = w > 0 ? -1 : 1;
    std::vector<std::pair<std::size_t, int>> word;
    for (int t = 0; t < std::abs(w); ++t) {
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j + 1 < k; ++j) word.emplace_back(j, sign);
      }
    }
    std::vector<std::size_t> positions(k);
    std::iota(positions.begin(), positions.end(), offset[head]);
    append_braid(b, twist, positions, word, own);
  }

  // Each original crossing becomes a grid of crossings between copies. Copies
  // sit to the left of the direction of travel, which fixes the order in which
  // an over copy meets the under copies and vice versa.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> grid;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& x = d.crossings()[c];
    for (std::size_t a = 0; a < mult[x.over]; ++a) {
      for (std::size_t u = 0; u < mult[x.under]; ++u) {
        grid[{c, a, u}] = b.add_crossing(offset[x.over] + a, offset[x.under] + u, x.sign);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t copy = 0; copy < mult[i]; ++copy) {
      auto& list = body[offset[i] + copy];
      for (const auto& p : d.strands()[i].passages) {
        const auto& x = d.crossings()[p.crossing];
        std::size_t others = p.over ? mult[x.under] : mult[x.over];
        bool ascending = p.over ? x.sign < 0 : x.sign > 0;
        for (std::size_t r = 0; r < others; ++r) {
          std::size_t o = ascending ? r : others - 1 - r;
          auto key = p.over ? std::tuple{p.crossing, copy, o} : std::tuple{p.crossing, o, copy};
          list.push_back(Passage{grid.at(key), p.over});
        }
      }
    }
  }
  for (std::size_t s = 0; s < total; ++s) {
    b.strands[s].passages = std::move(twist[s]);
    b.strands[s].passages.insert(b.strands[s].passages.end(), body[s].begin(), body[s].end());
  }

  std::vector<std::size_t> bottom;
  if (d.is_string_link()) {
    std::vector<std::size_t> at_bottom(n);
    for (std::size_t i = 0; i < n; ++i) at_bottom[d.bottom()[i]] = i;
    std::vector<std::size_t> boff(n + 1, 0);
    for (std::size_t p = 0; p < n; ++p) boff[p + 1] = boff[p] + mult[at_bottom[p]];
    bottom.resize(total);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < mult[i]; ++c) bottom[offset[i] + c] = boff[d.bottom()[i]] + c;
    }
  }
  return LinkDiagram(d.kind(), std::move(b.strands), std::move(b.crossings), std::move(bottom));
}

// Keeps the listed strands in the given order, dropping every
// crossing that touches a removed strand.
LinkDiagram restrict_strands(const LinkDiagram& d, const std::vector<std::size_t>& order) {
  const std::size_t n = d.strand_count();
  std::vector<std::size_t> new_index(n, n);
  for (std::size_t t = 0; t < order.size(); ++t) new_index[order[t]] = t;
  std::vector<std::size_t> new_crossing(d.crossings().size(), d.crossings().size());
  std::vector<Crossing> crossings;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& x = d.crossings()[c];
    if (new_index[x.over] == n || new_index[x.under] == n) continue;
    new_crossing[c] = crossings.size();
    crossings.push_back(Crossing{new_index[x.over], new_index[x.under], x.sign});
  }
  std::vector<Strand> strands;
  for (auto s : order) {
    Strand out{d.strands()[s].label, {}};
    for (const auto& p : d.strands()[s].passages) {
      if (new_crossing[p.crossing] != d.crossings().size()) {
        out.passages.push_back(Passage{new_crossing[p.crossing], p.over});
      }
    }
    strands.push_back(std::move(out));
  }
  std::vector<std::size_t> bottom;
  if (d.is_string_link()) {
    std::vector<std::size_t> kept;
    for (auto s : order) kept.push_back(d.bottom()[s]);
    std::vector<std::size_t> sorted = kept;
    std::sort(sorted.begin(), sorted.end());
    for (auto p : kept) {
      bottom.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin()));
    }
  }
  return LinkDiagram(d.kind(), std::move(strands), std::move(crossings), std::move(bottom));
}

}  // namespace

LinkDiagram::LinkDiagram(DiagramKind kind, std::vector<Strand> strands, std::vector<Crossing> crossings,
                         std::vector<std::size_t> bottom)
    : kind_(kind), strands_(std::move(strands)), crossings_(std::move(crossings)), bottom_(std::move(bottom)) {
  const std::size_t n = strands_.size();
  if (kind_ == DiagramKind::string_link) {
    if (bottom_.empty()) bottom_ = identity_permutation(n);
    if (bottom_.size() != n) throw DiagramError("bottom permutation has the wrong length");
    std::vector<bool> hit(n, false);
    for (auto p : bottom_) {
      if (p >= n || hit[p]) throw DiagramError("bottom endpoints do not form a permutation");
      hit[p] = true;
    }
  } else if (!bottom_.empty()) {
    throw DiagramError("closed diagrams have no bottom endpoints");
  }

  std::set<std::string> seen;
  for (const auto& s : strands_) {
    if (s.label.empty()) throw DiagramError("empty component label");
    if (!seen.insert(s.label).second) throw DiagramError("duplicate component label '" + s.label + "'");
  }

  std::vector<int> over_count(crossings_.size(), 0), under_count(crossings_.size(), 0);
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& x = crossings_[c];
    if (x.over >= n || x.under >= n) throw DiagramError("crossing " + str(c + 1) + " names a missing strand");
    if (x.sign != 1 && x.sign != -1) throw DiagramError("crossing " + str(c + 1) + " has sign other than +-1");
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& p : strands_[s].passages) {
      if (p.crossing >= crossings_.size()) {
        throw DiagramError("strand " + str(s + 1) + " passes missing crossing " + str(p.crossing + 1));
      }
      const auto& x = crossings_[p.crossing];
      if ((p.over ? x.over : x.under) != s) {
        throw DiagramError("crossing " + str(p.crossing + 1) + " lists a different " +
                           (p.over ? "over" : "under") + " strand than strand " + str(s + 1));
      }
      ++(p.over ? over_count : under_count)[p.crossing];
    }
  }
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (over_count[c] != 1 || under_count[c] != 1) {
      throw DiagramError("crossing " + str(c + 1) + " must be passed once over and once under");
    }
  }
}

LinkDiagram LinkDiagram::trivial(std::size_t n) {
  std::vector<Strand> strands;
  for (auto& l : default_labels(n)) strands.push_back(Strand{l, {}});
  return LinkDiagram(DiagramKind::string_link, std::move(strands), {});
}

LinkDiagram LinkDiagram::unlink(std::size_t n) {
  std::vector<Strand> strands;
  for (auto& l : default_labels(n)) strands.push_back(Strand{l, {}});
  return LinkDiagram(DiagramKind::closed, std::move(strands), {});
}

std::vector<std::string> LinkDiagram::labels() const {
  std::vector<std::string> out;
  for (const auto& s : strands_) out.push_back(s.label);
  return out;
}

std::size_t LinkDiagram::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < strands_.size(); ++i) {
    if (strands_[i].label == label) return i;
  }
  throw DiagramError("no component labelled '" + label + "'");
}

int LinkDiagram::self_writhe(std::size_t i) const {
  int w = 0;
  for (const auto& x : crossings_) {
    if (x.over == i && x.under == i) w += x.sign;
  }
  return w;
}

int LinkDiagram::linking_number(std::size_t i, std::size_t j) const {
  if (i == j) throw DiagramError("linking number needs two distinct components");
  int total = 0;
  for (const auto& x : crossings_) {
    if ((x.over == i && x.under == j) || (x.over == j && x.under == i)) total += x.sign;
  }
  if (total % 2 != 0) throw DiagramError("odd signed crossing count between strands; close the string link first");
  return total / 2;
}

LinkDiagram braid_string_link(std::size_t n, const std::vector<int>& word) {
  Builder b(default_labels(n));
  std::vector<std::pair<std::size_t, int>> gens;
  for (int g : word) {
    std::size_t j = static_cast<std::size_t>(std::abs(g));
    if (g == 0 || j >= n) throw DiagramError("braid generator " + std::to_string(g) + " out of range");
    gens.emplace_back(j - 1, g > 0 ? 1 : -1);
  }
  std::vector<std::vector<Passage>> lists(n);
  auto positions = identity_permutation(n);
  append_braid(b, lists, positions, gens, identity_permutation(n));
  for (auto [j, sign] : gens) std::swap(positions[j], positions[j + 1]);
  std::vector<std::size_t> bottom(n);
  for (std::size_t p = 0; p < n; ++p) bottom[positions[p]] = p;
  for (std::size_t s = 0; s < n; ++s) b.strands[s].passages = std::move(lists[s]);
  return LinkDiagram(DiagramKind::string_link, std::move(b.strands), std::move(b.crossings), std::move(bottom));
}

LinkDiagram product(const LinkDiagram& a, const LinkDiagram& b) {
  require_string_link(a, "product");
  require_string_link(b, "product");
  const std::size_t n = a.strand_count();
  if (b.strand_count() != n) {
    throw DiagramError("product of string links with " + str(n) + " and " + str(b.strand_count()) + " strands");
  }
  // b's strand j continues the a-strand that ends at bottom position j.
  std::vector<std::size_t> from_b(n);
  for (std::size_t i = 0; i < n; ++i) from_b[a.bottom()[i]] = i;
  const std::size_t shift = a.crossings().size();
  std::vector<Crossing> crossings = a.crossings();
  for (const auto& x : b.crossings()) crossings.push_back(Crossing{from_b[x.over], from_b[x.under], x.sign});
  std::vector<Strand> strands = a.strands();
  std::vector<std::size_t> bottom(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = a.bottom()[i];
    for (const auto& p : b.strands()[j].passages) strands[i].passages.push_back(Passage{p.crossing + shift, p.over});
    bottom[i] = b.bottom()[j];
  }
  return LinkDiagram(DiagramKind::string_link, std::move(strands), std::move(crossings), std::move(bottom));
}

LinkDiagram cable(const LinkDiagram& d, const std::vector<std::size_t>& multiplicities) {
  require_string_link(d, "cable");
  std::vector<std::vector<std::string>> labels;
  for (std::size_t i = 0; i < d.strand_count(); ++i) {
    std::size_t k = i < multiplicities.size() ? multiplicities[i] : 0;
    std::vector<std::string> copies;
    for (std::size_t c = 0; c < k; ++c) {
      copies.push_back(k == 1 ? d.strands()[i].label : d.strands()[i].label + "." + str(c + 1));
    }
    labels.push_back(std::move(copies));
  }
  return parallel(d, multiplicities, labels);
}

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.kind() != b.kind()) throw DiagramError("split union of a string link and a closed link");
  const std::size_t na = a.strand_count();
  const std::size_t shift = a.crossings().size();
  std::vector<Strand> strands = a.strands();
  for (const auto& s : b.strands()) {
    Strand t{s.label, {}};
    for (const auto& p : s.passages) t.passages.push_back(Passage{p.crossing + shift, p.over});
    strands.push_back(std::move(t));
  }
  // Colliding labels fall back to positional names.
  std::set<std::string> names;
  for (const auto& s : strands) names.insert(s.label);
  if (names.size() != strands.size()) {
    auto fresh = default_labels(strands.size());
    for (std::size_t i = 0; i < strands.size(); ++i) strands[i].label = fresh[i];
  }
  std::vector<Crossing> crossings = a.crossings();
  for (const auto& x : b.crossings()) crossings.push_back(Crossing{x.over + na, x.under + na, x.sign});
  std::vector<std::size_t> bottom = a.bottom();
  for (auto p : b.bottom()) bottom.push_back(p + na);
  return LinkDiagram(a.kind(), std::move(strands), std::move(crossings), std::move(bottom));
}

LinkDiagram closure(const LinkDiagram& d) {
  require_string_link(d, "closure");
  auto cycles = strand_cycles(d);
  std::vector<std::size_t> component(d.strand_count());
  std::vector<Strand> strands;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    Strand s{d.strands()[cycles[c].front()].label, {}};
    for (auto i : cycles[c]) {
      component[i] = c;
      const auto& ps = d.strands()[i].passages;
      s.passages.insert(s.passages.end(), ps.begin(), ps.end());
    }
    strands.push_back(std::move(s));
  }
  std::vector<Crossing> crossings;
  for (const auto& x : d.crossings()) crossings.push_back(Crossing{component[x.over], component[x.under], x.sign});
  return LinkDiagram(DiagramKind::closed, std::move(strands), std::move(crossings));
}

LinkDiagram pushoff(const LinkDiagram& d, const std::string& label) {
  if (d.is_string_link()) throw DiagramError("pushoff needs a closed diagram");
  const std::size_t i = d.index_of(label);
  const std::string copy_label = label + "+";
  for (const auto& s : d.strands()) {
    if (s.label == copy_label) throw DiagramError("component '" + copy_label + "' already exists");
  }
  std::vector<std::size_t> mult(d.strand_count(), 1);
  mult[i] = 2;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t s = 0; s < d.strand_count(); ++s) labels.push_back({d.strands()[s].label});
  labels[i].push_back(copy_label);
  LinkDiagram wide = parallel(d, mult, labels);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < wide.strand_count(); ++s) {
    if (s != i + 1) order.push_back(s);
  }
  order.push_back(i + 1);
  return permute_components(wide, order);
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<std::string>& labels) {
  std::vector<std::size_t> order;
  std::set<std::size_t> seen;
  for (const auto& l : labels) {
    std::size_t i = d.index_of(l);
    if (!seen.insert(i).second) throw DiagramError("component '" + l + "' listed twice");
    order.push_back(i);
  }
  if (d.is_string_link() && !std::is_sorted(order.begin(), order.end())) {
    throw DiagramError("string link sublinks keep the strands in their original order");
  }
  return restrict_strands(d, order);
}

LinkDiagram relabel(const LinkDiagram& d, const std::vector<std::string>& labels) {
  if (labels.size() != d.strand_count()) throw DiagramError("relabel needs one label per component");
  auto strands = d.strands();
  for (std::size_t i = 0; i < strands.size(); ++i) strands[i].label = labels[i];
  return LinkDiagram(d.kind(), std::move(strands), d.crossings(), d.bottom());
}

LinkDiagram mirror(const LinkDiagram& d) {
  auto strands = d.strands();
  for (auto& s : strands) {
    for (auto& p : s.passages) p.over = !p.over;
  }
  std::vector<Crossing> crossings;
  for (const auto& x : d.crossings()) crossings.push_back(Crossing{x.under, x.over, -x.sign});
  return LinkDiagram(d.kind(), std::move(strands), std::move(crossings), d.bottom());
}

LinkDiagram permute_components(const LinkDiagram& d, const std::vector<std::size_t>& order) {
  if (d.is_string_link()) throw DiagramError("string link strands are fixed by their endpoints");
  if (order.size() != d.strand_count()) throw DiagramError("permutation has the wrong length");
  std::vector<bool> hit(order.size(), false);
  for (auto s : order) {
    if (s >= order.size() || hit[s]) throw DiagramError("not a permutation of the components");
    hit[s] = true;
  }
  return restrict_strands(d, order);
}

}  // namespace gbl
