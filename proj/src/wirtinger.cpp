#include "gbl/wirtinger.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gbl {

namespace {

struct UnderPassage {
  std::size_t over_arc = 0;
  int sign = 1;
};

// Arcs run from one under-passage to the next; arc 0 of a component is the
// one through its first passage.
struct ArcStructure {
  std::vector<std::size_t> component_of_arc;
  std::vector<std::size_t> first_arc;                 // per component
  std::vector<std::vector<UnderPassage>> unders;      // per component, in order
  std::vector<int> self_writhe;                       // per component
};

ArcStructure arcs_of(const LinkDiagram& d) {
  if (d.is_string_link()) throw std::invalid_argument("longitudes need a closed diagram");
  const std::size_t m = d.strand_count();
  ArcStructure s;
  s.unders.resize(m);
  std::vector<std::size_t> over_arc(d.crossings().size());
  for (std::size_t c = 0; c < m; ++c) {
    s.first_arc.push_back(s.component_of_arc.size());
    const auto& ps = d.strands()[c].passages;
    std::size_t under_count = 0;
    for (const auto& p : ps) under_count += p.over ? 0 : 1;
    std::size_t arcs = under_count == 0 ? 1 : under_count;
    std::size_t seen = 0;
    for (const auto& p : ps) {
      if (p.over) {
        over_arc[p.crossing] = s.first_arc[c] + seen % arcs;
      } else {
        ++seen;
      }
    }
    s.component_of_arc.insert(s.component_of_arc.end(), arcs, c);
    s.self_writhe.push_back(d.self_writhe(c));
  }
  for (std::size_t c = 0; c < m; ++c) {
    for (const auto& p : d.strands()[c].passages) {
      if (!p.over) s.unders[c].push_back(UnderPassage{over_arc[p.crossing], d.crossings()[p.crossing].sign});
    }
  }
  return s;
}

// Generic Milnor rewriting over any group-like value type with an inverse.
template <class T, class Ops>
std::vector<T> longitudes(const ArcStructure& s, std::size_t rounds, const Ops& ops) {
  const std::size_t m = s.first_arc.size();
  std::vector<T> value, value_inv;
  for (auto c : s.component_of_arc) {
    value.push_back(ops.meridian(c, false));
    value_inv.push_back(ops.meridian(c, true));
  }
  auto conjugator = [&](const UnderPassage& u, bool inv) -> const T& {
    return (u.sign > 0) != inv ? value[u.over_arc] : value_inv[u.over_arc];
  };
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<T> next = value, next_inv = value_inv;
    for (std::size_t c = 0; c < m; ++c) {
      T cur = ops.meridian(c, false);
      T cur_inv = ops.meridian(c, true);
      const auto& us = s.unders[c];
      for (std::size_t t = 0; t + 1 < us.size(); ++t) {
        const T& g = conjugator(us[t], false);
        const T& g_inv = conjugator(us[t], true);
        cur = ops.mul(ops.mul(g_inv, cur), g);
        cur_inv = ops.mul(ops.mul(g_inv, cur_inv), g);
        next[s.first_arc[c] + t + 1] = cur;
        next_inv[s.first_arc[c] + t + 1] = cur_inv;
      }
    }
    value = std::move(next);
    value_inv = std::move(next_inv);
  }
  std::vector<T> out;
  for (std::size_t c = 0; c < m; ++c) {
    T l = ops.one();
    for (const auto& u : s.unders[c]) l = ops.mul(l, conjugator(u, false));
    int w = s.self_writhe[c];
    for (int k = 0; k < std::abs(w); ++k) l = ops.mul(l, ops.meridian(c, w > 0));
    out.push_back(std::move(l));
  }
  return out;
}

struct WordOps {
  Word one() const { return {}; }
  Word meridian(std::size_t c, bool inv) const { return {inv ? -static_cast<int>(c + 1) : static_cast<int>(c + 1)}; }
  Word mul(const Word& a, const Word& b) const { return concat(a, b); }
};

struct SeriesOps {
  std::size_t m;
  std::size_t cap;
  bool reduced;
  MagnusSeries one() const { return MagnusSeries::one(m, cap, reduced); }
  MagnusSeries meridian(std::size_t c, bool inv) const { return MagnusSeries::letter(m, cap, reduced, c, inv); }
  MagnusSeries mul(const MagnusSeries& a, const MagnusSeries& b) const { return a * b; }
};

}  // namespace

std::vector<Word> wirtinger_longitudes(const LinkDiagram& d, std::size_t depth) {
  if (depth < 2) throw std::invalid_argument("longitude depth must be at least 2");
  return longitudes<Word>(arcs_of(d), depth - 1, WordOps{});
}

std::vector<MagnusSeries> longitude_series(const LinkDiagram& d, std::size_t degree_cap, bool reduced) {
  return longitudes<MagnusSeries>(arcs_of(d), degree_cap, SeriesOps{d.strand_count(), degree_cap, reduced});
}

}  // namespace gbl
