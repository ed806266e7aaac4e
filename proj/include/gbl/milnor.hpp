#pragma once

#include "gbl/diagram.hpp"
#include "gbl/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gbl {

/// Multi-index of 0-based component numbers.
using MultiIndex = std::vector<int>;

std::string index_to_string(const MultiIndex& index);  // 1-based, e.g. "123"

struct MuValue {
  Integer value;
  Integer indeterminacy;  // 0: exact integer; otherwise value is in [0, indeterminacy)

  friend bool operator==(const MuValue&, const MuValue&) = default;
};

using MuTable = std::map<MultiIndex, MuValue>;

/// Milnor's invariant for index I = (j_1 .. j_k): the coefficient of
/// X_{j_1} .. X_{j_{k-1}} in the zero-framed longitude of component j_k,
/// reduced modulo the gcd of the invariants of the shorter indices obtained by
/// deleting entries of cyclic permutations of I. depth = 0 uses |I|. Throws
/// std::invalid_argument for |I| < 2, |I| > depth, or an unknown component.
MuValue mu_bar(const LinkDiagram& d, const MultiIndex& index, std::size_t depth = 0);

/// All invariants for the given indices from one set of longitudes; indices
/// are evaluated shortest first so lower-order values feed the indeterminacy.
MuTable mu_table(const LinkDiagram& d, const std::vector<MultiIndex>& indices, std::size_t depth = 0);

struct HomotopyVerdict {
  bool trivial = true;
  MuTable table;                          // every non-repeating index evaluated
  std::optional<MultiIndex> witness;      // first non-vanishing index, if any
};

/// Link-homotopy triviality by vanishing of every non-repeating invariant of
/// length 2 .. m. Lengths are processed in increasing order and evaluation
/// stops after the first length with a non-zero value, so each recorded value
/// is exact. depth = 0 uses m; a smaller non-zero depth is rejected.
HomotopyVerdict is_homotopically_trivial(const LinkDiagram& d, std::size_t depth = 0);

struct ComponentVerdict {
  std::string component;  // label of J_i
  HomotopyVerdict verdict;
};

struct HtPlusVerdict {
  bool trivial = true;
  std::vector<ComponentVerdict> components;
};

/// For each component J_i of the diagram, tests K together with a zero-framed
/// parallel copy of J_i. Throws DiagramError on an unknown sublink label.
HtPlusVerdict is_ht_plus_pair(const PairedLink& p, std::size_t depth = 0);

}  // namespace gbl
