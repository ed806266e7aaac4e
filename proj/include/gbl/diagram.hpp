#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gbl {

enum class DiagramKind { string_link, closed };

/// One visit of a strand to a crossing.
struct Passage {
  std::size_t crossing = 0;
  bool over = false;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Crossing {
  std::size_t over = 0;   // strand index
  std::size_t under = 0;  // strand index
  int sign = 1;           // +1 right-handed, -1 left-handed

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Strand {
  std::string label;
  std::vector<Passage> passages;

  friend bool operator==(const Strand&, const Strand&) = default;
};

/// Gauss-code style link or string-link diagram.
///
/// String links: strand i starts at top endpoint i and ends at bottom endpoint
/// bottom[i]; every strand runs top to bottom and is its own component.
/// Closed links: every strand is one closed component and its passage list is
/// cyclic. Planarity of the code is trusted, not checked.
///
/// Parallel copies (cables, push-offs) sit on the left of the direction of
/// travel, and framing twists are added before the first passage of a strand.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Throws DiagramError unless every crossing occurs exactly once as over on
  /// its over strand and once as under on its under strand.
  LinkDiagram(DiagramKind kind, std::vector<Strand> strands, std::vector<Crossing> crossings,
              std::vector<std::size_t> bottom = {});

  static LinkDiagram trivial(std::size_t n);
  static LinkDiagram unlink(std::size_t n);

  DiagramKind kind() const { return kind_; }
  bool is_string_link() const { return kind_ == DiagramKind::string_link; }
  std::size_t strand_count() const { return strands_.size(); }
  const std::vector<Strand>& strands() const { return strands_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::size_t>& bottom() const { return bottom_; }

  std::vector<std::string> labels() const;
  /// Throws DiagramError on unknown label.
  std::size_t index_of(const std::string& label) const;

  /// Sum of crossing signs with over and under strand both equal to i.
  int self_writhe(std::size_t i) const;
  /// Half the signed count of crossings between strands i != j.
  int linking_number(std::size_t i, std::size_t j) const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  DiagramKind kind_ = DiagramKind::closed;
  std::vector<Strand> strands_;
  std::vector<Crossing> crossings_;
  std::vector<std::size_t> bottom_;
};

/// A link together with a chosen sublink K, named by component labels.
struct PairedLink {
  LinkDiagram diagram;
  std::vector<std::string> sublink;
};

/// String link from a braid word on n strands: generator +g (1-based) is the
/// positive crossing of positions g and g+1, -g its inverse.
LinkDiagram braid_string_link(std::size_t n, const std::vector<int>& word);

/// a on top of b: strand i runs through a and continues along b.
LinkDiagram product(const LinkDiagram& a, const LinkDiagram& b);

/// Replace strand i by multiplicities[i] parallel copies and add -w full twists
/// on each bundle whose strand has self-writhe w, so copies of one strand are
/// zero-linked in the closure.
LinkDiagram cable(const LinkDiagram& d, const std::vector<std::size_t>& multiplicities);

/// Side-by-side juxtaposition: a's strands first. Kinds must agree.
LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);

/// Join bottom endpoint p to top endpoint p with crossingless arcs. Each cycle
/// of strands becomes one component carrying the label of its first strand.
LinkDiagram closure(const LinkDiagram& d);

/// Adds a zero-framed parallel copy of the named component as a new last
/// component labelled label + "+".
LinkDiagram pushoff(const LinkDiagram& d, const std::string& label);

/// Keeps only the named components (in the given order) and the crossings among them.
LinkDiagram sublink(const LinkDiagram& d, const std::vector<std::string>& labels);

/// Same diagram with strand labels replaced.
LinkDiagram relabel(const LinkDiagram& d, const std::vector<std::string>& labels);

/// Mirror image: every crossing switched, signs negated.
LinkDiagram mirror(const LinkDiagram& d);

/// Components reordered: new component t is old component order[t].
LinkDiagram permute_components(const LinkDiagram& d, const std::vector<std::size_t>& order);

}  // namespace gbl
