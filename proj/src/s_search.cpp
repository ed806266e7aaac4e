#include "gbl/s_search.hpp"

#include "gbl/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace gbl {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted:
      return "exhausted";
    case SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// reduce_to_null

namespace {

struct BudgetExceeded {};

class NullReducer {
 public:
  explicit NullReducer(const ReduceOptions& options) : options_(options) {}

  bool search(const SeifertMatrix& a, std::vector<SMove>& path) {
    if (a.is_null()) return true;
    if (++nodes_ > options_.budget) throw BudgetExceeded{};
    const std::string key = a.key();
    if (dead_.contains(key)) return false;
    for (const auto& w : find_reductions(a, options_.front_only)) {
      const Reduction r{w.k, w.pos_u, w.pos_v};
      path.emplace_back(r);
      if (search(apply_reduction(a, r), path)) return true;
      path.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  ReduceOptions options_;
  std::unordered_set<std::string> dead_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult reduce_to_null(const SeifertMatrix& a, const ReduceOptions& options) {
  require_valid(a);
  SearchResult result;
  NullReducer reducer(options);
  std::vector<SMove> path;
  try {
    if (reducer.search(a, path)) {
      MoveSequence seq{a, std::move(path)};
      if (!replay(seq).back().is_null()) throw WitnessError("reduction path does not end at the null matrix");
      result.status = SearchStatus::found;
      result.sequence = std::move(seq);
    } else {
      result.status = SearchStatus::exhausted;
    }
  } catch (const BudgetExceeded&) {
    result.status = SearchStatus::budget_exceeded;
  }
  result.nodes = reducer.nodes();
  return result;
}

// ---------------------------------------------------------------------------
// good_basis_form_check

namespace {

struct PairSlot {
  PairRef ref;
  std::size_t row_a = 0;  // global rows for the unflipped orientation
  std::size_t row_b = 0;
};

bool peelable(const SeifertMatrix& m, const std::vector<bool>& alive, std::size_t a, std::size_t b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (!alive[c] || c == b) continue;
    if (m(a, c) != 0 || m(c, a) != 0) return false;
  }
  const Integer& e = m(a, b);
  if (e != 0 && e != 1) return false;
  if (m(b, a) != 1 - e) return false;
  if (m(b, b) != 0) return false;
  for (std::size_t c = 0; c < n; ++c) {
    if (!alive[c] || c == a || c == b) continue;
    if (m(b, c) != m(c, b)) return false;
  }
  return true;
}

}  // namespace

std::optional<GoodBasisOrdering> good_basis_form_check(const SeifertMatrix& a) {
  for (std::size_t i = 0; i < a.components(); ++i) {
    if (a.block_sizes()[i] % 2 != 0) {
      throw StructuralError("block " + std::to_string(i) + " has odd size " + std::to_string(a.block_sizes()[i]));
    }
  }
  std::vector<PairSlot> slots;
  for (std::size_t i = 0; i < a.components(); ++i) {
    for (std::size_t t = 0; t < a.block_sizes()[i] / 2; ++t) {
      const std::size_t g = a.offset(i) + 2 * t;
      slots.push_back({{i, t, false}, g, g + 1});
    }
  }

  std::vector<bool> alive(a.size(), true);
  std::vector<bool> used(slots.size(), false);
  std::vector<PairRef> peeled;
  std::vector<int> peeled_signs;
  std::vector<SMove> moves;
  std::vector<std::size_t> live_in_block = a.block_sizes();

  // Peeling a pair only deletes rows and columns, which never breaks the
  // pattern of another pair, so the greedy order is complete.
  for (std::size_t step = 0; step < slots.size(); ++step) {
    bool progressed = false;
    for (std::size_t s = slots.size(); s-- > 0;) {
      if (used[s]) continue;
      for (bool flip : {false, true}) {
        const std::size_t ra = flip ? slots[s].row_b : slots[s].row_a;
        const std::size_t rb = flip ? slots[s].row_a : slots[s].row_b;
        if (!peelable(a, alive, ra, rb)) continue;

        const std::size_t blk = slots[s].ref.component;
        const std::size_t off = a.offset(blk);
        auto local = [&](std::size_t g) {
          std::size_t pos = 0;
          for (std::size_t r = off; r < g; ++r)
            if (alive[r]) ++pos;
          return pos;
        };
        moves.emplace_back(Reduction{blk, local(ra), local(rb)});
        peeled.push_back({blk, slots[s].ref.index, flip});
        peeled_signs.push_back(static_cast<int>(a(ra, rb)));
        alive[ra] = alive[rb] = false;
        live_in_block[blk] -= 2;
        used[s] = true;
        progressed = true;
        break;
      }
      if (progressed) break;
    }
    if (!progressed) return std::nullopt;
  }

  GoodBasisOrdering out;
  out.order.assign(peeled.rbegin(), peeled.rend());
  out.signs.assign(peeled_signs.rbegin(), peeled_signs.rend());
  out.reductions = MoveSequence{a, std::move(moves)};
  if (!replay(out.reductions).back().is_null()) throw WitnessError("good-basis peeling did not reach null");
  return out;
}

// ---------------------------------------------------------------------------
// s_equivalent_bounded

MoveSequence reverse_sequence(const MoveSequence& seq) {
  const auto path = replay(seq);
  MoveSequence out{path.back(), {}};
  for (std::size_t i = seq.moves.size(); i-- > 0;) {
    const SMove& mv = seq.moves[i];
    if (const auto* p = std::get_if<Congruence>(&mv)) {
      out.moves.emplace_back(inverse(*p));
    } else if (const auto* e = std::get_if<Enlargement>(&mv)) {
      out.moves.emplace_back(Reduction{e->k, e->pos_u, e->pos_v});
    } else {
      const auto& r = std::get<Reduction>(mv);
      auto w = match_reduction(path[i], r);
      if (!w) throw WitnessError("cannot invert reduction " + std::to_string(i));
      out.moves.emplace_back(std::move(*w));
    }
  }
  return out;
}

namespace {

struct Node {
  SeifertMatrix matrix;
  long parent = -1;
  std::optional<SMove> move;  // parent -> this
};

class Side {
 public:
  explicit Side(const SeifertMatrix& root) {
    nodes_.push_back({root, -1, std::nullopt});
    index_.emplace(root.key(), 0);
    frontier_.push_back(0);
  }

  std::vector<Node>& nodes() { return nodes_; }
  std::unordered_map<std::string, std::size_t>& index() { return index_; }
  std::vector<std::size_t>& frontier() { return frontier_; }

  std::vector<SMove> path_to(std::size_t idx) const {
    std::vector<SMove> moves;
    for (long cur = static_cast<long>(idx); nodes_[cur].parent >= 0; cur = nodes_[cur].parent) {
      moves.push_back(*nodes_[cur].move);
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  }

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> frontier_;
};

void for_each_neighbor(const SeifertMatrix& x, const EquivalenceOptions& opt, std::size_t size_cap,
                       const std::function<bool(SMove&&, SeifertMatrix&&)>& visit) {
  const Integer cap = opt.entry_cap;
  auto emit = [&](SMove mv, SeifertMatrix y) {
    if (y.size() > size_cap || y.entries().max_abs() > cap) return true;
    return visit(std::move(mv), std::move(y));
  };

  for (const auto& w : find_reductions(x)) {
    const Reduction r{w.k, w.pos_u, w.pos_v};
    if (!emit(r, apply_reduction(x, r))) return;
  }

  for (std::size_t j = 0; j < x.components(); ++j) {
    const std::size_t n = x.block_sizes()[j];
    auto emit_block = [&](const IntMatrix& p) {
      Congruence c = Congruence::identity(x.block_sizes());
      c.blocks[j] = p;
      SeifertMatrix y = apply_congruence(x, c);
      return emit(std::move(c), std::move(y));
    };
    for (std::size_t p = 0; p < n; ++p) {
      IntMatrix neg = IntMatrix::identity(n);
      neg(p, p) = -1;
      if (!emit_block(neg)) return;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      IntMatrix sw(n, n);
      for (std::size_t t = 0; t < n; ++t) sw(t, t) = 1;
      sw(p, p) = sw(p + 1, p + 1) = 0;
      sw(p, p + 1) = sw(p + 1, p) = 1;
      if (!emit_block(sw)) return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p == q) continue;
        for (int s : {1, -1}) {
          IntMatrix t = IntMatrix::identity(n);
          t(q, p) = s;
          if (!emit_block(t)) return;
        }
      }
    }
  }

  if (x.size() + 2 > size_cap) return;
  const std::size_t len = x.size();
  const long bound = opt.enlargement_row_bound;
  for (std::size_t k = 0; k < x.components(); ++k) {
    for (auto [eps, eps_prime] : {std::pair{1, 0}, std::pair{0, 1}}) {
      std::vector<long> digits(len, -bound);
      while (true) {
        Enlargement e;
        e.k = k;
        e.eps = eps;
        e.eps_prime = eps_prime;
        e.rows.resize(x.components());
        std::size_t at = 0;
        for (std::size_t j = 0; j < x.components(); ++j)
          for (std::size_t t = 0; t < x.block_sizes()[j]; ++t) e.rows[j].push_back(digits[at++]);
        SeifertMatrix y = apply_enlargement(x, e);
        if (!emit(std::move(e), std::move(y))) return;
        std::size_t pos = 0;
        while (pos < len && digits[pos] == bound) digits[pos++] = -bound;
        if (pos == len) break;
        ++digits[pos];
      }
    }
  }
}

}  // namespace

SearchResult s_equivalent_bounded(const SeifertMatrix& a, const SeifertMatrix& b, const EquivalenceOptions& options) {
  require_valid(a);
  require_valid(b);
  if (a.components() != b.components()) {
    throw StructuralError("matrices have different component counts");
  }
  SearchResult result;
  if (a == b) {
    result.status = SearchStatus::found;
    result.sequence = MoveSequence{a, {}};
    return result;
  }
  const std::size_t size_cap = options.size_cap ? options.size_cap : std::max(a.size(), b.size()) + 4;

  Side forward(a);
  Side backward(b);
  std::uint64_t nodes = 0;
  std::optional<std::pair<std::size_t, std::size_t>> meet;  // forward idx, backward idx

  auto expand_level = [&](Side& self, Side& other, bool self_is_forward) -> bool {
    std::vector<std::size_t> next;
    for (std::size_t idx : self.frontier()) {
      if (++nodes > options.node_budget) return false;
      const SeifertMatrix x = self.nodes()[idx].matrix;
      for_each_neighbor(x, options, size_cap, [&](SMove&& mv, SeifertMatrix&& y) {
        std::string key = y.key();
        if (self.index().contains(key)) return true;
        self.nodes().push_back({std::move(y), static_cast<long>(idx), std::move(mv)});
        const std::size_t created = self.nodes().size() - 1;
        self.index().emplace(key, created);
        next.push_back(created);
        if (auto it = other.index().find(key); it != other.index().end()) {
          meet = self_is_forward ? std::pair{created, it->second} : std::pair{it->second, created};
          return false;
        }
        return true;
      });
      if (meet) return true;
    }
    self.frontier() = std::move(next);
    return true;
  };

  while (!meet) {
    if (forward.frontier().empty() || backward.frontier().empty()) {
      result.status = SearchStatus::exhausted;
      result.nodes = nodes;
      return result;
    }
    const bool fwd = forward.frontier().size() <= backward.frontier().size();
    const bool ok = fwd ? expand_level(forward, backward, true) : expand_level(backward, forward, false);
    if (!ok) {
      result.status = SearchStatus::budget_exceeded;
      result.nodes = nodes;
      return result;
    }
  }

  MoveSequence path{a, forward.path_to(meet->first)};
  MoveSequence back{b, backward.path_to(meet->second)};
  MoveSequence back_rev = reverse_sequence(back);
  for (auto& mv : back_rev.moves) path.moves.push_back(std::move(mv));
  if (!(replay(path).back() == b)) throw WitnessError("bidirectional path does not replay to the target");
  result.status = SearchStatus::found;
  result.sequence = std::move(path);
  result.nodes = nodes;
  return result;
}

}  // namespace gbl
