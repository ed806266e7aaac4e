#include "gbl/errors.hpp"
#include "gbl/s_moves.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <set>
#include <utility>

using namespace gbl;

namespace {

SeifertMatrix single(std::vector<std::vector<Integer>> rows) {
  const std::size_t n = rows.size();
  return SeifertMatrix({n}, IntMatrix::from_rows(rows));
}

// Direct scan for the enlargement pattern: unordered pairs {u, v} of one block
// where row u and column u vanish apart from the (u, v) / (v, u) corner, the
// corner holds a legal sign pair, and row v equals column v off the pair.
std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> scan_patterns(const SeifertMatrix& b) {
  std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> out;
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < b.components(); ++k) {
    const std::size_t off = b.offset(k);
    for (std::size_t u = 0; u < b.block_sizes()[k]; ++u) {
      for (std::size_t v = 0; v < b.block_sizes()[k]; ++v) {
        if (u == v) continue;
        const std::size_t gu = off + u, gv = off + v;
        const Integer& ep = b(gu, gv);
        const Integer& e = b(gv, gu);
        if (!((e == 1 && ep == 0) || (e == 0 && ep == 1))) continue;
        bool ok = b(gv, gv) == 0;
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (c == gv) continue;
          if (b(gu, c) != 0 || b(c, gu) != 0) ok = false;
          if (c != gu && b(gv, c) != b(c, gv)) ok = false;
        }
        if (ok) out.insert({k, {std::min(u, v), std::max(u, v)}});
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("s-moves") {
  TEST_CASE("congruence by a hand-multiplied 2x2 example") {
    Congruence p{{IntMatrix::from_rows({{1, 1}, {0, 1}})}};
    auto b = apply_congruence(single({{0, 1}, {0, 0}}), p);
    CHECK(b.entries() == IntMatrix::from_rows({{0, 1}, {0, 1}}));
  }

  TEST_CASE("identity congruence and composition") {
    testing::Rng rng(21);
    for (int t = 0; t < 100; ++t) {
      auto a = testing::random_seifert(rng, 2, 8);
      CHECK(apply_congruence(a, Congruence::identity(a.block_sizes())) == a);
      auto p = testing::random_congruence(rng, a.block_sizes());
      auto q = testing::random_congruence(rng, a.block_sizes());
      auto lhs = apply_congruence(apply_congruence(a, p), q);
      CHECK(lhs == apply_congruence(a, compose(p, q)));
      CHECK(validate(lhs).valid);
      CHECK(apply_congruence(apply_congruence(a, p), inverse(p)) == a);
    }
  }

  TEST_CASE("non-unimodular or mis-sized congruence is rejected") {
    auto a = single({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(apply_congruence(a, Congruence{{IntMatrix::from_rows({{2, 0}, {0, 1}})}}), WitnessError);
    CHECK_THROWS_AS(apply_congruence(a, Congruence{{IntMatrix::identity(3)}}), StructuralError);
  }

  TEST_CASE("smallest enlargements of the null matrix") {
    Enlargement e{0, 1, 0, {{}}, 0, 1};
    CHECK(apply_enlargement(SeifertMatrix::null(1), e).entries() == IntMatrix::from_rows({{0, 0}, {1, 0}}));
    e.eps = 0;
    e.eps_prime = 1;
    CHECK(apply_enlargement(SeifertMatrix::null(1), e).entries() == IntMatrix::from_rows({{0, 1}, {0, 0}}));
    e.eps = 1;
    CHECK_THROWS_AS(apply_enlargement(SeifertMatrix::null(1), e), WitnessError);
  }

  TEST_CASE("enlargement realizes the displayed block form") {
    auto a = whitehead_double_matrix(2, {1, 0});
    Enlargement e{1, 0, 1, {{3, -2}, {5, 7}}, 0, 1};
    auto b = apply_enlargement(a, e);
    REQUIRE(b.block_sizes() == std::vector<std::size_t>{2, 4});
    CHECK(b.block(0, 0) == a.block(0, 0));
    CHECK(b.block(1, 1) == IntMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 5, 7}, {0, 5, 0, 0}, {0, 7, 1, 0}}));
    CHECK(b.block(1, 0) == IntMatrix::from_rows({{0, 0}, {3, -2}, {0, 0}, {0, 0}}));
    CHECK(b.block(0, 1) == b.block(1, 0).transpose());
  }

  TEST_CASE("wrong row lengths are rejected") {
    Enlargement e{0, 1, 0, {{1}}, 0, 1};
    CHECK_THROWS_AS(apply_enlargement(SeifertMatrix::null(1), e), StructuralError);
  }

  TEST_CASE("find_reductions on small examples") {
    auto wd = single({{0, 1}, {0, 0}});
    auto r = find_reductions(wd);
    REQUIRE(r.size() == 1);
    CHECK(apply_reduction(wd, r[0]).is_null());
    CHECK(find_reductions(single({{-1, 1}, {0, -1}})).empty());
    CHECK(find_reductions(whitehead_double_matrix(2, {1, 1})).size() == 2);
  }

  TEST_CASE("find_reductions matches a direct pattern scan") {
    testing::Rng rng(22);
    for (int t = 0; t < 300; ++t) {
      auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
      auto a = testing::random_seifert(rng, m, 6, 2);
      SeifertMatrix b = testing::coin(rng) ? apply_enlargement(a, testing::random_enlargement(rng, a, 1)) : a;
      if (testing::coin(rng)) b = apply_enlargement(b, testing::random_enlargement(rng, b, 0));
      std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> found;
      for (const auto& e : find_reductions(b)) {
        found.insert({e.k, {std::min(e.pos_u, e.pos_v), std::max(e.pos_u, e.pos_v)}});
        auto reduced = apply_reduction(b, e);
        CHECK(apply_enlargement(reduced, e) == b);
      }
      CHECK(found == scan_patterns(b));
    }
  }

  TEST_CASE("round trip and completeness for random enlargements") {
    testing::Rng rng(23);
    for (int t = 0; t < 500; ++t) {
      auto m = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
      auto a = testing::random_seifert(rng, m, 8);
      auto e = testing::random_enlargement(rng, a);
      auto b = apply_enlargement(a, e);
      CHECK(validate(b).valid);
      CHECK(b.size() == a.size() + 2);
      CHECK(apply_reduction(b, e) == a);
      CHECK(apply_reduction(b, Reduction{e.k, e.pos_u, e.pos_v}) == a);
      bool listed = false;
      for (const auto& f : find_reductions(b))
        if (f.k == e.k && std::min(f.pos_u, f.pos_v) == std::min(e.pos_u, e.pos_v) &&
            std::max(f.pos_u, f.pos_v) == std::max(e.pos_u, e.pos_v))
          listed = true;
      CHECK(listed);
    }
  }

  TEST_CASE("enlarging one block leaves the others bit-identical") {
    testing::Rng rng(24);
    for (int t = 0; t < 50; ++t) {
      auto a = testing::random_seifert(rng, 2, 8);
      auto e = testing::random_enlargement(rng, a);
      e.k = 1;
      e.pos_u = 0;
      e.pos_v = 1;
      e.rows[1].resize(a.block_sizes()[1]);
      CHECK(apply_enlargement(a, e).block(0, 0) == a.block(0, 0));
    }
  }

  TEST_CASE("reduction at a non-matching position fails") {
    CHECK_THROWS_AS(apply_reduction(single({{-1, 1}, {0, -1}}), Reduction{0, 0, 1}), WitnessError);
    CHECK_FALSE(match_reduction(single({{-1, 1}, {0, -1}}), Reduction{0, 0, 1}).has_value());
  }

  TEST_CASE("replay, size delta and monotonicity") {
    auto null = SeifertMatrix::null(1);
    Enlargement e{0, 0, 1, {{}}, 0, 1};
    MoveSequence seq{null, {SMove{e}, SMove{Reduction{0, 0, 1}}}};
    auto path = replay(seq);
    REQUIRE(path.size() == 3);
    CHECK(path.back() == null);
    CHECK(size_delta(seq.moves[0]) == 2);
    CHECK(size_delta(seq.moves[1]) == -2);
    CHECK(is_monotone(seq.moves));
    CHECK_FALSE(is_monotone({SMove{Reduction{0, 0, 1}}, SMove{e}}));
    MoveSequence broken{null, {SMove{Reduction{0, 0, 1}}}};
    CHECK_THROWS_AS(replay(broken), WitnessError);
  }

  TEST_CASE("permutation congruence moves entries") {
    auto a = single({{0, 1}, {0, 0}});
    auto b = apply_congruence(a, permutation_congruence({{1, 0}}));
    CHECK(b.entries() == IntMatrix::from_rows({{0, 0}, {1, 0}}));
  }
}
