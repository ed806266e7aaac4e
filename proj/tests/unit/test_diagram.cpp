#include "gbl/catalog.hpp"
#include "gbl/certify.hpp"
#include "gbl/diagram.hpp"
#include "gbl/errors.hpp"

#include "planarity.hpp"

#include <doctest.h>

using namespace gbl;

namespace {

// Linking numbers straight from the crossing list: half the signed count of
// crossings between two different strands.
int sign_sum(const LinkDiagram& d, std::size_t i, std::size_t j) {
  int s = 0;
  for (const auto& c : d.crossings())
    if ((c.over == i && c.under == j) || (c.over == j && c.under == i)) s += c.sign;
  return s / 2;
}

bool all_zero_linking(const LinkDiagram& d) {
  for (std::size_t i = 0; i < d.strand_count(); ++i)
    for (std::size_t j = i + 1; j < d.strand_count(); ++j)
      if (sign_sum(d, i, j) != 0) return false;
  return true;
}

// One strand with `kinks` curls of the given sign.
LinkDiagram curls(DiagramKind kind, int kinks, int sign) {
  Strand s{"1", {}};
  std::vector<Crossing> cs;
  for (int t = 0; t < kinks; ++t) {
    const auto id = static_cast<std::size_t>(t);
    s.passages.push_back({id, true});
    s.passages.push_back({id, false});
    cs.push_back({0, 0, sign});
  }
  return LinkDiagram(kind, {s}, cs, kind == DiagramKind::string_link ? std::vector<std::size_t>{0}
                                                                     : std::vector<std::size_t>{});
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("construction checks every crossing once over and once under") {
    std::vector<Strand> strands = {{"1", {{0, true}}}, {"2", {{0, true}}}};
    CHECK_THROWS_AS(LinkDiagram(DiagramKind::closed, strands, {{0, 1, 1}}), DiagramError);
    std::vector<Strand> dup = {{"x", {}}, {"x", {}}};
    CHECK_THROWS_AS(LinkDiagram(DiagramKind::closed, dup, {}), DiagramError);
    CHECK_THROWS_AS(LinkDiagram::unlink(2).index_of("nope"), DiagramError);
  }

  TEST_CASE("trivial and unlink") {
    auto t = LinkDiagram::trivial(3);
    CHECK(t.is_string_link());
    CHECK(t.bottom() == std::vector<std::size_t>{0, 1, 2});
    CHECK(closure(t) == LinkDiagram::unlink(3));
    CHECK(LinkDiagram::unlink(2).labels() == std::vector<std::string>{"1", "2"});
  }

  TEST_CASE("braid string links") {
    auto b = braid_string_link(2, {1, 1, 1, 1});
    CHECK(b.bottom() == std::vector<std::size_t>{0, 1});
    CHECK(b.crossings().size() == 4);
    auto c = closure(b);
    CHECK(c.linking_number(0, 1) == 2);
    CHECK(sign_sum(c, 0, 1) == 2);
    CHECK(testing::is_planar(b));
    CHECK(testing::is_planar(c));
    CHECK(closure(braid_string_link(3, {1, 2})).strand_count() == 1);
    CHECK(closure(braid_string_link(3, {1})).strand_count() == 2);
  }

  TEST_CASE("self writhe and linking number") {
    auto k = curls(DiagramKind::closed, 3, 1);
    CHECK(k.self_writhe(0) == 3);
    auto h = hopf_link(-1);
    CHECK(h.linking_number(0, 1) == -1);
    CHECK(h.self_writhe(0) == 0);
  }

  TEST_CASE("product with the trivial string link") {
    auto beta = whitehead_string_link();
    auto left = product(LinkDiagram::trivial(2), beta);
    auto right = product(beta, LinkDiagram::trivial(2));
    CHECK(left == beta);
    CHECK(right == beta);
    CHECK_THROWS_AS(product(LinkDiagram::trivial(3), beta), DiagramError);
  }

  TEST_CASE("product is associative") {
    auto a = braid_string_link(3, {1, -2});
    auto b = braid_string_link(3, {2, 2, 1});
    auto c = braid_string_link(3, {-1, 2});
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }

  TEST_CASE("product with the mirror cancels linking") {
    auto b = braid_string_link(2, {1, 1});
    auto p = closure(product(b, mirror(b)));
    CHECK(sign_sum(closure(b), 0, 1) == 1);
    CHECK(p.linking_number(0, 1) == 0);
    CHECK(sign_sum(p, 0, 1) == 0);
    CHECK(testing::is_planar(p));
  }

  TEST_CASE("cabling with multiplicity one is the identity") {
    auto beta = whitehead_string_link();
    CHECK(cable(beta, {1, 1}) == beta);
    CHECK_THROWS_AS(cable(beta, {0, 1}), DiagramError);
  }

  TEST_CASE("cables of beta have zero-linking closures") {
    auto beta = whitehead_string_link();
    for (auto mult : {std::vector<std::size_t>{2, 1}, std::vector<std::size_t>{1, 2}, std::vector<std::size_t>{2, 2},
                      std::vector<std::size_t>{3, 1}}) {
      auto c = cable(beta, mult);
      auto cl = closure(c);
      CHECK(cl.strand_count() == mult[0] + mult[1]);
      CHECK(all_zero_linking(cl));
      for (std::size_t i = 0; i < cl.strand_count(); ++i)
        for (std::size_t j = i + 1; j < cl.strand_count(); ++j) CHECK(cl.linking_number(i, j) == 0);
      CHECK(testing::is_planar(c));
      CHECK(testing::is_planar(cl));
    }
    CHECK(cable(beta, {2, 1}).labels() == std::vector<std::string>{"1.1", "1.2", "2"});
  }

  TEST_CASE("cabling a positive curl by two inserts one negative full twist") {
    auto kink = curls(DiagramKind::string_link, 1, 1);
    CHECK(kink.self_writhe(0) == 1);
    auto c = cable(kink, {2});
    CHECK(c.crossings().size() == 6);
    auto cl = closure(c);
    CHECK(cl.strand_count() == 2);
    CHECK(sign_sum(cl, 0, 1) == 0);
    CHECK(testing::is_planar(c));
  }

  TEST_CASE("cabling a closure cycle needs equal multiplicities") {
    auto b = braid_string_link(2, {1});
    CHECK_THROWS_AS(cable(b, {2, 1}), DiagramError);
    auto ok = closure(cable(b, {2, 2}));
    CHECK(ok.strand_count() == 2);
    CHECK(all_zero_linking(ok));
  }

  TEST_CASE("split union") {
    CHECK(split_union(LinkDiagram::trivial(1), LinkDiagram::trivial(1)) == LinkDiagram::trivial(2));
    auto beta = whitehead_string_link();
    auto u = split_union(LinkDiagram::trivial(1), beta);
    CHECK(u.strand_count() == 3);
    CHECK(u.crossings().size() == beta.crossings().size());
    CHECK_THROWS_AS(split_union(LinkDiagram::trivial(1), LinkDiagram::unlink(1)), DiagramError);
    auto a = braid_string_link(2, {1});
    auto three = split_union(split_union(a, a), a);
    CHECK(three.strand_count() == 6);
    CHECK(three.crossings().size() == 3);
  }

  TEST_CASE("closure of beta is the two-component Whitehead link") {
    auto w = closure(whitehead_string_link());
    CHECK(w.strand_count() == 2);
    CHECK(w.linking_number(0, 1) == 0);
    CHECK(w.crossings().size() == 5);
    CHECK(testing::is_planar(w));
    CHECK(testing::is_reduced(w));
    CHECK(testing::is_alternating(w));
  }

  TEST_CASE("push-off of a curled unknot is zero-framed") {
    auto k = curls(DiagramKind::closed, 3, 1);
    auto p = pushoff(k, "1");
    CHECK(p.strand_count() == 2);
    CHECK(p.labels() == std::vector<std::string>{"1", "1+"});
    CHECK(sign_sum(p, 0, 1) == 0);
    CHECK(testing::is_planar(p));
  }

  TEST_CASE("push-off of a split unknot adds a split unknot") {
    auto p = pushoff(LinkDiagram::unlink(2), "1");
    CHECK(p.strand_count() == 3);
    CHECK(p.crossings().empty());
    CHECK_THROWS_AS(pushoff(LinkDiagram::unlink(2), "9"), DiagramError);
  }

  TEST_CASE("push-off commutes with split union away from the copied component") {
    auto h = hopf_link(1);
    auto w = relabel(whitehead_link(), {"a", "b"});
    auto lhs = pushoff(split_union(h, w), "1");
    auto rhs = split_union(pushoff(h, "1"), w);
    auto reordered = permute_components(lhs, {0, 1, 4, 2, 3});
    CHECK(reordered.crossings().size() == rhs.crossings().size());
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) CHECK(reordered.linking_number(i, j) == rhs.linking_number(i, j));
  }

  TEST_CASE("push-offs of catalog links are planar with zero self-linking") {
    for (const auto& d : {hopf_link(1), borromean_rings(), whitehead_link(), torus_link_2(4)}) {
      for (const auto& label : d.labels()) {
        auto p = pushoff(d, label);
        CHECK(p.linking_number(d.index_of(label), p.strand_count() - 1) == 0);
        CHECK(testing::is_planar(p));
      }
    }
  }

  TEST_CASE("sublink, relabel, mirror, permutation") {
    auto b = borromean_rings();
    auto s = sublink(b, {"1", "3"});
    CHECK(s.strand_count() == 2);
    CHECK(s.labels() == std::vector<std::string>{"1", "3"});
    CHECK(s.linking_number(0, 1) == 0);
    CHECK(testing::is_planar(s));
    auto r = relabel(b, {"x", "y", "z"});
    CHECK(r.index_of("z") == 2);
    auto m = mirror(hopf_link(1));
    CHECK(m.linking_number(0, 1) == -1);
    CHECK(testing::is_planar(m));
    CHECK(mirror(mirror(b)) == b);
    auto p = permute_components(b, {2, 0, 1});
    CHECK(p.labels() == std::vector<std::string>{"3", "1", "2"});
    CHECK_THROWS_AS(permute_components(whitehead_string_link(), {1, 0}), DiagramError);
  }

  TEST_CASE("planarity oracle rejects an inconsistent crossing") {
    auto b = closure(braid_string_link(2, {1, 1, 1}));
    CHECK(testing::is_planar(b));
    auto crossings = b.crossings();
    crossings[0].sign = -crossings[0].sign;
    LinkDiagram flipped(DiagramKind::closed, b.strands(), crossings);
    CHECK_FALSE(testing::is_planar(flipped));
  }

  TEST_CASE("derived links of L(beta) are planar and zero-linking") {
    auto bundle = build_l_beta_bundle(whitehead_string_link());
    for (const auto& pair : bundle.derived) {
      for (const auto* d : {&pair.a, &pair.b}) {
        CHECK(testing::is_planar(*d));
        CHECK(all_zero_linking(*d));
        CHECK(d->strand_count() == 3);
      }
    }
  }
}
