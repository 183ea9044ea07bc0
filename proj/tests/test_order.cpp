#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fca/adjoints.hpp"
#include "fca/order.hpp"

using namespace fca;

namespace {

Poset diamond_poset() {
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (std::size_t i = 0; i < 4; ++i) leq[i][i] = true;
  leq[0][1] = leq[0][2] = leq[0][3] = leq[1][3] = leq[2][3] = true;
  return Poset({"bot", "a", "b", "top"}, leq);
}

}  // namespace

TEST_CASE("poset construction enforces the order axioms") {
  std::vector<std::vector<bool>> not_reflexive{{false, false}, {false, true}};
  CHECK_THROWS_AS(Poset({"x", "y"}, not_reflexive), OrderError);
  std::vector<std::vector<bool>> not_antisym{{true, true}, {true, true}};
  CHECK_THROWS_AS(Poset({"x", "y"}, not_antisym), OrderError);
  std::vector<std::vector<bool>> not_trans(3, std::vector<bool>(3, false));
  for (int i = 0; i < 3; ++i) not_trans[i][i] = true;
  not_trans[0][1] = not_trans[1][2] = true;
  CHECK_THROWS_AS(Poset({"x", "y", "z"}, not_trans), OrderError);
}

TEST_CASE("bounds, suprema, and cuts in a diamond") {
  Poset p = diamond_poset();
  CHECK(p.supremum(Bitset::of(4, {1, 2})) == 3);
  CHECK(p.infimum(Bitset::of(4, {1, 2})) == 0);
  CHECK(p.maximum(Bitset::of(4, {1, 2})) == std::nullopt);
  CHECK(p.minimum(Bitset::of(4, {0, 1})) == 0);
  CHECK(p.covers(0, 1));
  CHECK_FALSE(p.covers(0, 3));
  // Every lower cut of a lattice is a principal ideal.
  for (const auto& cut : p.lower_cuts()) {
    auto m = p.maximum(cut);
    REQUIRE(m.has_value());
    CHECK(cut == p.down_set(*m));
  }
}

TEST_CASE("lattice construction rejects posets without bounds") {
  CHECK_THROWS_AS(FiniteLattice(Poset::antichain(2)), OrderError);
  FiniteLattice l(diamond_poset());
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 3);
  CHECK(l.join(1, 2) == 3);
  CHECK(l.meet(1, 2) == 0);
  CHECK(l.sup(Bitset(4)) == l.bottom());
  CHECK(l.inf(Bitset(4)) == l.top());
}

TEST_CASE("map predicates") {
  Poset c2 = Poset::chain(2);
  Poset d = diamond_poset();
  MonoMap embed(c2, d, {0, 3});
  CHECK(embed.is_isotone());
  CHECK(embed.is_order_embedding());
  CHECK_FALSE(embed.is_surjective());
  MonoMap collapse(d, c2, {0, 0, 0, 1});
  CHECK(collapse.is_isotone());
  CHECK(collapse.is_surjective());
  CHECK_FALSE(collapse.is_order_embedding());
  CHECK(MonoMap::compose(collapse, embed) == MonoMap::identity(c2));
}

TEST_CASE("order isomorphism search") {
  Poset d = diamond_poset();
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (std::size_t i = 0; i < 4; ++i) leq[i][i] = true;
  leq[1][0] = leq[1][2] = leq[1][3] = leq[0][3] = leq[2][3] = true;
  Poset relabeled({"p", "q", "r", "s"}, leq);  // diamond with bottom at index 1
  CHECK(order_isomorphic(d, relabeled));
  CHECK_FALSE(order_isomorphic(d, Poset::chain(4)));
}

TEST_CASE("adjoints of a lattice collapse") {
  FiniteLattice d(diamond_poset());
  Poset c2 = Poset::chain(2);
  // bot, a -> 0 and b, top -> 1: the complete hom folding one atom away.
  MonoMap fold(d.poset(), c2, {0, 0, 1, 1});
  auto upper = upper_adjoint(fold);
  REQUIRE(upper.has_value());
  CHECK(upper->table == std::vector<int>{1, 3});  // largest preimages: a, top
  CHECK(adjunction_law_holds(fold, *upper));
  auto lower = lower_adjoint(fold);
  REQUIRE(lower.has_value());
  CHECK(lower->table == std::vector<int>{0, 2});  // least preimages: bot, b
  // Keeping only the top is meet- but not join-preserving, so it is residual
  // without being residuated.
  MonoMap keep_top(d.poset(), c2, {0, 0, 0, 1});
  CHECK_FALSE(is_join_preserving(keep_top));
  CHECK(is_meet_preserving(keep_top));
  CHECK_FALSE(is_residuated(keep_top));
  CHECK(is_residual(keep_top));
}

TEST_CASE("cut continuity separates from residuation on posets") {
  // The two atoms of the diamond form a cut-continuous, non-residuated image.
  MonoMap w(Poset::antichain(2), diamond_poset(), {1, 2});
  CHECK(is_lower_cut_continuous(w));
  CHECK_FALSE(is_residuated(w));
  // Collapsing a three-element antichain preserves all existing suprema but
  // pulls a point back to a non-cut.
  MonoMap w2(Poset::antichain(3), Poset::antichain(2), {0, 0, 1});
  CHECK(is_join_preserving(w2));
  CHECK_FALSE(is_lower_cut_continuous(w2));
}

TEST_CASE("classification flags are consistent on a complete hom") {
  FiniteLattice d(diamond_poset());
  FiniteLattice c2(Poset::chain(2));
  MonoMap fold(d.poset(), c2.poset(), {0, 0, 1, 1});
  MapClassification mc = classify_lattice_map(fold);
  CHECK(mc.isotone);
  CHECK(mc.join_preserving);
  CHECK(mc.meet_preserving);
  CHECK(mc.complete_hom);
  CHECK(mc.residuated);
  CHECK(mc.residual);
  CHECK(mc.surjective);
  CHECK_FALSE(mc.injective);
  CHECK(mc.join_dense_image);
}
