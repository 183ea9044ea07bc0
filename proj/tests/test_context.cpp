#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fca/context.hpp"
#include "fca/oracle.hpp"

using namespace fca;

namespace {

Context diag() {
  return Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {1, 1}});
}

Context chain2() {
  // g0 has both attributes, g1 only the second: a two-element chain of concepts.
  return Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {0, 1}, {1, 1}});
}

}  // namespace

TEST_CASE("construction validates names and dimensions") {
  CHECK_THROWS_AS(Context({"g", "g"}, {"m"}, {{true}, {false}}), DimensionError);
  CHECK_THROWS_AS(Context({"g"}, {"m", "m"}, {{true, false}}), DimensionError);
  CHECK_THROWS_AS(Context({"g"}, {"m"}, {{true, false}}), DimensionError);
  CHECK_THROWS_AS(Context({"g"}, {"m"}, {}), DimensionError);
}

TEST_CASE("derivation operators on a diagonal context") {
  Context c = diag();
  CHECK(c.up(c.object_set({0})).bits == Bitset::of(2, {0}));
  CHECK(c.up(c.object_set({1})).bits == Bitset::of(2, {1}));
  CHECK(c.up(c.object_set({0, 1})).bits == Bitset(2));
  CHECK(c.down(c.attribute_set({0})).bits == Bitset::of(2, {0}));

  SUBCASE("empty sets derive to full sets") {
    CHECK(c.up(c.empty_objects()).bits == Bitset(2, true));
    CHECK(c.down(c.empty_attributes()).bits == Bitset(2, true));
  }
}

TEST_CASE("closure is extensive, monotone, and idempotent") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Context c = random_context(4, 3, 0.4, seed);
    for_each_subset(4, [&](const Bitset& bits) {
      ObjSet a = c.object_set(bits);
      ObjSet cl = c.extent_closure(a);
      CHECK(bits.is_subset_of(cl.bits));
      CHECK(c.extent_closure(cl) == cl);
    });
  }
}

TEST_CASE("concepts and the object/attribute concept maps") {
  Context c = diag();
  CHECK(c.is_concept(c.object_set({0}), c.attribute_set({0})));
  CHECK_FALSE(c.is_concept(c.object_set({0}), c.attribute_set({1})));
  FormalConcept g0 = c.object_concept(0);
  CHECK(g0.extent.bits == Bitset::of(2, {0}));
  CHECK(g0.intent.bits == Bitset::of(2, {0}));
  FormalConcept m1 = c.attribute_concept(1);
  CHECK(m1.extent.bits == Bitset::of(2, {1}));
}

TEST_CASE("sets are tied to their owning context") {
  Context a = diag(), b = chain2();
  CHECK_THROWS_AS(a.up(b.object_set({0})), OwnershipError);
  CHECK_THROWS_AS(a.down(b.attribute_set({0})), OwnershipError);
}

TEST_CASE("specialization and purity") {
  Context c = chain2();
  // g0's intent contains g1's, so g0 is the more special (smaller) object.
  CHECK(c.obj_specialization_leq(0, 1));
  CHECK_FALSE(c.obj_specialization_leq(1, 0));
  CHECK(c.is_purified());

  Context dup = Context::of({"a", "b"}, {"m"}, {{0, 0}, {1, 0}});
  CHECK_FALSE(dup.is_purified());  // identical rows
}

TEST_CASE("extent and intent listings agree with the definitions") {
  Context c = chain2();
  auto exts = c.extents();
  CHECK(exts.size() == 2);  // {g0} and {g0, g1}
  for (const auto& e : exts) CHECK(c.is_extent(c.object_set(e)));
  auto ints = c.intents();
  CHECK(ints.size() == exts.size());
}
