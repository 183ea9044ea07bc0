#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "fca/lattice.hpp"
#include "fca/oracle.hpp"

using namespace fca;

TEST_CASE("brute-force concepts on a hand-checked context") {
  Context c = Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {0, 1}, {1, 1}});
  std::vector<FormalConcept> got = brute_force_concepts(c);
  REQUIRE(got.size() == 2);
  CHECK(got[0].extent.bits == Bitset::of(2, {0}));
  CHECK(got[0].intent.bits == Bitset(2, true));
  CHECK(got[1].extent.bits == Bitset(2, true));
  CHECK(got[1].intent.bits == Bitset::of(2, {1}));
  // Degenerate carriers still have exactly one concept.
  Context empty({}, {}, std::vector<std::vector<bool>>{});
  CHECK(brute_force_concepts(empty).size() == 1);
}

TEST_CASE("context enumeration covers every shape and relation exactly once") {
  std::vector<Context> all = enumerate_contexts(2, 2);
  // Sum of 2^(g*m) over g,m in 0..2.
  CHECK(all.size() == 31);
  std::set<std::string> seen;
  for (const Context& c : all) {
    std::string key = std::to_string(c.object_count()) + "x" +
                      std::to_string(c.attribute_count()) + ":";
    for (std::size_t g = 0; g < c.object_count(); ++g)
      for (std::size_t m = 0; m < c.attribute_count(); ++m)
        key += c.incident(g, m) ? '1' : '0';
    CHECK(seen.insert(key).second);
  }
}

TEST_CASE("pair enumeration counts and empty-carrier edge cases") {
  Context k = Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {1, 1}});
  CHECK(enumerate_pairs(k, k).size() == 16);  // 2^2 alphas times 2^2 betas
  Context no_objects({}, {"m"}, std::vector<std::vector<bool>>{});
  CHECK(enumerate_pairs(k, no_objects).empty());  // nowhere to send g0
  CHECK(enumerate_pairs(no_objects, k).size() == 2);  // only beta varies
}

TEST_CASE("lattice enumeration matches the known counts up to isomorphism") {
  std::vector<FiniteLattice> all = enumerate_lattices(5);
  std::map<std::size_t, std::size_t> by_size;
  for (const FiniteLattice& l : all) ++by_size[l.size()];
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 1);
  CHECK(by_size[4] == 2);   // 4-chain and the diamond
  CHECK(by_size[5] == 5);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK_FALSE(lattice_isomorphic(all[i], all[j]));
}

TEST_CASE("map enumeration is total and exhaustive") {
  std::vector<MonoMap> maps = enumerate_maps(Poset::chain(2), Poset::chain(3));
  CHECK(maps.size() == 9);
  std::set<std::vector<int>> tables;
  for (const MonoMap& m : maps) tables.insert(m.table);
  CHECK(tables.size() == 9);
}

TEST_CASE("random contexts are deterministic in the seed") {
  Context a = random_context(4, 5, 0.5, 42);
  Context b = random_context(4, 5, 0.5, 42);
  CHECK(a == b);
  CHECK_FALSE(random_context(4, 5, 0.5, 43) == a);
  // Density extremes.
  Context empty_rel = random_context(3, 3, 0.0, 7);
  Context full_rel = random_context(3, 3, 1.0, 7);
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t m = 0; m < 3; ++m) {
      CHECK_FALSE(empty_rel.incident(g, m));
      CHECK(full_rel.incident(g, m));
    }
}
