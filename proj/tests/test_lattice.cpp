#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fca/lattice.hpp"
#include "fca/oracle.hpp"

using namespace fca;

namespace {

Context diag3() {
  return Context::of({"g0", "g1", "g2"}, {"m0", "m1", "m2"},
                     {{0, 0}, {1, 1}, {2, 2}});
}

Context chain2() {
  return Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {0, 1}, {1, 1}});
}

}  // namespace

TEST_CASE("concept lattice of a 3x3 diagonal context is the 3-atom diamond") {
  Context c = diag3();
  ConceptLattice cl = build_concept_lattice(c);
  CHECK(cl.size() == 5);
  // Every listed pair really is a concept, and γ/μ point at the right ones.
  for (const auto& fc : cl.concepts) CHECK(c.is_concept(fc));
  for (std::size_t g = 0; g < 3; ++g)
    CHECK(cl.concepts[cl.gamma[g]].extent.bits == Bitset::of(3, {g}));
  for (std::size_t m = 0; m < 3; ++m)
    CHECK(cl.concepts[cl.mu[m]].intent.bits == Bitset::of(3, {m}));
  // Two distinct atoms join to the top, meet at the bottom.
  std::size_t a = cl.gamma[0], b = cl.gamma[1];
  CHECK(cl.lattice.join(a, b) == cl.lattice.top());
  CHECK(cl.lattice.meet(a, b) == cl.lattice.bottom());
  CHECK(cl.concepts[cl.lattice.bottom()].extent.bits == Bitset(3));
  CHECK(cl.concepts[cl.lattice.top()].extent.bits == Bitset(3, true));
}

TEST_CASE("builder agrees with the brute-force oracle on random contexts") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Context c = random_context(4, 4, 0.3 + 0.02 * static_cast<double>(seed), seed);
    ConceptLattice cl = build_concept_lattice(c);
    std::vector<FormalConcept> got = cl.concepts;
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_concepts(c));
  }
}

TEST_CASE("irreducibles and density in the concept lattice") {
  ConceptLattice cl = build_concept_lattice(diag3());
  Bitset ji = join_irreducibles(cl.lattice);
  Bitset mi = meet_irreducibles(cl.lattice);
  CHECK(ji.count() == 3);  // exactly the atoms
  CHECK(mi.count() == 3);  // atoms are also coatom-meets' generators here
  CHECK_FALSE(ji.test(cl.lattice.bottom()));
  CHECK_FALSE(ji.test(cl.lattice.top()));
  CHECK(join_dense_in(cl.lattice, ji));
  CHECK(meet_dense_in(cl.lattice, mi));
  CHECK_FALSE(join_dense_in(cl.lattice, Bitset::of(5, {cl.lattice.top()})));
  CHECK(is_irreducibly_bigenerated(cl.lattice));
}

TEST_CASE("complete context of a lattice reproduces the lattice") {
  ConceptLattice cl = build_concept_lattice(diag3());
  Context cc = complete_context(cl.lattice);
  CHECK(cc.object_count() == cl.size());
  CHECK(cc.objects() == cc.attributes());
  ConceptLattice doubled = build_concept_lattice(cc);
  CHECK(lattice_isomorphic(doubled.lattice, cl.lattice));
  MonoMap eps = counit(cl.lattice);
  CHECK(eps.is_order_isomorphism());
}

TEST_CASE("standard context of the diamond is the diagonal context") {
  ConceptLattice cl = build_concept_lattice(diag3());
  Context sc = standard_context(cl.lattice);
  CHECK(sc.object_count() == 3);
  CHECK(sc.attribute_count() == 3);
  CHECK(context_isomorphic(sc, diag3()));
  CHECK(is_reduced(sc));
}

TEST_CASE("purify removes duplicate rows and columns only") {
  Context dup = Context::of({"a", "b", "c"}, {"m", "n"},
                            {{0, 0}, {1, 0}, {2, 1}});  // a and b share their row
  CHECK_FALSE(dup.is_purified());
  Context p = purify(dup);
  CHECK(p.is_purified());
  CHECK(p.object_count() == 2);
  CHECK(p.attribute_count() == 2);
  CHECK(lattice_isomorphic(build_concept_lattice(p).lattice,
                           build_concept_lattice(dup).lattice));
  // An already purified context keeps its shape.
  CHECK(purify(chain2()).object_count() == 2);
}

TEST_CASE("reduce drops reducible rows and columns") {
  Context c = chain2();
  CHECK_FALSE(is_reduced(c));  // B(chain2) is a 2-chain: one object, one attribute
  Context r = reduce(c);
  CHECK(is_reduced(r));
  CHECK(r.object_count() == 1);
  CHECK(r.attribute_count() == 1);
  CHECK(lattice_isomorphic(build_concept_lattice(r).lattice,
                           build_concept_lattice(c).lattice));
  CHECK(is_reduced(diag3()));
}

TEST_CASE("doubly based lattices and their base contexts") {
  Context c = diag3();
  DoublyBasedLattice db = doubly_based_of_context(c);
  CHECK(db.join_base == build_concept_lattice(c).gamma_image());
  Context back = base_context(db);
  CHECK(context_isomorphic(back, c));  // diag3 is purified
  CHECK_THROWS_AS(DoublyBasedLattice(db.lattice,
                                     Bitset::of(5, {db.lattice.top()}),
                                     db.meet_base),
                  OrderError);
  MonoMap i = iota(db);
  CHECK(i.is_order_isomorphism());
}

TEST_CASE("Dedekind-MacNeille completion of small orders") {
  // A 2-antichain completes to the four-element diamond.
  ConceptLattice anti = dm_completion(Poset::antichain(2));
  CHECK(anti.size() == 4);
  // A chain is already complete: the completion has the same size.
  ConceptLattice ch = dm_completion(Poset::chain(3));
  CHECK(ch.size() == 3);
  CHECK(lattice_isomorphic(ch.lattice, FiniteLattice(Poset::chain(3))));
}

TEST_CASE("context isomorphism search") {
  Context c = diag3();
  Context permuted = Context::of({"x", "y", "z"}, {"p", "q", "r"},
                                 {{0, 2}, {1, 0}, {2, 1}});
  auto iso = find_context_isomorphism(c, permuted);
  REQUIRE(iso.has_value());
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t m = 0; m < 3; ++m)
      CHECK(c.incident(g, m) ==
            permuted.incident(static_cast<std::size_t>(iso->object_map[g]),
                              static_cast<std::size_t>(iso->attribute_map[m])));
  CHECK_FALSE(context_isomorphic(c, chain2()));
}

TEST_CASE("subcontext restriction") {
  Context c = diag3();
  Context sub = make_subcontext(c, Bitset::of(3, {0, 2}), Bitset::of(3, {0}));
  CHECK(sub.object_count() == 2);
  CHECK(sub.attribute_count() == 1);
  CHECK(sub.objects() == std::vector<std::string>{"g0", "g2"});
  CHECK(sub.incident(0, 0));
  CHECK_FALSE(sub.incident(1, 0));
}
