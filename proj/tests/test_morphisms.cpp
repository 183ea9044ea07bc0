#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fca/morphisms.hpp"
#include "fca/oracle.hpp"

using namespace fca;

namespace {

Context diag() {
  return Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {1, 1}});
}

Context chain2() {
  return Context::of({"g0", "g1"}, {"m0", "m1"}, {{0, 0}, {0, 1}, {1, 1}});
}

// Identity on the shared carriers, viewed as a pair between two contexts.
MappingPair carrier_identity(const Context& k, const Context& l) {
  return MappingPair(k, l, {0, 1}, {0, 1});
}

}  // namespace

TEST_CASE("pair construction validates the tables") {
  Context k = diag(), l = chain2();
  CHECK_THROWS_AS(MappingPair(k, l, {0}, {0, 1}), DimensionError);
  CHECK_THROWS_AS(MappingPair(k, l, {0, 2}, {0, 1}), DimensionError);
  CHECK_THROWS_AS(MappingPair(k, l, {0, 1}, {0, -1}), DimensionError);
}

TEST_CASE("images and preimages respect set ownership") {
  Context k = diag(), l = chain2();
  MappingPair p = carrier_identity(k, l);
  CHECK(p.alpha_image(k.object_set({0})).bits == Bitset::of(2, {0}));
  CHECK(p.beta_preimage(l.attribute_set({1})).bits == Bitset::of(2, {1}));
  CHECK_THROWS_AS(p.alpha_image(l.object_set({0})), OwnershipError);
  CHECK_THROWS_AS(p.alpha_preimage(k.object_set({0})), OwnershipError);
}

TEST_CASE("the identity pair is everything at once") {
  MorphismClassification mc = classify(MappingPair::identity(chain2()));
  CHECK(mc.consistent());
  CHECK(mc.conceptual.value());
  CHECK(mc.concept_continuous.value());
  CHECK(mc.dense_embedding);
  CHECK(mc.context_isomorphism);
  REQUIRE(mc.residuated_pair.has_value());  // chain2 is purified
  CHECK(*mc.residuated_pair);
  CHECK(*mc.residual_pair);
}

TEST_CASE("coarsening the incidence relation along the identity carriers") {
  // diag's relation is contained in chain2's, so the identity pair preserves
  // incidence but does not reflect it.
  MappingPair p = carrier_identity(diag(), chain2());
  CHECK(is_incidence_preserving(p));
  CHECK_FALSE(is_incidence_reflecting(p));
  CHECK_FALSE(is_context_embedding(p));
  // In the other direction it reflects but does not preserve.
  MappingPair q = carrier_identity(chain2(), diag());
  CHECK_FALSE(is_incidence_preserving(q));
  CHECK(is_incidence_reflecting(q));
  // chain2 -> diag pulls the extent {g1} back to the non-extent {g1}.
  CHECK_FALSE(is_extent_continuous(q));
  CHECK_THROWS_AS(lift_backward(q), ClassError);
}

TEST_CASE("every enumerated pair classifies without falsifications") {
  Context k = diag(), l = chain2();
  for (const MappingPair& p : enumerate_pairs(k, l)) {
    MorphismClassification mc = classify(p);
    CHECK(mc.consistent());
    if (mc.conceptual.value()) {
      CHECK(mc.separately_continuous);
      CHECK(mc.concept_preserving);
    }
  }
}

TEST_CASE("forward lift of the identity pair is the identity") {
  Context c = chain2();
  MappingPair id = MappingPair::identity(c);
  auto [af, bf] = lift_forward(id);
  CHECK(af == MonoMap::identity(af.source));
  CHECK(af == bf);
  auto [ab, bb] = lift_backward(id);
  CHECK(ab == MonoMap::identity(ab.source));
  CHECK(ab == bb);
}

TEST_CASE("forward and backward lifts of a separately continuous pair") {
  // diag -> chain2 along the carriers is separately continuous (checked), and
  // the backward lift must send each concept to its alpha/beta preimages.
  MappingPair p = carrier_identity(diag(), chain2());
  REQUIRE(is_separately_continuous(p));
  auto [ab, bb] = lift_backward(p);
  ConceptLattice bk = build_concept_lattice(p.source);
  ConceptLattice bl = build_concept_lattice(p.target);
  for (std::size_t i = 0; i < bl.size(); ++i) {
    Bitset pre_extent = p.alpha_preimage(bl.concepts[i].extent).bits;
    CHECK(bk.concepts[ab(i)].extent.bits == pre_extent);
    Bitset pre_intent = p.beta_preimage(bl.concepts[i].intent).bits;
    CHECK(bk.concepts[bb(i)].intent.bits == pre_intent);
  }
}

TEST_CASE("the unit is a dense embedding and factorization is the identity") {
  Context c = chain2();
  MappingPair eta = unit(c);
  CHECK(is_dense_embedding(eta));
  ConceptLattice bk = build_concept_lattice(c);
  auto [av, bi] = factorize_through_unit(eta, bk.lattice);
  // Factorizing the unit itself through the unit yields the two lifts of the
  // identity: both are the identity on B K.
  CHECK(av == MonoMap::identity(bk.lattice.poset()));
  CHECK(av == bi);
}

TEST_CASE("specialization posets demand purity") {
  Context dup = Context::of({"a", "b"}, {"m"}, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(object_specialization_poset(dup), PurityError);
  Poset po = object_specialization_poset(chain2());
  CHECK(po.leq(0, 1));  // g0's intent contains g1's, so g0 is smaller
  CHECK_FALSE(po.leq(1, 0));
}

TEST_CASE("residuated pairs and their companions") {
  Context c = chain2();
  MappingPair id = MappingPair::identity(c);
  CHECK(is_residuated_pair(id));
  CHECK(is_residual_pair(id));
  auto comp = residual_companion(id);
  REQUIRE(comp.has_value());
  CHECK(comp->alpha == id.alpha);
  CHECK(comp->beta == id.beta);
  // A non-concept-continuous pair is not residuated and has no companion.
  MappingPair q = carrier_identity(chain2(), diag());
  CHECK_FALSE(is_residuated_pair(q));
  CHECK_FALSE(residual_companion(q).has_value());
  // Non-purified input is rejected outright.
  Context dup = Context::of({"a", "b"}, {"m"}, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(residuated_pair_forms(MappingPair::identity(dup)), PurityError);
}

TEST_CASE("each partner of a conceptual pair determines the other") {
  MappingPair p = carrier_identity(diag(), chain2());
  if (is_conceptual(p)) {
    auto [a, b] = partner_reconstruction(p, PartnerClass::conceptual);
    CHECK(a == p.alpha);
    CHECK(b == p.beta);
  }
  MappingPair id = MappingPair::identity(chain2());
  auto [a2, b2] = partner_reconstruction(id, PartnerClass::concept_continuous);
  CHECK(a2 == id.alpha);
  CHECK(b2 == id.beta);
}

TEST_CASE("composition preserves the morphism classes") {
  Context k = diag();
  // The swap is a context automorphism of diag.
  MappingPair swap(k, k, {1, 0}, {1, 0});
  REQUIRE(is_context_isomorphism(swap));
  MappingPair twice = MappingPair::compose(swap, swap);
  CHECK(twice.alpha == MappingPair::identity(k).alpha);
  // Conceptual o conceptual stays conceptual across enumerated pairs.
  for (const MappingPair& p : enumerate_pairs(k, k))
    if (is_conceptual(p)) CHECK(is_conceptual(MappingPair::compose(swap, p)));
}
