#pragma once

#include <optional>
#include <vector>

#include "fca/context.hpp"
#include "fca/order.hpp"

namespace fca {

/// Concept lattice of a context. Concepts are listed in lectic order of
/// their intents; the lattice elements are labelled c0, c1, ... in that order.
struct ConceptLattice {
  Context context;
  std::vector<FormalConcept> concepts;
  FiniteLattice lattice;
  std::vector<int> gamma;  // object index -> concept index of γ(g)
  std::vector<int> mu;     // attribute index -> concept index of μ(m)

  std::size_t size() const { return concepts.size(); }
  /// Index of the concept with the given extent; throws if absent.
  std::size_t index_of_extent(const Bitset& extent) const;
  /// Extents of all concepts as bitsets over the source context's objects.
  Bitset gamma_image() const;
  Bitset mu_image() const;
};

/// NextClosure over attribute sets in lectic order.
ConceptLattice build_concept_lattice(const Context& ctx);

/// C L = (L, L, ≤).
Context complete_context(const FiniteLattice& l);

/// x is join-irreducible iff x strictly exceeds the join of all strictly
/// smaller elements; this excludes the bottom.
Bitset join_irreducibles(const FiniteLattice& l);
Bitset meet_irreducibles(const FiniteLattice& l);

bool join_dense_in(const FiniteLattice& l, const Bitset& subset);
bool meet_dense_in(const FiniteLattice& l, const Bitset& subset);

/// S L = (J(L), M(L), ≤).
Context standard_context(const FiniteLattice& l);

bool is_irreducibly_bigenerated(const FiniteLattice& l);

/// Complete lattice with designated join-dense and meet-dense subsets;
/// density of both bases is validated at construction.
struct DoublyBasedLattice {
  DoublyBasedLattice(FiniteLattice lat, Bitset jbase, Bitset mbase);

  FiniteLattice lattice;
  Bitset join_base;
  Bitset meet_base;
};

/// Bᵒ K: concept lattice with the γ-image as join-base and μ-image as meet-base.
DoublyBasedLattice doubly_based_of_context(const Context& ctx);

/// Cᵒ (K, J, M) = (J, M, ≤); the result is checked to be purified.
Context base_context(const DoublyBasedLattice& k);

/// ε_L: B C L → L, (↓x, ↑x) ↦ x; checked to be a lattice isomorphism.
MonoMap counit(const FiniteLattice& l);

/// ι: K.lattice → B Cᵒ K, x ↦ (J ∩ ↓x, M ∩ ↑x); an isomorphism carrying the
/// join-base onto the γ-image and the meet-base onto the μ-image (checked).
MonoMap iota(const DoublyBasedLattice& k);

/// Cᵒ Bᵒ K; purified, with concept lattice isomorphic to B K (checked).
Context purify(const Context& ctx);

/// S(B K); reduced, with concept lattice isomorphic to B K (checked).
Context reduce(const Context& ctx);

bool is_reduced(const Context& ctx);

/// Dedekind-MacNeille completion: concept lattice of (P, P, ≤).
ConceptLattice dm_completion(const Poset& p);

inline bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return order_isomorphic(a.poset(), b.poset());
}

/// Context isomorphism: a pair of bijections (object map, attribute map)
/// preserving and reflecting incidence.
struct ContextIsomorphism {
  std::vector<int> object_map;
  std::vector<int> attribute_map;
};
std::optional<ContextIsomorphism> find_context_isomorphism(const Context& a,
                                                           const Context& b);
inline bool context_isomorphic(const Context& a, const Context& b) {
  return find_context_isomorphism(a, b).has_value();
}

/// Restriction of a context to subsets of its objects and attributes.
Context make_subcontext(const Context& ctx, const Bitset& objs, const Bitset& attrs);

}  // namespace fca
