#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fca/lattice.hpp"
#include "fca/morphisms.hpp"
#include "fca/order.hpp"

namespace fca {

/// Outcome of one named instance-level verification run.
struct CheckReport {
  std::string title;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> falsifications;

  void add(const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
    if (!ok) falsifications.push_back(title + ": " + name);
  }
  bool ok() const {
    for (const auto& [n, v] : checks)
      if (!v) return false;
    return falsifications.empty();
  }
};

/// Complete hom φ between complete lattices ↦ the pair (φ, φ) between the
/// complete contexts; asserted conceptual.
MappingPair apply_C(const MonoMap& phi);
/// Doubly residual ψ ↦ (ψ_{**}, ψ); asserted concept continuous.
MappingPair apply_C_star(const MonoMap& psi);
/// Doubly residuated φ ↦ (φ, φ**); asserted concept continuous.
MappingPair apply_C_lower(const MonoMap& phi);

/// Conceptual pair ↦ the common lift α→ = β→ (asserted equal, complete hom).
MonoMap apply_B(const MappingPair& p);
/// Concept continuous pair ↦ the reverse complete hom (C,D) ↦ (α⁻[C], β⁻[D]),
/// asserted equal to both backward lifts.
MonoMap apply_B_contra(const MappingPair& p);

/// For every separately continuous pair K → C L: existence and uniqueness of
/// the factorization through the unit, naturality, and the counit triangles.
CheckReport verify_adjunction(const Context& k, const FiniteLattice& l);

/// Condition lists of the subcontext / relation corollaries, each condition
/// evaluated independently; returned as LemmaForms so consensus is checkable.
LemmaForms subcontext_conceptual_check(const Context& l, const Bitset& objs,
                                       const Bitset& attrs);
LemmaForms compatible_subcontext_check(const Context& l, const Bitset& objs,
                                       const Bitset& attrs);
/// K = (G,M,I) and L = (G,M,J) on identical carriers: is J a closed relation
/// of K (concept set contained as a complete sublattice)?
LemmaForms closed_relation_check(const Context& k, const Context& l);
/// Identity pair (G,M,I) → (G,M,J): conceptual iff J coarsens I suitably.
LemmaForms coarser_relation_check(const Context& k, const Context& l);

/// η_K: K ≅ CᵒBᵒK as a context isomorphism (purified K only).
CheckReport verify_purified_equivalence(const Context& k);
/// ι: Kb ≅ BᵒCᵒKb carrying bases to bases.
CheckReport verify_doubly_based_equivalence(const DoublyBasedLattice& kb);

/// Complete hom preserving join-/meet-irreducibles between irreducibly
/// bigenerated lattices ↦ its restriction pair between the standard contexts;
/// asserted conceptual.
MappingPair apply_S(const MonoMap& phi);

/// For reduced contexts a, b: conceptual pairs a → b biject with least-base
/// preserving complete homs B a → B b; concept continuous pairs biject with
/// complete homs B b → B a whose adjoints preserve the bases.
CheckReport verify_reduced_equivalence(const Context& a, const Context& b);

/// For purified contexts a, b: residuated ⇔ adjoint pair residual, the six
/// preimage/image identities, base preservation/reflection of the induced
/// hom, adjoint round trips, and partner reconstruction.
CheckReport verify_duality_r(const Context& a, const Context& b);

}  // namespace fca
