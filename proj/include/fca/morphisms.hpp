#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fca/adjoints.hpp"
#include "fca/context.hpp"
#include "fca/lattice.hpp"
#include "fca/order.hpp"

namespace fca {

/// A pair (α, β) of total maps: α on objects, β on attributes, both running
/// from the source context to the target context.
struct MappingPair {
  Context source;
  Context target;
  std::vector<int> alpha;
  std::vector<int> beta;

  MappingPair(Context src, Context tgt, std::vector<int> a, std::vector<int> b);

  static MappingPair identity(const Context& k);
  /// q ∘ p (apply p first); componentwise composition.
  static MappingPair compose(const MappingPair& q, const MappingPair& p);

  std::size_t a(std::size_t g) const { return static_cast<std::size_t>(alpha.at(g)); }
  std::size_t b(std::size_t m) const { return static_cast<std::size_t>(beta.at(m)); }

  // Images live in the target context, preimages in the source context.
  ObjSet alpha_image(const ObjSet& s) const;
  ObjSet alpha_preimage(const ObjSet& s) const;
  AttrSet beta_image(const AttrSet& s) const;
  AttrSet beta_preimage(const AttrSet& s) const;
};

/// Result of evaluating every equivalent characterization of one lemma.
struct LemmaForms {
  std::string name;
  std::vector<std::pair<std::string, bool>> forms;

  bool agree() const {
    for (const auto& [n, v] : forms)
      if (v != forms.front().second) return false;
    return true;
  }
  /// Consensus value; throws InternalError when the forms disagree (which
  /// would falsify an equivalence this library treats as a theorem).
  bool value() const {
    if (!agree())
      throw InternalError("characterization forms disagree for " + name);
    return forms.front().second;
  }
};

// Per-lemma evaluators; each form is computed independently.
LemmaForms extent_continuous_forms(const MappingPair& p);
LemmaForms intent_continuous_forms(const MappingPair& p);
LemmaForms extent_dense_forms(const MappingPair& p);
LemmaForms intent_dense_forms(const MappingPair& p);
LemmaForms extent_full_forms(const MappingPair& p);
LemmaForms intent_full_forms(const MappingPair& p);
LemmaForms incidence_preserving_forms(const MappingPair& p);
LemmaForms incidence_reflecting_forms(const MappingPair& p);
LemmaForms conceptual_forms(const MappingPair& p);
LemmaForms concept_continuous_forms(const MappingPair& p);

// Consensus predicates (throw InternalError on intra-lemma disagreement).
bool is_extent_continuous(const MappingPair& p);
bool is_intent_continuous(const MappingPair& p);
bool is_separately_continuous(const MappingPair& p);
bool is_extent_dense(const MappingPair& p);
bool is_intent_dense(const MappingPair& p);
bool is_extent_full(const MappingPair& p);
bool is_intent_full(const MappingPair& p);
bool is_incidence_preserving(const MappingPair& p);
bool is_incidence_reflecting(const MappingPair& p);
bool is_context_embedding(const MappingPair& p);
bool is_concept_preserving(const MappingPair& p);
bool is_conceptual(const MappingPair& p);
bool is_concept_continuous(const MappingPair& p);
/// Embedding with both components dense; additionally asserted equal to
/// conceptual ∧ concept continuous.
bool is_dense_embedding(const MappingPair& p);
bool is_context_isomorphism(const MappingPair& p);

/// α→(A,B) = (α[A]↑↓, α[A]↑) and β→(A,B) = (β[B]↓, β[B]↓↑), both B K → B L.
std::pair<MonoMap, MonoMap> lift_forward(const MappingPair& p,
                                         const ConceptLattice& bk,
                                         const ConceptLattice& bl);
std::pair<MonoMap, MonoMap> lift_forward(const MappingPair& p);

/// α← = α→* : (C,D) ↦ (α⁻[C], α⁻[C]↑) and β← = β→_* : (C,D) ↦ (β⁻[D]↓, β⁻[D]),
/// both B L → B K; requires a separately continuous pair. The adjunctions
/// α← = upper_adjoint(α→) and β← = lower_adjoint(β→) are asserted.
std::pair<MonoMap, MonoMap> lift_backward(const MappingPair& p,
                                          const ConceptLattice& bk,
                                          const ConceptLattice& bl);
std::pair<MonoMap, MonoMap> lift_backward(const MappingPair& p);

/// η_K = (γ, μ) : K → C B K; asserted to be a dense embedding.
MappingPair unit(const Context& k);

/// For a separately continuous pair K → C L: the unique factorization
/// (α∨, β∧) through η_K with α∨(A,B) = Sup α[A], β∧(A,B) = Inf β[B].
std::pair<MonoMap, MonoMap> factorize_through_unit(const MappingPair& p,
                                                   const FiniteLattice& l);

/// Specialization orders of a purified context (PurityError otherwise).
Poset object_specialization_poset(const Context& ctx);
Poset attribute_specialization_poset(const Context& ctx);

/// Residuation classes of pairs (purified contexts only; PurityError otherwise).
LemmaForms residuated_pair_forms(const MappingPair& p);
LemmaForms residual_pair_forms(const MappingPair& p);
bool is_residuated_pair(const MappingPair& p);
bool is_residual_pair(const MappingPair& p);
/// (α*, β_*) : L → K for a residuated pair; absent when not residuated.
std::optional<MappingPair> residual_companion(const MappingPair& p);

enum class PartnerClass { conceptual, concept_continuous };
/// Recomputes α from β and β from α via the max/min identities of the given
/// class and asserts equality with the stored partner.
std::pair<std::vector<int>, std::vector<int>> partner_reconstruction(
    const MappingPair& p, PartnerClass which);

struct MorphismClassification {
  LemmaForms extent_continuous, intent_continuous;
  LemmaForms extent_dense, intent_dense;
  LemmaForms extent_full, intent_full;
  LemmaForms incidence_preserving, incidence_reflecting;
  LemmaForms conceptual, concept_continuous;
  bool separately_continuous = false;
  bool concept_preserving = false;
  bool embedding = false;
  bool dense_embedding = false;
  bool context_isomorphism = false;
  // Only evaluated when both contexts are purified.
  std::optional<bool> residuated_pair, residual_pair;
  /// Intra-lemma disagreements and cross-lemma theorem violations; empty on
  /// every input unless a genuine falsification was found.
  std::vector<std::string> falsifications;

  bool consistent() const { return falsifications.empty(); }
};

MorphismClassification classify(const MappingPair& p);

}  // namespace fca
