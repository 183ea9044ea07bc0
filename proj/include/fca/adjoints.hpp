#pragma once

#include <optional>

#include "fca/order.hpp"

namespace fca {

/// Greatest element of φ⁻[↓q] for every q, provided every such maximum exists
/// and the resulting map satisfies φ(p) ≤ q ⇔ p ≤ ψ(q) in full.
std::optional<MonoMap> upper_adjoint(const MonoMap& phi);
/// Least element of ψ⁻[↑p] for every p, plus full verification of the law.
std::optional<MonoMap> lower_adjoint(const MonoMap& psi);

/// φ(p) ≤ q ⇔ p ≤ ψ(q) for all p, q (φ lower, ψ upper).
bool adjunction_law_holds(const MonoMap& phi, const MonoMap& psi);

/// Preimage of every principal ideal ↓q is a principal ideal.
bool is_residuated(const MonoMap& phi);
/// Preimage of every principal filter ↑p is a principal filter.
bool is_residual(const MonoMap& psi);

/// Preimage of every lower cut is a lower cut.
bool is_lower_cut_continuous(const MonoMap& phi);
bool is_upper_cut_continuous(const MonoMap& phi);

/// Preserves every existing supremum: whenever sup A exists in the source,
/// sup φ[A] exists in the target and equals φ(sup A). On complete lattices
/// this is full join preservation (including sup ∅ = bottom).
bool is_join_preserving(const MonoMap& phi);
bool is_meet_preserving(const MonoMap& phi);
bool is_complete_hom(const MonoMap& phi);

bool is_doubly_residuated(const MonoMap& phi);
bool is_doubly_residual(const MonoMap& phi);

/// Every target element is the supremum of the image elements below it.
bool has_join_dense_image(const MonoMap& phi);
bool has_meet_dense_image(const MonoMap& phi);

struct MapClassification {
  bool isotone = false;
  bool residuated = false;
  bool residual = false;
  bool lower_cut_continuous = false;
  bool upper_cut_continuous = false;
  bool join_preserving = false;
  bool meet_preserving = false;
  bool complete_hom = false;
  bool doubly_residuated = false;
  bool doubly_residual = false;
  bool injective = false;
  bool surjective = false;
  bool order_embedding = false;
  bool order_isomorphism = false;
  bool join_dense_image = false;
  bool meet_dense_image = false;
};

MapClassification classify_lattice_map(const MonoMap& phi);

}  // namespace fca
