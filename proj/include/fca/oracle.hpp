#pragma once

#include <cstdint>
#include <vector>

#include "fca/context.hpp"
#include "fca/morphisms.hpp"
#include "fca/order.hpp"

namespace fca {

/// Reference implementation by full powerset scan: { (A, A↑) : A = A↑↓ },
/// sorted by extent. Independent of the incremental builder. |G| ≤ 16.
std::vector<FormalConcept> brute_force_concepts(const Context& ctx);

/// Every context with 0..g_max objects and 0..m_max attributes, every
/// incidence relation, in a fixed deterministic order. g_max·m_max ≤ 16.
std::vector<Context> enumerate_contexts(std::size_t g_max, std::size_t m_max);

/// All h^g · n^m mapping pairs from k to l (none when a carrier of l is
/// empty while the matching carrier of k is not).
std::vector<MappingPair> enumerate_pairs(const Context& k, const Context& l);

/// All complete lattices with 1..n_max elements up to order isomorphism,
/// obtained by filtering the order matrices of a fixed linear extension.
/// n_max ≤ 6.
std::vector<FiniteLattice> enumerate_lattices(std::size_t n_max);

/// All |Q|^|P| total maps from p to q.
std::vector<MonoMap> enumerate_maps(const Poset& p, const Poset& q);

/// Deterministic pseudo-random context: a splitmix64 stream seeded with
/// `seed`, one draw per cell in row-major order; a cell is incident iff its
/// top 53 bits, scaled to [0,1), are below `density`.
Context random_context(std::size_t g_size, std::size_t m_size, double density,
                       std::uint64_t seed);

}  // namespace fca
