#include "fca/adjoints.hpp"

#include <algorithm>
#include <set>

#include "fca/context.hpp"  // for_each_subset

namespace fca {

namespace {

Bitset preimage(const MonoMap& phi, const Bitset& target_set) {
  Bitset r(phi.source.size());
  for (std::size_t p = 0; p < phi.source.size(); ++p)
    if (target_set.test(phi(p))) r.set(p);
  return r;
}

Bitset image(const MonoMap& phi, const Bitset& source_set) {
  Bitset r(phi.target.size());
  for (std::size_t p = 0; p < phi.source.size(); ++p)
    if (source_set.test(p)) r.set(phi(p));
  return r;
}

}  // namespace

bool adjunction_law_holds(const MonoMap& phi, const MonoMap& psi) {
  if (!(phi.source == psi.target) || !(phi.target == psi.source))
    throw DimensionError("adjunction candidates do not connect the same posets");
  for (std::size_t p = 0; p < phi.source.size(); ++p)
    for (std::size_t q = 0; q < phi.target.size(); ++q)
      if (phi.target.leq(phi(p), q) != phi.source.leq(p, psi(q))) return false;
  return true;
}

std::optional<MonoMap> upper_adjoint(const MonoMap& phi) {
  std::vector<int> table(phi.target.size(), -1);
  for (std::size_t q = 0; q < phi.target.size(); ++q) {
    auto mx = phi.source.maximum(preimage(phi, phi.target.down_set(q)));
    if (!mx) return std::nullopt;
    table[q] = static_cast<int>(*mx);
  }
  MonoMap psi(phi.target, phi.source, std::move(table));
  if (!adjunction_law_holds(phi, psi)) return std::nullopt;
  return psi;
}

std::optional<MonoMap> lower_adjoint(const MonoMap& psi) {
  std::vector<int> table(psi.target.size(), -1);
  for (std::size_t p = 0; p < psi.target.size(); ++p) {
    auto mn = psi.source.minimum(preimage(psi, psi.target.up_set(p)));
    if (!mn) return std::nullopt;
    table[p] = static_cast<int>(*mn);
  }
  MonoMap phi(psi.target, psi.source, std::move(table));
  if (!adjunction_law_holds(phi, psi)) return std::nullopt;
  return phi;
}

bool is_residuated(const MonoMap& phi) {
  for (std::size_t q = 0; q < phi.target.size(); ++q) {
    Bitset pre = preimage(phi, phi.target.down_set(q));
    auto mx = phi.source.maximum(pre);
    if (!mx || pre != phi.source.down_set(*mx)) return false;
  }
  return true;
}

bool is_residual(const MonoMap& psi) {
  for (std::size_t p = 0; p < psi.target.size(); ++p) {
    Bitset pre = preimage(psi, psi.target.up_set(p));
    auto mn = psi.source.minimum(pre);
    if (!mn || pre != psi.source.up_set(*mn)) return false;
  }
  return true;
}

bool is_lower_cut_continuous(const MonoMap& phi) {
  std::set<Bitset> source_cuts;
  for (const auto& c : phi.source.lower_cuts()) source_cuts.insert(c);
  for (const auto& c : phi.target.lower_cuts())
    if (!source_cuts.count(preimage(phi, c))) return false;
  return true;
}

bool is_upper_cut_continuous(const MonoMap& phi) {
  std::set<Bitset> source_cuts;
  for (const auto& c : phi.source.upper_cuts()) source_cuts.insert(c);
  for (const auto& c : phi.target.upper_cuts())
    if (!source_cuts.count(preimage(phi, c))) return false;
  return true;
}

bool is_join_preserving(const MonoMap& phi) {
  bool ok = true;
  for_each_subset(phi.source.size(), [&](const Bitset& a) {
    if (!ok) return;
    auto s = phi.source.supremum(a);
    if (!s) return;  // only existing suprema constrain the map
    auto t = phi.target.supremum(image(phi, a));
    if (!t || *t != phi(*s)) ok = false;
  });
  return ok;
}

bool is_meet_preserving(const MonoMap& phi) {
  bool ok = true;
  for_each_subset(phi.source.size(), [&](const Bitset& a) {
    if (!ok) return;
    auto s = phi.source.infimum(a);
    if (!s) return;
    auto t = phi.target.infimum(image(phi, a));
    if (!t || *t != phi(*s)) ok = false;
  });
  return ok;
}

bool is_complete_hom(const MonoMap& phi) {
  return is_join_preserving(phi) && is_meet_preserving(phi);
}

bool is_doubly_residuated(const MonoMap& phi) {
  if (!is_residuated(phi)) return false;
  auto psi = upper_adjoint(phi);
  return psi && is_residuated(*psi);
}

bool is_doubly_residual(const MonoMap& psi) {
  if (!is_residual(psi)) return false;
  auto phi = lower_adjoint(psi);
  return phi && is_residual(*phi);
}

bool has_join_dense_image(const MonoMap& phi) {
  Bitset img(phi.target.size());
  for (std::size_t p = 0; p < phi.source.size(); ++p) img.set(phi(p));
  for (std::size_t q = 0; q < phi.target.size(); ++q) {
    auto s = phi.target.supremum(img & phi.target.down_set(q));
    if (!s || *s != q) return false;
  }
  return true;
}

bool has_meet_dense_image(const MonoMap& phi) {
  Bitset img(phi.target.size());
  for (std::size_t p = 0; p < phi.source.size(); ++p) img.set(phi(p));
  for (std::size_t q = 0; q < phi.target.size(); ++q) {
    auto s = phi.target.infimum(img & phi.target.up_set(q));
    if (!s || *s != q) return false;
  }
  return true;
}

MapClassification classify_lattice_map(const MonoMap& phi) {
  MapClassification c;
  c.isotone = phi.is_isotone();
  c.residuated = is_residuated(phi);
  c.residual = is_residual(phi);
  c.lower_cut_continuous = is_lower_cut_continuous(phi);
  c.upper_cut_continuous = is_upper_cut_continuous(phi);
  c.join_preserving = is_join_preserving(phi);
  c.meet_preserving = is_meet_preserving(phi);
  c.complete_hom = c.join_preserving && c.meet_preserving;
  c.doubly_residuated = is_doubly_residuated(phi);
  c.doubly_residual = is_doubly_residual(phi);
  c.injective = phi.is_injective();
  c.surjective = phi.is_surjective();
  c.order_embedding = phi.is_order_embedding();
  c.order_isomorphism = phi.is_order_isomorphism();
  c.join_dense_image = has_join_dense_image(phi);
  c.meet_dense_image = has_meet_dense_image(phi);
  return c;
}

}  // namespace fca
