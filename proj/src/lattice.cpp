#include "fca/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fca {

std::size_t ConceptLattice::index_of_extent(const Bitset& extent) const {
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].extent.bits == extent) return i;
  throw InternalError("no concept with the requested extent");
}

Bitset ConceptLattice::gamma_image() const {
  Bitset r(concepts.size());
  for (int c : gamma) r.set(static_cast<std::size_t>(c));
  return r;
}

Bitset ConceptLattice::mu_image() const {
  Bitset r(concepts.size());
  for (int c : mu) r.set(static_cast<std::size_t>(c));
  return r;
}

ConceptLattice build_concept_lattice(const Context& ctx) {
  const std::size_t m = ctx.attribute_count();

  std::vector<Bitset> intents;
  Bitset b = ctx.intent_closure(ctx.empty_attributes()).bits;
  intents.push_back(b);
  // NextClosure: attribute 0 is lectically the most significant.
  while (true) {
    bool advanced = false;
    for (std::size_t ii = m; ii-- > 0;) {
      if (b.test(ii)) continue;
      Bitset seed = b.prefix(ii);
      seed.set(ii);
      Bitset c = ctx.intent_closure(ctx.attribute_set(seed)).bits;
      if (c.prefix(ii).is_subset_of(b)) {  // no new attribute below ii
        b = c;
        intents.push_back(b);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  std::vector<FormalConcept> concepts;
  concepts.reserve(intents.size());
  for (const auto& in : intents) {
    AttrSet intent = ctx.attribute_set(in);
    concepts.push_back(FormalConcept{ctx.down(intent), intent});
  }

  const std::size_t n = concepts.size();
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "c" + std::to_string(i);
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = concepts[i].extent.bits.is_subset_of(concepts[j].extent.bits);
  }
  FiniteLattice lattice(std::move(labels), leq);

  ConceptLattice cl{ctx, std::move(concepts), std::move(lattice), {}, {}};
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    cl.gamma.push_back(static_cast<int>(
        cl.index_of_extent(ctx.extent_closure(ctx.object_set({g})).bits)));
  for (std::size_t mm = 0; mm < ctx.attribute_count(); ++mm)
    cl.mu.push_back(static_cast<int>(
        cl.index_of_extent(ctx.attribute_col(mm))));
  return cl;
}

Context complete_context(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> inc(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      inc[x][y] = l.leq(x, y);
  return Context(l.poset().labels(), l.poset().labels(), inc);
}

Bitset join_irreducibles(const FiniteLattice& l) {
  Bitset r(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    Bitset strictly_below = l.poset().down_set(x);
    strictly_below.reset(x);
    if (l.sup(strictly_below) != x) r.set(x);
  }
  return r;
}

Bitset meet_irreducibles(const FiniteLattice& l) {
  Bitset r(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    Bitset strictly_above = l.poset().up_set(x);
    strictly_above.reset(x);
    if (l.inf(strictly_above) != x) r.set(x);
  }
  return r;
}

bool join_dense_in(const FiniteLattice& l, const Bitset& subset) {
  if (subset.size() != l.size()) throw DimensionError("subset width mismatch");
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.sup(subset & l.poset().down_set(x)) != x) return false;
  return true;
}

bool meet_dense_in(const FiniteLattice& l, const Bitset& subset) {
  if (subset.size() != l.size()) throw DimensionError("subset width mismatch");
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.inf(subset & l.poset().up_set(x)) != x) return false;
  return true;
}

Context standard_context(const FiniteLattice& l) {
  auto js = join_irreducibles(l).indices();
  auto ms = meet_irreducibles(l).indices();
  std::vector<std::string> objs, attrs;
  for (auto j : js) objs.push_back(l.label(j));
  for (auto m : ms) attrs.push_back(l.label(m));
  std::vector<std::vector<bool>> inc(js.size(), std::vector<bool>(ms.size()));
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      inc[a][b] = l.leq(js[a], ms[b]);
  return Context(std::move(objs), std::move(attrs), inc);
}

bool is_irreducibly_bigenerated(const FiniteLattice& l) {
  return join_dense_in(l, join_irreducibles(l)) &&
         meet_dense_in(l, meet_irreducibles(l));
}

DoublyBasedLattice::DoublyBasedLattice(FiniteLattice lat, Bitset jbase, Bitset mbase)
    : lattice(std::move(lat)), join_base(std::move(jbase)), meet_base(std::move(mbase)) {
  if (!join_dense_in(lattice, join_base))
    throw OrderError("designated join-base is not join-dense");
  if (!meet_dense_in(lattice, meet_base))
    throw OrderError("designated meet-base is not meet-dense");
}

DoublyBasedLattice doubly_based_of_context(const Context& ctx) {
  ConceptLattice cl = build_concept_lattice(ctx);
  return DoublyBasedLattice(cl.lattice, cl.gamma_image(), cl.mu_image());
}

Context base_context(const DoublyBasedLattice& k) {
  auto js = k.join_base.indices();
  auto ms = k.meet_base.indices();
  std::vector<std::string> objs, attrs;
  for (auto j : js) objs.push_back(k.lattice.label(j));
  for (auto m : ms) attrs.push_back(k.lattice.label(m));
  std::vector<std::vector<bool>> inc(js.size(), std::vector<bool>(ms.size()));
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      inc[a][b] = k.lattice.leq(js[a], ms[b]);
  Context out(std::move(objs), std::move(attrs), inc);
  if (!out.is_purified())
    throw InternalError("base context of a doubly based lattice must be purified");
  return out;
}

MonoMap counit(const FiniteLattice& l) {
  ConceptLattice cl = build_concept_lattice(complete_context(l));
  std::vector<int> table(cl.size(), -1);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    auto x = l.poset().maximum(cl.concepts[i].extent.bits);
    if (!x || cl.concepts[i].extent.bits != l.poset().down_set(*x) ||
        cl.concepts[i].intent.bits != l.poset().up_set(*x))
      throw InternalError("concept of a complete context is not a principal cut pair");
    table[i] = static_cast<int>(*x);
  }
  MonoMap eps(cl.lattice.poset(), l.poset(), std::move(table));
  if (!eps.is_order_isomorphism())
    throw InternalError("counit is not an order isomorphism");
  return eps;
}

MonoMap iota(const DoublyBasedLattice& k) {
  Context bc = base_context(k);
  ConceptLattice cl = build_concept_lattice(bc);
  auto js = k.join_base.indices();
  auto ms = k.meet_base.indices();

  std::vector<int> table(k.lattice.size(), -1);
  for (std::size_t x = 0; x < k.lattice.size(); ++x) {
    Bitset extent(js.size());
    for (std::size_t a = 0; a < js.size(); ++a)
      if (k.lattice.leq(js[a], x)) extent.set(a);
    Bitset intent(ms.size());
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (k.lattice.leq(x, ms[b])) intent.set(b);
    std::size_t idx = cl.index_of_extent(extent);
    if (cl.concepts[idx].intent.bits != intent)
      throw InternalError("base restriction of a principal cut is not a concept");
    table[x] = static_cast<int>(idx);
  }
  MonoMap io(k.lattice.poset(), cl.lattice.poset(), std::move(table));
  if (!io.is_order_isomorphism())
    throw InternalError("iota is not an order isomorphism");
  for (std::size_t a = 0; a < js.size(); ++a)
    if (io(js[a]) != static_cast<std::size_t>(cl.gamma[a]))
      throw InternalError("iota does not carry the join-base onto the object concepts");
  for (std::size_t b = 0; b < ms.size(); ++b)
    if (io(ms[b]) != static_cast<std::size_t>(cl.mu[b]))
      throw InternalError("iota does not carry the meet-base onto the attribute concepts");
  return io;
}

Context purify(const Context& ctx) {
  Context out = base_context(doubly_based_of_context(ctx));
  if (!out.is_purified()) throw InternalError("purification did not purify");
  if (!lattice_isomorphic(build_concept_lattice(out).lattice,
                          build_concept_lattice(ctx).lattice))
    throw InternalError("purification changed the concept lattice");
  return out;
}

Context reduce(const Context& ctx) {
  ConceptLattice cl = build_concept_lattice(ctx);
  Context out = standard_context(cl.lattice);
  if (!is_reduced(out)) throw InternalError("reduction did not reduce");
  if (!lattice_isomorphic(build_concept_lattice(out).lattice, cl.lattice))
    throw InternalError("reduction changed the concept lattice");
  return out;
}

bool is_reduced(const Context& ctx) {
  if (!ctx.is_purified()) return false;
  ConceptLattice cl = build_concept_lattice(ctx);
  Bitset ji = join_irreducibles(cl.lattice);
  Bitset mi = meet_irreducibles(cl.lattice);
  for (int c : cl.gamma)
    if (!ji.test(static_cast<std::size_t>(c))) return false;
  for (int c : cl.mu)
    if (!mi.test(static_cast<std::size_t>(c))) return false;
  return true;
}

ConceptLattice dm_completion(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> inc(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      inc[x][y] = p.leq(x, y);
  return build_concept_lattice(Context(p.labels(), p.labels(), inc));
}

namespace {

// With a fixed object bijection, attributes must be matched column-for-column.
bool match_attributes(const Context& a, const Context& b,
                      const std::vector<int>& objmap, std::vector<int>& attrmap) {
  const std::size_t ma = a.attribute_count();
  std::map<Bitset, std::vector<std::size_t>> pool;
  for (std::size_t n = 0; n < b.attribute_count(); ++n)
    pool[b.attribute_col(n)].push_back(n);
  attrmap.assign(ma, -1);
  for (std::size_t m = 0; m < ma; ++m) {
    Bitset mapped(b.object_count());
    for (std::size_t g = 0; g < a.object_count(); ++g)
      if (a.attribute_col(m).test(g)) mapped.set(static_cast<std::size_t>(objmap[g]));
    auto it = pool.find(mapped);
    if (it == pool.end() || it->second.empty()) return false;
    attrmap[m] = static_cast<int>(it->second.back());
    it->second.pop_back();
  }
  return true;
}

bool extend_objects(const Context& a, const Context& b, std::vector<int>& objmap,
                    std::vector<bool>& used, std::size_t g,
                    std::vector<int>& attrmap) {
  if (g == a.object_count()) return match_attributes(a, b, objmap, attrmap);
  for (std::size_t h = 0; h < b.object_count(); ++h) {
    if (used[h] || a.object_row(g).count() != b.object_row(h).count()) continue;
    objmap[g] = static_cast<int>(h);
    used[h] = true;
    if (extend_objects(a, b, objmap, used, g + 1, attrmap)) return true;
    used[h] = false;
  }
  return false;
}

}  // namespace

std::optional<ContextIsomorphism> find_context_isomorphism(const Context& a,
                                                           const Context& b) {
  if (a.object_count() != b.object_count() ||
      a.attribute_count() != b.attribute_count())
    return std::nullopt;
  std::vector<int> objmap(a.object_count(), -1), attrmap;
  std::vector<bool> used(b.object_count(), false);
  if (extend_objects(a, b, objmap, used, 0, attrmap))
    return ContextIsomorphism{std::move(objmap), std::move(attrmap)};
  return std::nullopt;
}

Context make_subcontext(const Context& ctx, const Bitset& objs, const Bitset& attrs) {
  if (objs.size() != ctx.object_count() || attrs.size() != ctx.attribute_count())
    throw DimensionError("subcontext selector width mismatch");
  auto gs = objs.indices();
  auto ms = attrs.indices();
  std::vector<std::string> on, an;
  for (auto g : gs) on.push_back(ctx.objects()[g]);
  for (auto m : ms) an.push_back(ctx.attributes()[m]);
  std::vector<std::vector<bool>> inc(gs.size(), std::vector<bool>(ms.size()));
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      inc[i][j] = ctx.incident(gs[i], ms[j]);
  return Context(std::move(on), std::move(an), inc);
}

}  // namespace fca
