#include "fca/morphisms.hpp"

#include <algorithm>
#include <set>

namespace fca {

namespace {

// Raw-bitset images and preimages; widths are |G|,|M| (source) and |H|,|N|
// (target) throughout, with K = p.source and L = p.target.
Bitset img(const std::vector<int>& map, const Bitset& s, std::size_t tgt_n) {
  Bitset r(tgt_n);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) r.set(static_cast<std::size_t>(map[i]));
  return r;
}

Bitset pre(const std::vector<int>& map, const Bitset& s, std::size_t src_n) {
  Bitset r(src_n);
  for (std::size_t i = 0; i < src_n; ++i)
    if (s.test(static_cast<std::size_t>(map[i]))) r.set(i);
  return r;
}

struct Ops {
  const Context& k;
  const Context& l;
  const std::vector<int>& al;
  const std::vector<int>& be;

  explicit Ops(const MappingPair& p)
      : k(p.source), l(p.target), al(p.alpha), be(p.beta) {}

  std::size_t g() const { return k.object_count(); }
  std::size_t m() const { return k.attribute_count(); }
  std::size_t h() const { return l.object_count(); }
  std::size_t n() const { return l.attribute_count(); }

  Bitset upK(const Bitset& a) const { return k.up(k.object_set(a)).bits; }
  Bitset downK(const Bitset& b) const { return k.down(k.attribute_set(b)).bits; }
  Bitset upL(const Bitset& a) const { return l.up(l.object_set(a)).bits; }
  Bitset downL(const Bitset& b) const { return l.down(l.attribute_set(b)).bits; }
  Bitset extK(const Bitset& a) const { return downK(upK(a)); }
  Bitset intK(const Bitset& b) const { return upK(downK(b)); }
  Bitset extL(const Bitset& a) const { return downL(upL(a)); }
  Bitset intL(const Bitset& b) const { return upL(downL(b)); }

  Bitset aimg(const Bitset& a) const { return img(al, a, h()); }
  Bitset apre(const Bitset& c) const { return pre(al, c, g()); }
  Bitset bimg(const Bitset& b) const { return img(be, b, n()); }
  Bitset bpre(const Bitset& d) const { return pre(be, d, m()); }

  bool elementwise_preserving() const {
    for (std::size_t gg = 0; gg < g(); ++gg)
      for (std::size_t mm = 0; mm < m(); ++mm)
        if (k.incident(gg, mm) &&
            !l.incident(static_cast<std::size_t>(al[gg]),
                        static_cast<std::size_t>(be[mm])))
          return false;
    return true;
  }

  bool elementwise_reflecting() const {
    for (std::size_t gg = 0; gg < g(); ++gg)
      for (std::size_t mm = 0; mm < m(); ++mm)
        if (l.incident(static_cast<std::size_t>(al[gg]),
                       static_cast<std::size_t>(be[mm])) &&
            !k.incident(gg, mm))
          return false;
    return true;
  }
};

bool forall_subsets(std::size_t n, const std::function<bool(const Bitset&)>& pred) {
  bool ok = true;
  for_each_subset(n, [&](const Bitset& s) {
    if (ok && !pred(s)) ok = false;
  });
  return ok;
}

}  // namespace

MappingPair::MappingPair(Context src, Context tgt, std::vector<int> a,
                         std::vector<int> b)
    : source(std::move(src)), target(std::move(tgt)),
      alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.size() != source.object_count())
    throw DimensionError("alpha not total on the source objects");
  if (beta.size() != source.attribute_count())
    throw DimensionError("beta not total on the source attributes");
  for (int v : alpha)
    if (v < 0 || static_cast<std::size_t>(v) >= target.object_count())
      throw DimensionError("alpha value out of range");
  for (int v : beta)
    if (v < 0 || static_cast<std::size_t>(v) >= target.attribute_count())
      throw DimensionError("beta value out of range");
}

MappingPair MappingPair::identity(const Context& k) {
  std::vector<int> a(k.object_count()), b(k.attribute_count());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<int>(i);
  return MappingPair(k, k, std::move(a), std::move(b));
}

MappingPair MappingPair::compose(const MappingPair& q, const MappingPair& p) {
  if (!(p.target == q.source))
    throw DimensionError("pair composition domain mismatch");
  std::vector<int> a(p.alpha.size()), b(p.beta.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = q.alpha[static_cast<std::size_t>(p.alpha[i])];
  for (std::size_t i = 0; i < b.size(); ++i)
    b[i] = q.beta[static_cast<std::size_t>(p.beta[i])];
  return MappingPair(p.source, q.target, std::move(a), std::move(b));
}

ObjSet MappingPair::alpha_image(const ObjSet& s) const {
  if (s.owner != source.id()) throw OwnershipError("object set not from the source");
  return target.object_set(img(alpha, s.bits, target.object_count()));
}

ObjSet MappingPair::alpha_preimage(const ObjSet& s) const {
  if (s.owner != target.id()) throw OwnershipError("object set not from the target");
  return source.object_set(pre(alpha, s.bits, source.object_count()));
}

AttrSet MappingPair::beta_image(const AttrSet& s) const {
  if (s.owner != source.id()) throw OwnershipError("attribute set not from the source");
  return target.attribute_set(img(beta, s.bits, target.attribute_count()));
}

AttrSet MappingPair::beta_preimage(const AttrSet& s) const {
  if (s.owner != target.id()) throw OwnershipError("attribute set not from the target");
  return source.attribute_set(pre(beta, s.bits, source.attribute_count()));
}

LemmaForms extent_continuous_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"extent continuity of alpha", {}};

  bool a = true;
  for (const auto& c : o.l.extents())
    if (o.extK(o.apre(c)) != o.apre(c)) { a = false; break; }
  lf.forms.emplace_back("preimages of extents are extents", a);

  bool b = true;
  for (std::size_t nn = 0; nn < o.n(); ++nn) {
    Bitset preim = o.apre(o.l.attribute_col(nn));
    if (o.extK(preim) != preim) { b = false; break; }
  }
  lf.forms.emplace_back("preimages of attribute extents are extents", b);

  // For each witnessing failure α(g) not J-incident to n, a separating m
  // must exist (the existential is scoped per failure).
  bool c = true;
  for (std::size_t gg = 0; gg < o.g() && c; ++gg)
    for (std::size_t nn = 0; nn < o.n() && c; ++nn) {
      if (o.l.incident(static_cast<std::size_t>(p.alpha[gg]), nn)) continue;
      Bitset preim = o.apre(o.l.attribute_col(nn));
      bool found = false;
      for (std::size_t mm = 0; mm < o.m() && !found; ++mm)
        if (!o.k.incident(gg, mm) && preim.is_subset_of(o.k.attribute_col(mm)))
          found = true;
      if (!found) c = false;
    }
  lf.forms.emplace_back("first-order separation", c);

  bool d = forall_subsets(o.g(), [&](const Bitset& A) {
    return o.upL(o.aimg(o.extK(A))) == o.upL(o.aimg(A));
  });
  lf.forms.emplace_back("image of closure has the intent of the image", d);

  bool e = forall_subsets(o.g(), [&](const Bitset& A) {
    return o.aimg(o.extK(A)).is_subset_of(o.extL(o.aimg(A)));
  });
  lf.forms.emplace_back("image of closure inside closure of image", e);

  // A→B meaning B ⊆ A↑↓.
  bool dp = true;
  for_each_subset(o.g(), [&](const Bitset& A) {
    if (!dp) return;
    Bitset clA = o.extK(A), clImgA = o.extL(o.aimg(A));
    for_each_subset(o.g(), [&](const Bitset& B) {
      if (!dp) return;
      if (B.is_subset_of(clA) && !o.aimg(B).is_subset_of(clImgA)) dp = false;
    });
  });
  lf.forms.emplace_back("implications transfer forward", dp);
  return lf;
}

LemmaForms intent_continuous_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"intent continuity of beta", {}};

  bool a = true;
  for (const auto& d : o.l.intents())
    if (o.intK(o.bpre(d)) != o.bpre(d)) { a = false; break; }
  lf.forms.emplace_back("preimages of intents are intents", a);

  bool b = true;
  for (std::size_t hh = 0; hh < o.h(); ++hh) {
    Bitset preim = o.bpre(o.l.object_row(hh));
    if (o.intK(preim) != preim) { b = false; break; }
  }
  lf.forms.emplace_back("preimages of object intents are intents", b);

  bool c = true;
  for (std::size_t hh = 0; hh < o.h() && c; ++hh)
    for (std::size_t mm = 0; mm < o.m() && c; ++mm) {
      if (o.l.incident(hh, static_cast<std::size_t>(p.beta[mm]))) continue;
      Bitset preim = o.bpre(o.l.object_row(hh));
      bool found = false;
      for (std::size_t gg = 0; gg < o.g() && !found; ++gg)
        if (!o.k.incident(gg, mm) && preim.is_subset_of(o.k.object_row(gg)))
          found = true;
      if (!found) c = false;
    }
  lf.forms.emplace_back("first-order separation", c);

  bool d = forall_subsets(o.m(), [&](const Bitset& B) {
    return o.downL(o.bimg(o.intK(B))) == o.downL(o.bimg(B));
  });
  lf.forms.emplace_back("image of closure has the extent of the image", d);

  bool e = forall_subsets(o.m(), [&](const Bitset& B) {
    return o.bimg(o.intK(B)).is_subset_of(o.intL(o.bimg(B)));
  });
  lf.forms.emplace_back("image of closure inside closure of image", e);

  bool dp = true;
  for_each_subset(o.m(), [&](const Bitset& B) {
    if (!dp) return;
    Bitset clB = o.intK(B), clImgB = o.intL(o.bimg(B));
    for_each_subset(o.m(), [&](const Bitset& D) {
      if (!dp) return;
      if (D.is_subset_of(clB) && !o.bimg(D).is_subset_of(clImgB)) dp = false;
    });
  });
  lf.forms.emplace_back("implications transfer forward", dp);
  return lf;
}

LemmaForms extent_dense_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"extent density of alpha", {}};

  // Every closure in the target is realized by some image closure. Closures
  // of images of preimages suffice as candidates (see the closure argument
  // in the equivalence proof), so no search over subsets of G is needed.
  bool a = true;
  for (const auto& c : o.l.extents())
    if (o.extL(o.aimg(o.apre(c))) != c) { a = false; break; }
  lf.forms.emplace_back("every extent is an image closure", a);

  bool b = true;
  for (std::size_t hh = 0; hh < o.h(); ++hh) {
    Bitset target_intent = o.l.object_row(hh);
    if (o.upL(o.aimg(o.apre(o.extL(Bitset::of(o.h(), {hh}))))) != target_intent) {
      b = false;
      break;
    }
  }
  lf.forms.emplace_back("every object intent is an image intent", b);

  bool c = true;
  for (std::size_t hh = 0; hh < o.h() && c; ++hh)
    for (std::size_t nn = 0; nn < o.n() && c; ++nn) {
      if (o.l.incident(hh, nn)) continue;
      bool found = false;
      for (std::size_t gg = 0; gg < o.g() && !found; ++gg) {
        std::size_t ag = static_cast<std::size_t>(p.alpha[gg]);
        if (!o.l.incident(ag, nn) &&
            o.l.object_row(hh).is_subset_of(o.l.object_row(ag)))
          found = true;
      }
      if (!found) c = false;
    }
  lf.forms.emplace_back("first-order reachability", c);

  // Object-concept extents of the image are join-dense among the extents.
  bool d = true;
  std::vector<Bitset> gens;
  for (std::size_t gg = 0; gg < o.g(); ++gg)
    gens.push_back(o.extL(Bitset::of(o.h(), {static_cast<std::size_t>(p.alpha[gg])})));
  for (const auto& c2 : o.l.extents()) {
    Bitset un(o.h());
    for (const auto& e : gens)
      if (e.is_subset_of(c2)) un |= e;
    if (o.extL(un) != c2) { d = false; break; }
  }
  lf.forms.emplace_back("image concepts join-dense among extents", d);
  return lf;
}

LemmaForms intent_dense_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"intent density of beta", {}};

  bool a = true;
  for (const auto& d : o.l.intents())
    if (o.intL(o.bimg(o.bpre(d))) != d) { a = false; break; }
  lf.forms.emplace_back("every intent is an image closure", a);

  bool b = true;
  for (std::size_t nn = 0; nn < o.n(); ++nn) {
    Bitset target_extent = o.l.attribute_col(nn);
    if (o.downL(o.bimg(o.bpre(o.intL(Bitset::of(o.n(), {nn}))))) != target_extent) {
      b = false;
      break;
    }
  }
  lf.forms.emplace_back("every attribute extent is an image extent", b);

  bool c = true;
  for (std::size_t hh = 0; hh < o.h() && c; ++hh)
    for (std::size_t nn = 0; nn < o.n() && c; ++nn) {
      if (o.l.incident(hh, nn)) continue;
      bool found = false;
      for (std::size_t mm = 0; mm < o.m() && !found; ++mm) {
        std::size_t bm = static_cast<std::size_t>(p.beta[mm]);
        if (!o.l.incident(hh, bm) &&
            o.l.attribute_col(nn).is_subset_of(o.l.attribute_col(bm)))
          found = true;
      }
      if (!found) c = false;
    }
  lf.forms.emplace_back("first-order reachability", c);

  bool d = true;
  std::vector<Bitset> gens;
  for (std::size_t mm = 0; mm < o.m(); ++mm)
    gens.push_back(o.intL(Bitset::of(o.n(), {static_cast<std::size_t>(p.beta[mm])})));
  for (const auto& d2 : o.l.intents()) {
    Bitset un(o.n());
    for (const auto& e : gens)
      if (e.is_subset_of(d2)) un |= e;
    if (o.intL(un) != d2) { d = false; break; }
  }
  lf.forms.emplace_back("image concepts meet-dense among intents", d);
  return lf;
}

LemmaForms extent_full_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"extent fullness of alpha", {}};

  bool a = forall_subsets(o.g(), [&](const Bitset& A) {
    Bitset cl = o.extK(A), clImg = o.extL(o.aimg(A));
    for (std::size_t gg = 0; gg < o.g(); ++gg)
      if (clImg.test(static_cast<std::size_t>(p.alpha[gg])) && !cl.test(gg))
        return false;
    return true;
  });
  lf.forms.emplace_back("image membership reflects closure membership", a);

  bool b = true;
  for (std::size_t gg = 0; gg < o.g() && b; ++gg)
    for (std::size_t mm = 0; mm < o.m() && b; ++mm) {
      if (o.k.incident(gg, mm)) continue;
      Bitset imgDown = o.aimg(o.k.attribute_col(mm));
      bool found = false;
      for (std::size_t nn = 0; nn < o.n() && !found; ++nn)
        if (!o.l.incident(static_cast<std::size_t>(p.alpha[gg]), nn) &&
            imgDown.is_subset_of(o.l.attribute_col(nn)))
          found = true;
      if (!found) b = false;
    }
  lf.forms.emplace_back("first-order separation", b);

  bool c = true;
  for_each_subset(o.g(), [&](const Bitset& A) {
    if (!c) return;
    Bitset clA = o.extK(A), clImgA = o.extL(o.aimg(A));
    for_each_subset(o.g(), [&](const Bitset& B) {
      if (!c) return;
      if (o.aimg(B).is_subset_of(clImgA) && !B.is_subset_of(clA)) c = false;
    });
  });
  lf.forms.emplace_back("implications transfer backward", c);

  bool d = true;
  std::set<Bitset> preimages;
  for (const auto& c2 : o.l.extents()) preimages.insert(o.apre(c2));
  for (const auto& e : o.k.extents())
    if (!preimages.count(e)) { d = false; break; }
  lf.forms.emplace_back("every extent is a preimage of an extent", d);
  return lf;
}

LemmaForms intent_full_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"intent fullness of beta", {}};

  bool a = forall_subsets(o.m(), [&](const Bitset& B) {
    Bitset cl = o.intK(B), clImg = o.intL(o.bimg(B));
    for (std::size_t mm = 0; mm < o.m(); ++mm)
      if (clImg.test(static_cast<std::size_t>(p.beta[mm])) && !cl.test(mm))
        return false;
    return true;
  });
  lf.forms.emplace_back("image membership reflects closure membership", a);

  bool b = true;
  for (std::size_t gg = 0; gg < o.g() && b; ++gg)
    for (std::size_t mm = 0; mm < o.m() && b; ++mm) {
      if (o.k.incident(gg, mm)) continue;
      Bitset imgUp = o.bimg(o.k.object_row(gg));
      bool found = false;
      for (std::size_t hh = 0; hh < o.h() && !found; ++hh)
        if (!o.l.incident(hh, static_cast<std::size_t>(p.beta[mm])) &&
            imgUp.is_subset_of(o.l.object_row(hh)))
          found = true;
      if (!found) b = false;
    }
  lf.forms.emplace_back("first-order separation", b);

  bool c = true;
  for_each_subset(o.m(), [&](const Bitset& B) {
    if (!c) return;
    Bitset clB = o.intK(B), clImgB = o.intL(o.bimg(B));
    for_each_subset(o.m(), [&](const Bitset& D) {
      if (!c) return;
      if (o.bimg(D).is_subset_of(clImgB) && !D.is_subset_of(clB)) c = false;
    });
  });
  lf.forms.emplace_back("implications transfer backward", c);

  bool d = true;
  std::set<Bitset> preimages;
  for (const auto& d2 : o.l.intents()) preimages.insert(o.bpre(d2));
  for (const auto& i : o.k.intents())
    if (!preimages.count(i)) { d = false; break; }
  lf.forms.emplace_back("every intent is a preimage of an intent", d);
  return lf;
}

LemmaForms incidence_preserving_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"incidence preservation", {}};
  lf.forms.emplace_back("elementwise implication", o.elementwise_preserving());

  bool a = forall_subsets(o.g(), [&](const Bitset& A) {
    return o.extL(o.aimg(A)).is_subset_of(o.downL(o.bimg(o.upK(A))));
  });
  lf.forms.emplace_back("object-side inclusion", a);

  bool b = forall_subsets(o.m(), [&](const Bitset& B) {
    return o.intL(o.bimg(B)).is_subset_of(o.upL(o.aimg(o.downK(B))));
  });
  lf.forms.emplace_back("attribute-side inclusion", b);
  return lf;
}

LemmaForms incidence_reflecting_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"incidence reflection", {}};
  lf.forms.emplace_back("elementwise implication", o.elementwise_reflecting());

  bool a = forall_subsets(o.h(), [&](const Bitset& C) {
    return o.apre(o.extL(C)).is_subset_of(o.downK(o.bpre(o.upL(C))));
  });
  lf.forms.emplace_back("object-side preimage inclusion", a);

  bool b = forall_subsets(o.n(), [&](const Bitset& D) {
    return o.bpre(o.intL(D)).is_subset_of(o.upK(o.apre(o.downL(D))));
  });
  lf.forms.emplace_back("attribute-side preimage inclusion", b);
  return lf;
}

bool is_concept_preserving(const MappingPair& p) {
  Ops o(p);
  for (const auto& e : o.k.extents()) {
    Bitset b = o.upK(e);
    Bitset ext = o.downL(o.bimg(b));
    Bitset in = o.upL(o.aimg(e));
    if (o.upL(ext) != in || o.downL(in) != ext) return false;
  }
  return true;
}

LemmaForms conceptual_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"conceptual pair", {}};

  bool sep = extent_continuous_forms(p).value() && intent_continuous_forms(p).value();
  lf.forms.emplace_back("separately continuous and concept preserving",
                        sep && is_concept_preserving(p));

  bool eq =
      forall_subsets(o.g(), [&](const Bitset& A) {
        return o.extL(o.aimg(A)) == o.downL(o.bimg(o.upK(A)));
      }) &&
      forall_subsets(o.m(), [&](const Bitset& B) {
        return o.intL(o.bimg(B)) == o.upL(o.aimg(o.downK(B)));
      });
  lf.forms.emplace_back("the two closure equations", eq);

  bool incl = o.elementwise_preserving();
  for (std::size_t nn = 0; nn < o.n() && incl; ++nn) {
    Bitset lhs = o.downL(o.bimg(o.upK(o.apre(o.l.attribute_col(nn)))));
    if (!lhs.is_subset_of(o.l.attribute_col(nn))) incl = false;
  }
  for (std::size_t hh = 0; hh < o.h() && incl; ++hh) {
    Bitset lhs = o.upL(o.aimg(o.downK(o.bpre(o.l.object_row(hh)))));
    if (!lhs.is_subset_of(o.l.object_row(hh))) incl = false;
  }
  lf.forms.emplace_back("preservation plus generator inclusions", incl);

  bool fo = o.elementwise_preserving();
  for (std::size_t hh = 0; hh < o.h() && fo; ++hh)
    for (std::size_t nn = 0; nn < o.n() && fo; ++nn) {
      if (o.l.incident(hh, nn)) continue;
      Bitset preN = o.apre(o.l.attribute_col(nn));
      Bitset preH = o.bpre(o.l.object_row(hh));
      bool found = false;
      for (std::size_t gg = 0; gg < o.g() && !found; ++gg)
        for (std::size_t mm = 0; mm < o.m() && !found; ++mm)
          if (!o.k.incident(gg, mm) &&
              preN.is_subset_of(o.k.attribute_col(mm)) &&
              preH.is_subset_of(o.k.object_row(gg)))
            found = true;
      if (!found) fo = false;
    }
  lf.forms.emplace_back("preservation plus first-order condition", fo);
  return lf;
}

LemmaForms concept_continuous_forms(const MappingPair& p) {
  Ops o(p);
  LemmaForms lf{"concept continuous pair", {}};

  bool def = true;
  for (const auto& c : o.l.extents()) {
    Bitset d = o.upL(c);
    Bitset preC = o.apre(c), preD = o.bpre(d);
    if (o.upK(preC) != preD || o.downK(preD) != preC) { def = false; break; }
  }
  lf.forms.emplace_back("preimages of concepts are concepts", def);

  bool eq =
      forall_subsets(o.h(), [&](const Bitset& C) {
        return o.apre(o.extL(C)) == o.downK(o.bpre(o.upL(C)));
      }) &&
      forall_subsets(o.n(), [&](const Bitset& D) {
        return o.bpre(o.intL(D)) == o.upK(o.apre(o.downL(D)));
      });
  lf.forms.emplace_back("the two preimage equations", eq);

  bool gen = true;
  for (std::size_t nn = 0; nn < o.n() && gen; ++nn)
    if (o.apre(o.l.attribute_col(nn)) !=
        o.downK(o.bpre(o.intL(Bitset::of(o.n(), {nn})))))
      gen = false;
  for (std::size_t hh = 0; hh < o.h() && gen; ++hh)
    if (o.bpre(o.l.object_row(hh)) !=
        o.upK(o.apre(o.extL(Bitset::of(o.h(), {hh})))))
      gen = false;
  lf.forms.emplace_back("the per-generator equations", gen);

  bool fo = o.elementwise_reflecting();
  for (std::size_t gg = 0; gg < o.g() && fo; ++gg)
    for (std::size_t nn = 0; nn < o.n() && fo; ++nn) {
      if (o.l.incident(static_cast<std::size_t>(p.alpha[gg]), nn)) continue;
      bool found = false;
      for (std::size_t mm = 0; mm < o.m() && !found; ++mm)
        if (!o.k.incident(gg, mm) &&
            o.l.attribute_col(nn).is_subset_of(
                o.l.attribute_col(static_cast<std::size_t>(p.beta[mm]))))
          found = true;
      if (!found) fo = false;
    }
  for (std::size_t hh = 0; hh < o.h() && fo; ++hh)
    for (std::size_t mm = 0; mm < o.m() && fo; ++mm) {
      if (o.l.incident(hh, static_cast<std::size_t>(p.beta[mm]))) continue;
      bool found = false;
      for (std::size_t gg = 0; gg < o.g() && !found; ++gg)
        if (!o.k.incident(gg, mm) &&
            o.l.object_row(hh).is_subset_of(
                o.l.object_row(static_cast<std::size_t>(p.alpha[gg]))))
          found = true;
      if (!found) fo = false;
    }
  lf.forms.emplace_back("reflection plus first-order conditions", fo);
  return lf;
}

bool is_extent_continuous(const MappingPair& p) { return extent_continuous_forms(p).value(); }
bool is_intent_continuous(const MappingPair& p) { return intent_continuous_forms(p).value(); }
bool is_separately_continuous(const MappingPair& p) {
  return is_extent_continuous(p) && is_intent_continuous(p);
}
bool is_extent_dense(const MappingPair& p) { return extent_dense_forms(p).value(); }
bool is_intent_dense(const MappingPair& p) { return intent_dense_forms(p).value(); }
bool is_extent_full(const MappingPair& p) { return extent_full_forms(p).value(); }
bool is_intent_full(const MappingPair& p) { return intent_full_forms(p).value(); }
bool is_incidence_preserving(const MappingPair& p) {
  return incidence_preserving_forms(p).value();
}
bool is_incidence_reflecting(const MappingPair& p) {
  return incidence_reflecting_forms(p).value();
}
bool is_context_embedding(const MappingPair& p) {
  return is_incidence_preserving(p) && is_incidence_reflecting(p);
}
bool is_conceptual(const MappingPair& p) { return conceptual_forms(p).value(); }
bool is_concept_continuous(const MappingPair& p) {
  return concept_continuous_forms(p).value();
}

bool is_dense_embedding(const MappingPair& p) {
  bool def = is_context_embedding(p) && is_extent_dense(p) && is_intent_dense(p);
  bool thm = is_conceptual(p) && is_concept_continuous(p);
  if (def != thm)
    throw InternalError("dense-embedding theorem violated by this pair");
  return def;
}

bool is_context_isomorphism(const MappingPair& p) {
  auto bijective = [](const std::vector<int>& t, std::size_t n) {
    std::set<int> seen(t.begin(), t.end());
    return t.size() == n && seen.size() == n;
  };
  return is_context_embedding(p) &&
         bijective(p.alpha, p.target.object_count()) &&
         bijective(p.beta, p.target.attribute_count());
}

std::pair<MonoMap, MonoMap> lift_forward(const MappingPair& p,
                                         const ConceptLattice& bk,
                                         const ConceptLattice& bl) {
  Ops o(p);
  std::vector<int> at(bk.size()), bt(bk.size());
  for (std::size_t i = 0; i < bk.size(); ++i) {
    at[i] = static_cast<int>(
        bl.index_of_extent(o.extL(o.aimg(bk.concepts[i].extent.bits))));
    bt[i] = static_cast<int>(
        bl.index_of_extent(o.downL(o.bimg(bk.concepts[i].intent.bits))));
  }
  return {MonoMap(bk.lattice.poset(), bl.lattice.poset(), std::move(at)),
          MonoMap(bk.lattice.poset(), bl.lattice.poset(), std::move(bt))};
}

std::pair<MonoMap, MonoMap> lift_forward(const MappingPair& p) {
  return lift_forward(p, build_concept_lattice(p.source),
                      build_concept_lattice(p.target));
}

std::pair<MonoMap, MonoMap> lift_backward(const MappingPair& p,
                                          const ConceptLattice& bk,
                                          const ConceptLattice& bl) {
  if (!is_separately_continuous(p))
    throw ClassError("backward lift requires a separately continuous pair");
  Ops o(p);
  std::vector<int> at(bl.size()), bt(bl.size());
  for (std::size_t i = 0; i < bl.size(); ++i) {
    at[i] = static_cast<int>(
        bk.index_of_extent(o.apre(bl.concepts[i].extent.bits)));
    bt[i] = static_cast<int>(
        bk.index_of_extent(o.downK(o.bpre(bl.concepts[i].intent.bits))));
  }
  MonoMap aback(bl.lattice.poset(), bk.lattice.poset(), std::move(at));
  MonoMap bback(bl.lattice.poset(), bk.lattice.poset(), std::move(bt));
  auto [afwd, bfwd] = lift_forward(p, bk, bl);
  auto ua = upper_adjoint(afwd);
  auto lb = lower_adjoint(bfwd);
  if (!ua || !(*ua == aback) || !lb || !(*lb == bback))
    throw InternalError("backward lifts are not the adjoints of the forward lifts");
  return {std::move(aback), std::move(bback)};
}

std::pair<MonoMap, MonoMap> lift_backward(const MappingPair& p) {
  return lift_backward(p, build_concept_lattice(p.source),
                       build_concept_lattice(p.target));
}

MappingPair unit(const Context& k) {
  ConceptLattice cl = build_concept_lattice(k);
  Context cbk = complete_context(cl.lattice);
  MappingPair eta(k, cbk, cl.gamma, cl.mu);
  if (!is_dense_embedding(eta))
    throw InternalError("unit pair is not a dense embedding");
  return eta;
}

std::pair<MonoMap, MonoMap> factorize_through_unit(const MappingPair& p,
                                                   const FiniteLattice& l) {
  if (!(p.target == complete_context(l)))
    throw DimensionError("target is not the complete context of the given lattice");
  if (!is_separately_continuous(p))
    throw ClassError("factorization requires a separately continuous pair");
  ConceptLattice bk = build_concept_lattice(p.source);
  std::vector<int> at(bk.size()), bt(bk.size());
  for (std::size_t i = 0; i < bk.size(); ++i) {
    Bitset ia(l.size()), ib(l.size());
    for (std::size_t gg = 0; gg < p.source.object_count(); ++gg)
      if (bk.concepts[i].extent.bits.test(gg)) ia.set(p.a(gg));
    for (std::size_t mm = 0; mm < p.source.attribute_count(); ++mm)
      if (bk.concepts[i].intent.bits.test(mm)) ib.set(p.b(mm));
    at[i] = static_cast<int>(l.sup(ia));
    bt[i] = static_cast<int>(l.inf(ib));
  }
  MonoMap av(bk.lattice.poset(), l.poset(), std::move(at));
  MonoMap bw(bk.lattice.poset(), l.poset(), std::move(bt));
  if (!is_join_preserving(av) || !is_meet_preserving(bw))
    throw InternalError("factorization maps lost join/meet preservation");
  for (std::size_t gg = 0; gg < p.source.object_count(); ++gg)
    if (av(static_cast<std::size_t>(bk.gamma[gg])) != p.a(gg))
      throw InternalError("object factorization identity fails");
  for (std::size_t mm = 0; mm < p.source.attribute_count(); ++mm)
    if (bw(static_cast<std::size_t>(bk.mu[mm])) != p.b(mm))
      throw InternalError("attribute factorization identity fails");
  return {std::move(av), std::move(bw)};
}

Poset object_specialization_poset(const Context& ctx) {
  if (!ctx.is_purified())
    throw PurityError("specialization order requires a purified context");
  std::size_t n = ctx.object_count();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      leq[j][k] = ctx.obj_specialization_leq(j, k);
  return Poset(ctx.objects(), leq);
}

Poset attribute_specialization_poset(const Context& ctx) {
  if (!ctx.is_purified())
    throw PurityError("specialization order requires a purified context");
  std::size_t n = ctx.attribute_count();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      leq[j][k] = ctx.attr_specialization_leq(j, k);
  return Poset(ctx.attributes(), leq);
}

namespace {

struct SpecMaps {
  Poset pg, pm, ph, pn;
  MonoMap amap, bmap;

  explicit SpecMaps(const MappingPair& p)
      : pg(object_specialization_poset(p.source)),
        pm(attribute_specialization_poset(p.source)),
        ph(object_specialization_poset(p.target)),
        pn(attribute_specialization_poset(p.target)),
        amap(pg, ph, p.alpha),
        bmap(pm, pn, p.beta) {}
};

/// The pointwise companion determined by α•(h)↑ = β⁻[h↑] and β•(n)↓ = α⁻[n↓];
/// absent when some required row/column is not realized in the source.
std::optional<MappingPair> pointwise_companion(const MappingPair& p) {
  Ops o(p);
  std::vector<int> at(o.h(), -1), bt(o.n(), -1);
  for (std::size_t hh = 0; hh < o.h(); ++hh) {
    Bitset want = o.bpre(o.l.object_row(hh));
    bool found = false;
    for (std::size_t gg = 0; gg < o.g(); ++gg)
      if (o.k.object_row(gg) == want) { at[hh] = static_cast<int>(gg); found = true; break; }
    if (!found) return std::nullopt;
  }
  for (std::size_t nn = 0; nn < o.n(); ++nn) {
    Bitset want = o.apre(o.l.attribute_col(nn));
    bool found = false;
    for (std::size_t mm = 0; mm < o.m(); ++mm)
      if (o.k.attribute_col(mm) == want) { bt[nn] = static_cast<int>(mm); found = true; break; }
    if (!found) return std::nullopt;
  }
  return MappingPair(p.target, p.source, std::move(at), std::move(bt));
}

bool residual_pair_definition(const MappingPair& p, const SpecMaps& s) {
  return conceptual_forms(p).value() && is_residual(s.amap) && is_residuated(s.bmap);
}

bool residuated_pair_definition(const MappingPair& p, const SpecMaps& s) {
  return concept_continuous_forms(p).value() && is_residuated(s.amap) &&
         is_residual(s.bmap);
}

}  // namespace

LemmaForms residuated_pair_forms(const MappingPair& p) {
  SpecMaps s(p);
  LemmaForms lf{"residuated pair", {}};
  lf.forms.emplace_back("concept continuous with adjoint components",
                        residuated_pair_definition(p, s));

  // The component adjoints, where they exist, must pick out exactly the
  // rows and columns pulled back from the target.
  bool eq_form = false;
  auto ua = upper_adjoint(s.amap);
  auto lb = lower_adjoint(s.bmap);
  if (ua && lb) {
    Ops o(p);
    eq_form = true;
    for (std::size_t hh = 0; hh < o.h() && eq_form; ++hh)
      if (o.k.object_row((*ua)(hh)) != o.bpre(o.l.object_row(hh)))
        eq_form = false;
    for (std::size_t nn = 0; nn < o.n() && eq_form; ++nn)
      if (o.k.attribute_col((*lb)(nn)) != o.apre(o.l.attribute_col(nn)))
        eq_form = false;
  }
  lf.forms.emplace_back("component adjoints satisfy the incidence equations",
                        eq_form);

  bool comp_form = false;
  if (incidence_reflecting_forms(p).value()) {
    auto comp = pointwise_companion(p);
    if (comp && incidence_preserving_forms(*comp).value()) comp_form = true;
  }
  lf.forms.emplace_back("reflection with incidence-preserving companion", comp_form);
  return lf;
}

LemmaForms residual_pair_forms(const MappingPair& p) {
  SpecMaps s(p);
  LemmaForms lf{"residual pair", {}};
  lf.forms.emplace_back("conceptual with adjoint components",
                        residual_pair_definition(p, s));

  // Independent re-derivation: residuality of the components is equivalent
  // to the existence of the corresponding poset adjoints.
  bool adj_form = conceptual_forms(p).value() &&
                  lower_adjoint(s.amap).has_value() &&
                  upper_adjoint(s.bmap).has_value();
  lf.forms.emplace_back("conceptual with existing component adjoints", adj_form);
  return lf;
}

bool is_residuated_pair(const MappingPair& p) { return residuated_pair_forms(p).value(); }
bool is_residual_pair(const MappingPair& p) { return residual_pair_forms(p).value(); }

std::optional<MappingPair> residual_companion(const MappingPair& p) {
  if (!is_residuated_pair(p)) return std::nullopt;
  SpecMaps s(p);
  auto ua = upper_adjoint(s.amap);
  auto lb = lower_adjoint(s.bmap);
  if (!ua || !lb)
    throw InternalError("residuated pair lost its component adjoints");
  return MappingPair(p.target, p.source, ua->table, lb->table);
}

std::pair<std::vector<int>, std::vector<int>> partner_reconstruction(
    const MappingPair& p, PartnerClass which) {
  SpecMaps s(p);
  Ops o(p);
  std::vector<int> ra(o.g(), -1), rb(o.m(), -1);
  for (std::size_t gg = 0; gg < o.g(); ++gg) {
    Bitset cands(o.h());
    for (std::size_t hh = 0; hh < o.h(); ++hh) {
      Bitset preH = o.bpre(o.l.object_row(hh));
      bool in = which == PartnerClass::conceptual
                    ? o.k.object_row(gg).is_subset_of(preH)
                    : preH.is_subset_of(o.k.object_row(gg));
      if (in) cands.set(hh);
    }
    auto pick = which == PartnerClass::conceptual ? s.ph.maximum(cands)
                                                  : s.ph.minimum(cands);
    if (!pick)
      throw ClassError("partner reconstruction found no extremum: class violation");
    ra[gg] = static_cast<int>(*pick);
  }
  for (std::size_t mm = 0; mm < o.m(); ++mm) {
    Bitset cands(o.n());
    for (std::size_t nn = 0; nn < o.n(); ++nn) {
      Bitset preN = o.apre(o.l.attribute_col(nn));
      bool in = which == PartnerClass::conceptual
                    ? o.k.attribute_col(mm).is_subset_of(preN)
                    : preN.is_subset_of(o.k.attribute_col(mm));
      if (in) cands.set(nn);
    }
    auto pick = which == PartnerClass::conceptual ? s.pn.minimum(cands)
                                                  : s.pn.maximum(cands);
    if (!pick)
      throw ClassError("partner reconstruction found no extremum: class violation");
    rb[mm] = static_cast<int>(*pick);
  }
  if (ra != p.alpha || rb != p.beta)
    throw InternalError("partner reconstruction disagrees with the stored pair");
  return {std::move(ra), std::move(rb)};
}

MorphismClassification classify(const MappingPair& p) {
  MorphismClassification c{
      extent_continuous_forms(p), intent_continuous_forms(p),
      extent_dense_forms(p),      intent_dense_forms(p),
      extent_full_forms(p),       intent_full_forms(p),
      incidence_preserving_forms(p), incidence_reflecting_forms(p),
      conceptual_forms(p),        concept_continuous_forms(p),
      false, false, false, false, false, {}, {}, {}};

  auto consensus = [&](const LemmaForms& lf) {
    if (!lf.agree()) {
      std::string msg = "form disagreement in " + lf.name + ":";
      for (const auto& [n, v] : lf.forms)
        msg += " [" + n + "=" + (v ? "true" : "false") + "]";
      c.falsifications.push_back(msg);
    }
    return lf.forms.front().second;
  };

  bool ec = consensus(c.extent_continuous);
  bool ic = consensus(c.intent_continuous);
  bool ed = consensus(c.extent_dense);
  bool id = consensus(c.intent_dense);
  bool ef = consensus(c.extent_full);
  bool inf_ = consensus(c.intent_full);
  bool ip = consensus(c.incidence_preserving);
  bool ir = consensus(c.incidence_reflecting);
  bool con = consensus(c.conceptual);
  bool cc = consensus(c.concept_continuous);

  c.separately_continuous = ec && ic;
  c.concept_preserving = is_concept_preserving(p);
  c.embedding = ip && ir;
  c.dense_embedding = c.embedding && ed && id;
  if (c.dense_embedding != (con && cc))
    c.falsifications.push_back("dense-embedding theorem violated");
  c.context_isomorphism = is_context_isomorphism(p);

  if (con != (c.separately_continuous && c.concept_preserving))
    c.falsifications.push_back("conceptual definition mismatch");

  // Transfer between the partners of a conceptual pair.
  if (con) {
    if (!(c.embedding == ef && ef == inf_))
      c.falsifications.push_back("fullness transfer violated for a conceptual pair");
    if (ed != id)
      c.falsifications.push_back("density transfer violated for a conceptual pair");
  }
  if (c.embedding && !(ef && inf_))
    c.falsifications.push_back("an embedding with a non-full component");

  if (p.source.is_purified() && p.target.is_purified()) {
    auto rforms = residuated_pair_forms(p);
    auto r2forms = residual_pair_forms(p);
    if (!rforms.agree()) c.falsifications.push_back("form disagreement in " + rforms.name);
    if (!r2forms.agree()) c.falsifications.push_back("form disagreement in " + r2forms.name);
    c.residuated_pair = rforms.forms.front().second;
    c.residual_pair = r2forms.forms.front().second;
  }
  return c;
}

}  // namespace fca
