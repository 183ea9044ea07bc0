#include "fca/order.hpp"

#include <algorithm>
#include <set>

#include "fca/context.hpp"

namespace fca {

Poset::Poset(std::vector<std::string> labels,
             const std::vector<std::vector<bool>>& leq)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw OrderError("element labels not pairwise distinct");
  }
  if (leq.size() != n) throw DimensionError("order matrix row count mismatch");
  for (const auto& row : leq)
    if (row.size() != n) throw DimensionError("order matrix column count mismatch");

  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x][x]) throw OrderError("order not reflexive");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) throw OrderError("order not antisymmetric");
      for (std::size_t z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z])
          throw OrderError("order not transitive");
    }
  }

  ups_.assign(n, Bitset(n));
  downs_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x][y]) {
        ups_[x].set(y);
        downs_[y].set(x);
      }
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return Poset(std::move(labels), leq);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    leq[i][i] = true;
  }
  return Poset(std::move(labels), leq);
}

bool Poset::leq(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw DimensionError("poset index out of range");
  return ups_[x].test(y);
}

const Bitset& Poset::up_set(std::size_t x) const {
  if (x >= size()) throw DimensionError("poset index out of range");
  return ups_[x];
}

const Bitset& Poset::down_set(std::size_t x) const {
  if (x >= size()) throw DimensionError("poset index out of range");
  return downs_[x];
}

Bitset Poset::upper_bounds(const Bitset& a) const {
  if (a.size() != size()) throw DimensionError("subset width mismatch");
  Bitset r(size(), true);
  for (std::size_t x = 0; x < size(); ++x)
    if (a.test(x)) r &= ups_[x];
  return r;
}

Bitset Poset::lower_bounds(const Bitset& a) const {
  if (a.size() != size()) throw DimensionError("subset width mismatch");
  Bitset r(size(), true);
  for (std::size_t x = 0; x < size(); ++x)
    if (a.test(x)) r &= downs_[x];
  return r;
}

std::optional<std::size_t> Poset::supremum(const Bitset& a) const {
  Bitset ub = upper_bounds(a);
  return minimum(ub);
}

std::optional<std::size_t> Poset::infimum(const Bitset& a) const {
  Bitset lb = lower_bounds(a);
  return maximum(lb);
}

std::optional<std::size_t> Poset::maximum(const Bitset& a) const {
  if (a.size() != size()) throw DimensionError("subset width mismatch");
  for (std::size_t x = 0; x < size(); ++x)
    if (a.test(x) && a.is_subset_of(downs_[x])) return x;
  return std::nullopt;
}

std::optional<std::size_t> Poset::minimum(const Bitset& a) const {
  if (a.size() != size()) throw DimensionError("subset width mismatch");
  for (std::size_t x = 0; x < size(); ++x)
    if (a.test(x) && a.is_subset_of(ups_[x])) return x;
  return std::nullopt;
}

std::vector<Bitset> Poset::lower_cuts() const {
  std::set<Bitset> cuts;
  for_each_subset(size(), [&](const Bitset& a) { cuts.insert(lower_cut(a)); });
  return {cuts.begin(), cuts.end()};
}

std::vector<Bitset> Poset::upper_cuts() const {
  std::set<Bitset> cuts;
  for_each_subset(size(), [&](const Bitset& b) { cuts.insert(upper_cut(b)); });
  return {cuts.begin(), cuts.end()};
}

bool Poset::covers(std::size_t x, std::size_t y) const {
  if (!lt(x, y)) return false;
  for (std::size_t z = 0; z < size(); ++z)
    if (lt(x, z) && lt(z, y)) return false;
  return true;
}

FiniteLattice::FiniteLattice(Poset poset) : poset_(std::move(poset)) {
  const std::size_t n = poset_.size();
  if (n == 0) throw OrderError("a complete lattice is nonempty");

  join_.assign(n, std::vector<int>(n, -1));
  meet_.assign(n, std::vector<int>(n, -1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Bitset pair = Bitset::of(n, {x, y});
      auto s = poset_.supremum(pair);
      auto i = poset_.infimum(pair);
      if (!s || !i) throw OrderError("pairwise lub/glb missing: not a lattice");
      join_[x][y] = static_cast<int>(*s);
      meet_[x][y] = static_cast<int>(*i);
    }

  auto bot = poset_.supremum(Bitset(n));  // least upper bound of ∅
  auto top = poset_.infimum(Bitset(n));
  if (!bot || !top) throw OrderError("bounds missing: not a complete lattice");
  bottom_ = *bot;
  top_ = *top;
}

std::size_t FiniteLattice::join(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw DimensionError("lattice index out of range");
  return static_cast<std::size_t>(join_[x][y]);
}

std::size_t FiniteLattice::meet(std::size_t x, std::size_t y) const {
  if (x >= size() || y >= size()) throw DimensionError("lattice index out of range");
  return static_cast<std::size_t>(meet_[x][y]);
}

std::size_t FiniteLattice::sup(const Bitset& s) const {
  if (s.size() != size()) throw DimensionError("subset width mismatch");
  std::size_t r = bottom_;
  for (std::size_t x = 0; x < size(); ++x)
    if (s.test(x)) r = join(r, x);
  return r;
}

std::size_t FiniteLattice::inf(const Bitset& s) const {
  if (s.size() != size()) throw DimensionError("subset width mismatch");
  std::size_t r = top_;
  for (std::size_t x = 0; x < size(); ++x)
    if (s.test(x)) r = meet(r, x);
  return r;
}

MonoMap::MonoMap(Poset src, Poset tgt, std::vector<int> tbl)
    : source(std::move(src)), target(std::move(tgt)), table(std::move(tbl)) {
  if (table.size() != source.size()) throw DimensionError("map table not total");
  for (int v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= target.size())
      throw DimensionError("map value out of range");
}

MonoMap MonoMap::identity(const Poset& p) {
  std::vector<int> t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t[i] = static_cast<int>(i);
  return MonoMap(p, p, std::move(t));
}

MonoMap MonoMap::compose(const MonoMap& g, const MonoMap& f) {
  if (!(f.target == g.source)) throw DimensionError("composition domain mismatch");
  std::vector<int> t(f.table.size());
  for (std::size_t i = 0; i < f.table.size(); ++i)
    t[i] = g.table[static_cast<std::size_t>(f.table[i])];
  return MonoMap(f.source, g.target, std::move(t));
}

bool MonoMap::is_isotone() const {
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (source.leq(x, y) && !target.leq((*this)(x), (*this)(y))) return false;
  return true;
}

bool MonoMap::is_injective() const {
  std::set<int> seen(table.begin(), table.end());
  return seen.size() == table.size();
}

bool MonoMap::is_surjective() const {
  std::set<int> seen(table.begin(), table.end());
  return seen.size() == target.size();
}

bool MonoMap::is_order_embedding() const {
  for (std::size_t x = 0; x < source.size(); ++x)
    for (std::size_t y = 0; y < source.size(); ++y)
      if (source.leq(x, y) != target.leq((*this)(x), (*this)(y))) return false;
  return true;
}

bool MonoMap::is_order_isomorphism() const {
  return is_order_embedding() && is_surjective();
}

namespace {

struct IsoSignature {
  std::size_t down, up, covers_below, covers_above;
  friend bool operator==(const IsoSignature&, const IsoSignature&) = default;
};

IsoSignature signature(const Poset& p, std::size_t x) {
  std::size_t cb = 0, ca = 0;
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p.covers(y, x)) ++cb;
    if (p.covers(x, y)) ++ca;
  }
  return {p.down_set(x).count(), p.up_set(x).count(), cb, ca};
}

bool extend(const Poset& p, const Poset& q, std::vector<int>& map,
            std::vector<bool>& used, std::size_t x,
            const std::vector<IsoSignature>& sp, const std::vector<IsoSignature>& sq) {
  if (x == p.size()) return true;
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (used[y] || !(sp[x] == sq[y])) continue;
    bool ok = true;
    for (std::size_t z = 0; z < x && ok; ++z) {
      if (p.leq(x, z) != q.leq(y, static_cast<std::size_t>(map[z]))) ok = false;
      if (p.leq(z, x) != q.leq(static_cast<std::size_t>(map[z]), y)) ok = false;
    }
    if (!ok) continue;
    map[x] = static_cast<int>(y);
    used[y] = true;
    if (extend(p, q, map, used, x + 1, sp, sq)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_order_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  std::vector<IsoSignature> sp, sq;
  for (std::size_t x = 0; x < p.size(); ++x) sp.push_back(signature(p, x));
  for (std::size_t y = 0; y < q.size(); ++y) sq.push_back(signature(q, y));

  std::vector<int> map(p.size(), -1);
  std::vector<bool> used(q.size(), false);
  if (extend(p, q, map, used, 0, sp, sq)) return map;
  return std::nullopt;
}

}  // namespace fca
