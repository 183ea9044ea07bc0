#include "fca/context.hpp"

#include <atomic>
#include <set>

namespace fca {

namespace {
std::uint64_t next_context_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

void require_distinct(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    throw DimensionError(std::string(what) + " names not pairwise distinct");
}
}  // namespace

Context::Context(std::vector<std::string> objects,
                 std::vector<std::string> attributes,
                 const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      id_(next_context_id()) {
  require_distinct(objects_, "object");
  require_distinct(attributes_, "attribute");
  if (incidence.size() != objects_.size())
    throw DimensionError("incidence row count != |objects|");
  rows_.reserve(objects_.size());
  for (const auto& row : incidence) {
    if (row.size() != attributes_.size())
      throw DimensionError("incidence column count != |attributes|");
    Bitset r(attributes_.size());
    for (std::size_t m = 0; m < row.size(); ++m)
      if (row[m]) r.set(m);
    rows_.push_back(std::move(r));
  }
  cols_.reserve(attributes_.size());
  for (std::size_t m = 0; m < attributes_.size(); ++m) {
    Bitset c(objects_.size());
    for (std::size_t g = 0; g < objects_.size(); ++g)
      if (rows_[g].test(m)) c.set(g);
    cols_.push_back(std::move(c));
  }
}

Context Context::of(std::vector<std::string> objects,
                    std::vector<std::string> attributes,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> inc(objects.size(),
                                     std::vector<bool>(attributes.size(), false));
  for (auto [g, m] : pairs) {
    if (g >= objects.size() || m >= attributes.size())
      throw DimensionError("incidence pair out of range");
    inc[g][m] = true;
  }
  return Context(std::move(objects), std::move(attributes), inc);
}

bool Context::incident(std::size_t g, std::size_t m) const {
  if (g >= objects_.size() || m >= attributes_.size())
    throw DimensionError("incidence index out of range");
  return rows_[g].test(m);
}

const Bitset& Context::object_row(std::size_t g) const {
  if (g >= objects_.size()) throw DimensionError("object index out of range");
  return rows_[g];
}

const Bitset& Context::attribute_col(std::size_t m) const {
  if (m >= attributes_.size()) throw DimensionError("attribute index out of range");
  return cols_[m];
}

ObjSet Context::object_set(const Bitset& bits) const {
  if (bits.size() != objects_.size())
    throw DimensionError("object set width != |objects|");
  return ObjSet{id_, bits};
}

ObjSet Context::object_set(std::initializer_list<std::size_t> members) const {
  Bitset b(objects_.size());
  for (auto i : members) b.set(i);
  return ObjSet{id_, std::move(b)};
}

AttrSet Context::attribute_set(const Bitset& bits) const {
  if (bits.size() != attributes_.size())
    throw DimensionError("attribute set width != |attributes|");
  return AttrSet{id_, bits};
}

AttrSet Context::attribute_set(std::initializer_list<std::size_t> members) const {
  Bitset b(attributes_.size());
  for (auto i : members) b.set(i);
  return AttrSet{id_, std::move(b)};
}

void Context::check(const ObjSet& a) const {
  if (a.owner != id_) throw OwnershipError("object set belongs to another context");
  if (a.bits.size() != objects_.size())
    throw DimensionError("object set width != |objects|");
}

void Context::check(const AttrSet& b) const {
  if (b.owner != id_) throw OwnershipError("attribute set belongs to another context");
  if (b.bits.size() != attributes_.size())
    throw DimensionError("attribute set width != |attributes|");
}

AttrSet Context::up(const ObjSet& a) const {
  check(a);
  Bitset r(attributes_.size(), true);  // empty intersection convention
  for (std::size_t g = 0; g < objects_.size(); ++g)
    if (a.bits.test(g)) r &= rows_[g];
  return AttrSet{id_, std::move(r)};
}

ObjSet Context::down(const AttrSet& b) const {
  check(b);
  Bitset r(objects_.size(), true);
  for (std::size_t m = 0; m < attributes_.size(); ++m)
    if (b.bits.test(m)) r &= cols_[m];
  return ObjSet{id_, std::move(r)};
}

FormalConcept Context::object_concept(std::size_t g) const {
  if (g >= objects_.size()) throw DimensionError("object index out of range");
  AttrSet intent{id_, rows_[g]};
  return FormalConcept{down(intent), std::move(intent)};
}

FormalConcept Context::attribute_concept(std::size_t m) const {
  if (m >= attributes_.size()) throw DimensionError("attribute index out of range");
  ObjSet extent{id_, cols_[m]};
  AttrSet intent = up(extent);
  return FormalConcept{std::move(extent), std::move(intent)};
}

bool Context::is_concept(const ObjSet& a, const AttrSet& b) const {
  check(a);
  check(b);
  return down(b) == a && up(a) == b;
}

bool Context::obj_specialization_leq(std::size_t j, std::size_t k) const {
  if (j >= objects_.size() || k >= objects_.size())
    throw DimensionError("object index out of range");
  return rows_[k].is_subset_of(rows_[j]);
}

bool Context::attr_specialization_leq(std::size_t m, std::size_t n) const {
  if (m >= attributes_.size() || n >= attributes_.size())
    throw DimensionError("attribute index out of range");
  return cols_[m].is_subset_of(cols_[n]);
}

bool Context::is_purified() const {
  std::set<Bitset> row_set(rows_.begin(), rows_.end());
  std::set<Bitset> col_set(cols_.begin(), cols_.end());
  bool injective = row_set.size() == rows_.size() && col_set.size() == cols_.size();

  // Cross-check: antisymmetry of both specialization quasi-orders.
  bool antisym = true;
  for (std::size_t j = 0; j < objects_.size() && antisym; ++j)
    for (std::size_t k = 0; k < objects_.size(); ++k)
      if (j != k && obj_specialization_leq(j, k) && obj_specialization_leq(k, j)) {
        antisym = false;
        break;
      }
  for (std::size_t m = 0; m < attributes_.size() && antisym; ++m)
    for (std::size_t n = 0; n < attributes_.size(); ++n)
      if (m != n && attr_specialization_leq(m, n) && attr_specialization_leq(n, m)) {
        antisym = false;
        break;
      }
  if (injective != antisym)
    throw InternalError("purity check disagreement between injectivity and antisymmetry");
  return injective;
}

std::vector<Bitset> Context::extents() const {
  std::set<Bitset> out;
  if (attributes_.size() <= objects_.size()) {
    for_each_subset(attributes_.size(), [&](const Bitset& b) {
      out.insert(down(AttrSet{id_, b}).bits);
    });
  } else {
    for_each_subset(objects_.size(), [&](const Bitset& a) {
      out.insert(extent_closure(ObjSet{id_, a}).bits);
    });
  }
  return {out.begin(), out.end()};
}

std::vector<Bitset> Context::intents() const {
  std::set<Bitset> out;
  if (objects_.size() <= attributes_.size()) {
    for_each_subset(objects_.size(), [&](const Bitset& a) {
      out.insert(up(ObjSet{id_, a}).bits);
    });
  } else {
    for_each_subset(attributes_.size(), [&](const Bitset& b) {
      out.insert(intent_closure(AttrSet{id_, b}).bits);
    });
  }
  return {out.begin(), out.end()};
}

void for_each_subset(std::size_t n, const std::function<void(const Bitset&)>& fn) {
  if (n > 20) throw DimensionError("subset enumeration beyond desk scale");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) b.set(i);
    fn(b);
  }
}

}  // namespace fca
