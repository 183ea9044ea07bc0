#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fca/bitset.hpp"
#include "fca/error.hpp"

namespace fca {

class Context;

/// Subset of the objects of one particular context. The owner tag makes
/// cross-context use a checked error rather than silent nonsense.
struct ObjSet {
  std::uint64_t owner = 0;
  Bitset bits;

  friend bool operator==(const ObjSet& a, const ObjSet& b) {
    return a.owner == b.owner && a.bits == b.bits;
  }
  friend bool operator<(const ObjSet& a, const ObjSet& b) {
    return a.bits < b.bits;
  }
};

struct AttrSet {
  std::uint64_t owner = 0;
  Bitset bits;

  friend bool operator==(const AttrSet& a, const AttrSet& b) {
    return a.owner == b.owner && a.bits == b.bits;
  }
  friend bool operator<(const AttrSet& a, const AttrSet& b) {
    return a.bits < b.bits;
  }
};

/// Extent-intent pair; validity (extent = intent↓, extent↑ = intent) is
/// checked by Context::is_concept, not enforced by the type.
struct FormalConcept {
  ObjSet extent;
  AttrSet intent;

  friend bool operator==(const FormalConcept& a, const FormalConcept& b) {
    return a.extent == b.extent && a.intent == b.intent;
  }
  friend bool operator<(const FormalConcept& a, const FormalConcept& b) {
    return a.extent < b.extent;
  }
};

/// Finite formal context: named objects, named attributes, and a boolean
/// incidence matrix. Immutable after construction.
class Context {
public:
  Context(std::vector<std::string> objects, std::vector<std::string> attributes,
          const std::vector<std::vector<bool>>& incidence);

  /// Incidence given as (object index, attribute index) pairs.
  static Context of(std::vector<std::string> objects,
                    std::vector<std::string> attributes,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  std::uint64_t id() const { return id_; }

  bool incident(std::size_t g, std::size_t m) const;
  /// Attribute row of object g (its intent as a bitset).
  const Bitset& object_row(std::size_t g) const;
  /// Object column of attribute m.
  const Bitset& attribute_col(std::size_t m) const;

  ObjSet object_set(const Bitset& bits) const;
  ObjSet object_set(std::initializer_list<std::size_t> members) const;
  ObjSet empty_objects() const { return object_set(Bitset(objects_.size())); }
  ObjSet full_objects() const { return object_set(Bitset(objects_.size(), true)); }
  AttrSet attribute_set(const Bitset& bits) const;
  AttrSet attribute_set(std::initializer_list<std::size_t> members) const;
  AttrSet empty_attributes() const { return attribute_set(Bitset(attributes_.size())); }
  AttrSet full_attributes() const { return attribute_set(Bitset(attributes_.size(), true)); }

  /// A↑ = { m : g I m for all g in A }; up(∅) is the full attribute set.
  AttrSet up(const ObjSet& a) const;
  /// B↓ = { g : g I m for all m in B }; down(∅) is the full object set.
  ObjSet down(const AttrSet& b) const;

  ObjSet extent_closure(const ObjSet& a) const { return down(up(a)); }
  AttrSet intent_closure(const AttrSet& b) const { return up(down(b)); }

  bool is_extent(const ObjSet& a) const { return extent_closure(a) == a; }
  bool is_intent(const AttrSet& b) const { return intent_closure(b) == b; }

  /// γ(g) = (g↑↓, g↑)
  FormalConcept object_concept(std::size_t g) const;
  /// μ(m) = (m↓, m↓↑)
  FormalConcept attribute_concept(std::size_t m) const;

  bool is_concept(const ObjSet& a, const AttrSet& b) const;
  bool is_concept(const FormalConcept& c) const { return is_concept(c.extent, c.intent); }

  /// Object specialization quasi-order: j ≤ k  ⇔  k↑ ⊆ j↑.
  bool obj_specialization_leq(std::size_t j, std::size_t k) const;
  /// Attribute specialization quasi-order: m ≤ n  ⇔  m↓ ⊆ n↓.
  bool attr_specialization_leq(std::size_t m, std::size_t n) const;

  /// γ and μ both injective, equivalently both specialization quasi-orders
  /// antisymmetric (the two readings are cross-checked).
  bool is_purified() const;

  /// All extents (sorted bitsets). Cost 2^min(|G|,|M|) closures.
  std::vector<Bitset> extents() const;
  std::vector<Bitset> intents() const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ &&
           a.rows_ == b.rows_;
  }

private:
  void check(const ObjSet& a) const;
  void check(const AttrSet& b) const;

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bitset> rows_;  // per object, width |M|
  std::vector<Bitset> cols_;  // per attribute, width |G|
  std::uint64_t id_;
};

/// Invoke fn on every subset of {0,..,n-1}; n is capped to keep enumeration
/// at desk scale.
void for_each_subset(std::size_t n, const std::function<void(const Bitset&)>& fn);

}  // namespace fca
