#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fca/bitset.hpp"
#include "fca/error.hpp"

namespace fca {

/// Finite partially ordered set. The order matrix is validated (reflexive,
/// antisymmetric, transitive) at construction.
class Poset {
public:
  Poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

  /// Order given as a strict predecessor list is sometimes handier in tests.
  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool leq(std::size_t x, std::size_t y) const;
  bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// ↑x = { y : x ≤ y }
  const Bitset& up_set(std::size_t x) const;
  /// ↓x = { y : y ≤ x }
  const Bitset& down_set(std::size_t x) const;

  Bitset upper_bounds(const Bitset& a) const;
  Bitset lower_bounds(const Bitset& a) const;

  /// A↑↓ — lower bounds of the upper bounds of A.
  Bitset lower_cut(const Bitset& a) const { return lower_bounds(upper_bounds(a)); }
  /// B↓↑
  Bitset upper_cut(const Bitset& b) const { return upper_bounds(lower_bounds(b)); }

  /// Least element of the upper-bound set, when it exists.
  std::optional<std::size_t> supremum(const Bitset& a) const;
  std::optional<std::size_t> infimum(const Bitset& a) const;

  /// Greatest (least) member of A itself, when it exists.
  std::optional<std::size_t> maximum(const Bitset& a) const;
  std::optional<std::size_t> minimum(const Bitset& a) const;

  /// All distinct lower (upper) cuts, enumerated via subsets.
  std::vector<Bitset> lower_cuts() const;
  std::vector<Bitset> upper_cuts() const;

  /// Cover relation: x ⋖ y.
  bool covers(std::size_t x, std::size_t y) const;

  /// Same labels and same order matrix.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.ups_ == b.ups_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Bitset> ups_;    // ups_[x] = ↑x
  std::vector<Bitset> downs_;  // downs_[x] = ↓x
};

/// Finite complete lattice: a poset in which every subset has a supremum and
/// an infimum. lub/glb existence is checked eagerly at construction.
class FiniteLattice {
public:
  explicit FiniteLattice(Poset poset);
  FiniteLattice(std::vector<std::string> labels,
                const std::vector<std::vector<bool>>& leq)
      : FiniteLattice(Poset(std::move(labels), leq)) {}

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  bool leq(std::size_t x, std::size_t y) const { return poset_.leq(x, y); }

  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Supremum of an arbitrary subset; sup ∅ = bottom.
  std::size_t sup(const Bitset& s) const;
  std::size_t inf(const Bitset& s) const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.poset_ == b.poset_;
  }

private:
  Poset poset_;
  std::vector<std::vector<int>> join_, meet_;
  std::size_t bottom_ = 0, top_ = 0;
};

/// Total map between two posets (or the posets underlying two lattices),
/// stored as an index table.
struct MonoMap {
  Poset source;
  Poset target;
  std::vector<int> table;

  MonoMap(Poset src, Poset tgt, std::vector<int> tbl);

  std::size_t operator()(std::size_t x) const { return static_cast<std::size_t>(table.at(x)); }

  static MonoMap identity(const Poset& p);
  /// g ∘ f (apply f first); domains must match.
  static MonoMap compose(const MonoMap& g, const MonoMap& f);

  bool is_isotone() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_order_embedding() const;
  bool is_order_isomorphism() const;

  friend bool operator==(const MonoMap& a, const MonoMap& b) {
    return a.source == b.source && a.target == b.target && a.table == b.table;
  }
};

/// Backtracking order-isomorphism search, pruned by (down-set size, up-set
/// size, cover degree) signatures. Adequate at suite sizes.
std::optional<std::vector<int>> find_order_isomorphism(const Poset& p, const Poset& q);

inline bool order_isomorphic(const Poset& p, const Poset& q) {
  return find_order_isomorphism(p, q).has_value();
}

}  // namespace fca
