#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "fca/error.hpp"

namespace fca {

/// Fixed-width bit vector over the index space [0, size).
/// All set algebra (subset, intersection, union) is word-wise.
class Bitset {
public:
  Bitset() : size_(0) {}
  explicit Bitset(std::size_t n, bool fill = false)
      : size_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    if (fill) mask_tail();
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool none() const {
    for (auto w : words_) if (w) return false;
    return true;
  }
  bool any() const { return !none(); }
  bool all() const { return count() == size_; }

  Bitset& operator&=(const Bitset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference: bits of *this not in o.
  Bitset& operator-=(const Bitset& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complement() const {
    Bitset r(size_, true);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~words_[i];
    return r;
  }

  bool is_subset_of(const Bitset& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  /// Strict weak order for use as a map/set key.
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) r.push_back(i);
    return r;
  }

  static Bitset of(std::size_t n, std::initializer_list<std::size_t> members) {
    Bitset b(n);
    for (auto i : members) b.set(i);
    return b;
  }

  /// Bits below index i (exclusive), used for lectic comparisons.
  Bitset prefix(std::size_t i) const {
    Bitset r = *this;
    for (std::size_t j = i; j < size_; ++j) r.reset(j);
    return r;
  }

private:
  void check_index(std::size_t i) const {
    if (i >= size_) throw DimensionError("bit index out of range");
  }
  void check_same(const Bitset& o) const {
    if (size_ != o.size_) throw DimensionError("bitset width mismatch");
  }
  void mask_tail() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace fca
