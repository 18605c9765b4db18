#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace golomb {

/// Fixed-universe bitset over points 0..size()-1. Submodules, cosets and
/// open sets are all PointSets keyed by enumeration index.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  static PointSet of(std::size_t universe, std::initializer_list<std::size_t> points) {
    PointSet s(universe);
    for (std::size_t p : points) s.set(p);
    return s;
  }

  std::size_t universe() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const PointSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const PointSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  /// |a ∩ b| without materializing the intersection.
  static std::size_t count_and(const PointSet& a, const PointSet& b) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
    return c;
  }

  /// (a ∩ b) ⊆ c
  static bool meet_within(const PointSet& a, const PointSet& b, const PointSet& c) {
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (a.words_[k] & b.words_[k] & ~c.words_[k]) return false;
    return true;
  }

  PointSet& operator&=(const PointSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  PointSet& operator|=(const PointSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  /// Set difference.
  PointSet& operator-=(const PointSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  /// First member at or after `from`, or universe() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t k = from >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
      if (w) {
        const std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return i < size_ ? i : size_;
      }
      if (++k >= words_.size()) return size_;
      w = words_[k];
    }
  }
  std::size_t first() const { return next(0); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = first(); i < size_; i = next(i + 1)) out.push_back(i);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = first(); i < size_; i = next(i + 1)) f(i);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// Order by cardinality, then lexicographically by sorted member list.
  friend std::strong_ordering canonical_order(const PointSet& a, const PointSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const std::uint64_t diff = a.words_[k] ^ b.words_[k];
      if (!diff) continue;
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[k] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

struct CanonicalLess {
  bool operator()(const PointSet& a, const PointSet& b) const { return canonical_order(a, b) < 0; }
};

}  // namespace golomb
