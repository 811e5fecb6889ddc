#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace wld {

/// Largest ground set the word-sized sets can hold. Larger inputs are
/// rejected at construction time rather than silently truncated.
inline constexpr int kMaxSetSize = 64;

/// A subset of {Base, Base+1, ..., Base+63} stored as one machine word.
///
/// VertexSet uses Base = 1 so that elements are the 1-based vertex labels
/// directly; PropagatorSet uses Base = 0 and indexes into a diagram's
/// canonical propagator list. The Tag keeps the two from being mixed up.
template <typename Tag, int Base>
class IndexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_) + Base; }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr IndexSet() = default;
  constexpr IndexSet(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }

  static constexpr IndexSet from_bits(std::uint64_t bits) {
    IndexSet s;
    s.bits_ = bits;
    return s;
  }

  /// {Base, ..., Base+size-1}.
  static IndexSet range(int size) {
    if (size < 0 || size > kMaxSetSize) {
      throw std::out_of_range("set size exceeds the 64-element word limit");
    }
    return from_bits(size == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << size) - 1);
  }

  static IndexSet from_vector(const std::vector<int>& elems) {
    IndexSet s;
    for (int e : elems) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int e) const {
    int off = e - Base;
    return off >= 0 && off < kMaxSetSize && ((bits_ >> off) & 1U) != 0;
  }
  void insert(int e) { bits_ |= bit(e); }
  void erase(int e) { bits_ &= ~bit(e); }

  IndexSet with(int e) const { return from_bits(bits_ | bit(e)); }
  IndexSet without(int e) const { return from_bits(bits_ & ~bit(e)); }

  /// Complement inside {Base, ..., Base+universe_size-1}.
  IndexSet complement(int universe_size) const {
    return from_bits(range(universe_size).bits_ & ~bits_);
  }

  bool is_subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Largest element, or Base-1 when empty.
  int max_element() const {
    return empty() ? Base - 1 : 63 - std::countl_zero(bits_) + Base;
  }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  friend IndexSet operator|(IndexSet a, IndexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend IndexSet operator&(IndexSet a, IndexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend IndexSet operator-(IndexSet a, IndexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  IndexSet& operator|=(IndexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(IndexSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend bool operator==(IndexSet, IndexSet) = default;

  /// Orders sets by their sorted element lists, lexicographically.
  friend std::strong_ordering lex_compare(IndexSet a, IndexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
    return ia == a.end() ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  }
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    return lex_compare(a, b);
  }

 private:
  static std::uint64_t bit(int e) {
    int off = e - Base;
    if (off < 0 || off >= kMaxSetSize) {
      throw std::out_of_range("element outside the 64-element word range");
    }
    return std::uint64_t{1} << off;
  }

  std::uint64_t bits_ = 0;
};

struct VertexTag {};
struct PropagatorTag {};

using VertexSet = IndexSet<VertexTag, 1>;
using PropagatorSet = IndexSet<PropagatorTag, 0>;

/// Strict lexicographic "less" on sorted element lists, for std::sort.
struct LexLess {
  template <typename Tag, int Base>
  bool operator()(IndexSet<Tag, Base> a, IndexSet<Tag, Base> b) const {
    return lex_compare(a, b) < 0;
  }
};

/// Calls fn(subset) for every subset of `s`, starting with the empty set.
template <typename Set, typename Fn>
void for_each_subset(Set s, Fn&& fn) {
  std::uint64_t all = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(Set::from_bits(sub));
    if (sub == all) break;
    sub = (sub - all) & all;
  }
}

}  // namespace wld

template <typename Tag, int Base>
struct std::hash<wld::IndexSet<Tag, Base>> {
  std::size_t operator()(wld::IndexSet<Tag, Base> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
