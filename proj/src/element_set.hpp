#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace chordmat {

/// Maximum ground-set size supported by the bit-packed representation.
inline constexpr int kMaxElements = 64;

/// A subset of a ground set of at most 64 elements, stored as a bit mask.
///
/// Elements are 0-based internally. The 1-based numbering used in files and
/// printed output is applied only by the I/O helpers (`to_string`,
/// `from_one_based`).
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(int e) { return ElementSet(bit(e)); }
  /// Builds a set from 1-based element labels; throws if a label is outside [1, n].
  static ElementSet from_one_based(const std::vector<int>& labels, int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int e) { bits_ |= bit(e); }
  constexpr void erase(int e) { bits_ &= ~bit(e); }
  constexpr ElementSet with(int e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~bit(e)); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }
  std::vector<int> one_based() const;
  /// `{1,2,3}` with 1-based labels; the empty set prints as `{}`.
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  /// Numeric order on the mask; use `lex_less` for the order on sorted element lists.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists: {1,2} < {1,2,3} < {1,3} < {2}.
bool lex_less(ElementSet a, ElementSet b);

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace chordmat
