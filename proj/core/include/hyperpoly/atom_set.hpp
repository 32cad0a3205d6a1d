#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace hyperpoly {

inline constexpr unsigned kMaxAtoms = 64;

// A set of atoms, stored as a bitmask over a hypergraph's atom indices.
// Indices follow the label order of the owning hypergraph, so the least
// index is the least label.
class AtomSet {
 public:
  constexpr AtomSet() = default;

  static constexpr AtomSet from_bits(std::uint64_t bits) { return AtomSet(bits); }
  static constexpr AtomSet single(unsigned index) { return AtomSet(std::uint64_t{1} << index); }
  static constexpr AtomSet first_n(unsigned n) {
    return AtomSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(unsigned index) const { return (bits_ >> index) & 1U; }
  constexpr bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(AtomSet other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(AtomSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
  // Index of the least atom. Undefined on the empty set.
  constexpr unsigned least() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

  constexpr AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
  constexpr AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
  constexpr AtomSet operator-(AtomSet o) const { return AtomSet(bits_ & ~o.bits_); }
  constexpr AtomSet& operator|=(AtomSet o) { bits_ |= o.bits_; return *this; }
  constexpr AtomSet& operator&=(AtomSet o) { bits_ &= o.bits_; return *this; }
  constexpr AtomSet& operator-=(AtomSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const AtomSet&) const = default;

  // Lexicographic order on the sorted member lists. On disjoint sets this is
  // the order by least atom.
  constexpr std::strong_ordering operator<=>(const AtomSet& o) const {
    const std::uint64_t diff = bits_ ^ o.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~(low | (low - 1));
    if (bits_ & low) {
      return (o.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  class iterator {
   public:
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr unsigned operator*() const { return static_cast<unsigned>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Calls f on every non-empty subset of s, in increasing bitmask order.
template <class F>
void for_each_nonempty_subset(AtomSet s, F&& f) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  do {
    sub = (sub - full) & full;
    if (sub != 0) f(AtomSet::from_bits(sub));
  } while (sub != 0);
}

std::vector<AtomSet> nonempty_subsets(AtomSet s);

}  // namespace hyperpoly

template <>
struct std::hash<hyperpoly::AtomSet> {
  std::size_t operator()(hyperpoly::AtomSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
