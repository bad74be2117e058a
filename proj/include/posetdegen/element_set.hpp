#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace posetdegen {

// Maximum number of poset elements representable in an ElementSet.
inline constexpr std::size_t max_elements = 64;

// Subset of poset elements, indexed by the poset's canonical element order.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(std::size_t i) { return ElementSet{std::uint64_t{1} << i}; }
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  // Index of the lowest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet{bits_ | o.bits_}; }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet{bits_ & o.bits_}; }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet{bits_ & ~o.bits_}; }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;

  // Lattice ordering used for sorting ideals: by cardinality, then bit pattern.
  constexpr bool operator<(ElementSet o) const {
    const auto a = count(), b = o.count();
    return a != b ? a < b : bits_ < o.bits_;
  }

  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<std::size_t> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Ideal = ElementSet;

}  // namespace posetdegen

template <>
struct std::hash<posetdegen::ElementSet> {
  std::size_t operator()(posetdegen::ElementSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
