#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "posetdegen/element_set.hpp"
#include "posetdegen/poset.hpp"

namespace posetdegen {

// The distributive lattice J(P,<) of order ideals, sorted by (cardinality,
// bit pattern). Positions in this list key weight vectors downstream.
class IdealLattice {
 public:
  IdealLattice() = default;
  explicit IdealLattice(std::vector<Ideal> ideals);

  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const { return ideals_; }
  auto begin() const { return ideals_.begin(); }
  auto end() const { return ideals_.end(); }

  std::optional<std::size_t> position(Ideal j) const;
  bool contains(Ideal j) const { return index_.contains(j); }
  // Throws NotASublattice when j is not a member.
  std::size_t position_of(Ideal j) const;

  // Unordered pairs of positions (i < j) whose ideals are incomparable.
  std::vector<std::pair<std::size_t, std::size_t>> incomparable_pairs() const;

 private:
  std::vector<Ideal> ideals_;
  std::unordered_map<Ideal, std::size_t> index_;
};

IdealLattice enumerate_ideals(const Poset& p);

// Antichain of members of j that have no larger member of j under `order`.
ElementSet max_antichain(Ideal j, const Poset& order);

// The `weak`-ideal generated by (J1 ∩ J2) ∩ (max' J1 ∪ max' J2).
Ideal star_product(Ideal j1, Ideal j2, const Poset& weak);

// Unique order stronger than `p` whose ideal lattice is `k`.
// Throws NotASublattice or HeightDeficient.
Poset sublattice_to_order(std::span<const Ideal> k, const Poset& p);

// Closure checks used on sublattices of J(P,<).
bool is_union_intersection_closed(std::span<const Ideal> k);
bool is_star_closed(std::span<const Ideal> k, const Poset& weak);
// Contains a chain ∅ = J0 ⊂ J1 ⊂ … ⊂ Jn = P with |Ji| = i.
bool has_full_height(std::span<const Ideal> k, std::size_t n);

// Number of multichains J1 ⊆ … ⊆ Jm in the lattice.
std::size_t count_multichains(const IdealLattice& lattice, std::size_t m);

}  // namespace posetdegen
