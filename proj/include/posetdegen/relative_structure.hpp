#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetdegen/errors.hpp"
#include "posetdegen/ideal_lattice.hpp"
#include "posetdegen/poset.hpp"

namespace posetdegen {

// Integer values on a marked subset. values is indexed by element and is zero
// off the marked set.
struct Marking {
  ElementSet marked;
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::size_t p) const { return values[p]; }
  bool operator==(const Marking&) const = default;

  static Marking fundamental(ElementSet marked, ElementSet k, std::size_t n);
};

// A poset with a weaker order <' such that J(P,<) is closed under *'.
// Optionally carries a marking; the marking's conditions are checked too.
class RelativeStructure {
 public:
  RelativeStructure(Poset order, Poset weak, std::optional<Marking> marking, IdealLattice lattice);

  std::size_t size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  const Poset& weak() const { return weak_; }
  const std::optional<Marking>& marking() const { return marking_; }
  const IdealLattice& lattice() const { return lattice_; }

  ElementSet max_weak(Ideal j) const { return weak_.maximal_in(j); }
  // J1 *' J2; throws InternalClosureFailure if the result leaves the lattice.
  Ideal star(Ideal j1, Ideal j2) const;

 private:
  Poset order_;
  Poset weak_;
  std::optional<Marking> marking_;
  IdealLattice lattice_;
};

// First violated condition, or nullopt when the data forms a valid structure.
std::optional<Diagnostic> diagnose_relative_structure(const Poset& order, const Poset& weak,
                                                      const std::optional<Marking>& marking = std::nullopt);

// Conditions (iii), minmax and dominance of a marking against a structure.
std::optional<Diagnostic> diagnose_marking(const Poset& order, const Poset& weak, const Marking& marking);
void check_marking(const RelativeStructure& s, const Marking& marking);

// Throws ConditionViolated.
RelativeStructure validate_relative_structure(const Poset& order, const Poset& weak,
                                              std::optional<Marking> marking = std::nullopt);
RelativeStructure validate_relative_structure(const Poset& order, const std::vector<LabelPair>& weak_covers,
                                              std::optional<Marking> marking = std::nullopt);

// p <' q iff p < q and p is not in `excluded`; with the marked set this is the
// FFLV-type weak order, with the marked set plus O it is the MCOP weak order.
Poset weak_order_excluding(const Poset& order, ElementSet excluded);

}  // namespace posetdegen
