#include "posetdegen/relative_structure.hpp"

namespace posetdegen {

Marking Marking::fundamental(ElementSet marked, ElementSet k, std::size_t n) {
  Marking m{marked, std::vector<std::int64_t>(n, 0)};
  for (auto p : k) m.values[p] = 1;
  return m;
}

RelativeStructure::RelativeStructure(Poset order, Poset weak, std::optional<Marking> marking, IdealLattice lattice)
    : order_(std::move(order)), weak_(std::move(weak)), marking_(std::move(marking)), lattice_(std::move(lattice)) {}

Ideal RelativeStructure::star(Ideal j1, Ideal j2) const {
  const Ideal r = star_product(j1, j2, weak_);
  if (!lattice_.contains(r))
    throw Error(ErrorCode::internal_closure_failure,
                "star of " + format_set(order_, j1) + " and " + format_set(order_, j2) + " is not an ideal");
  return r;
}

std::optional<Diagnostic> diagnose_marking(const Poset& order, const Poset& weak, const Marking& marking) {
  const ElementSet marked = marking.marked;
  for (auto p : marked)
    if (!weak.above(p).empty()) {
      const auto q = weak.above(p).first();
      return Diagnostic{Condition::marked_top, order.label(p) + " <' " + order.label(q)};
    }
  const ElementSet missing = (order.minimal() | order.maximal()) - marked;
  if (!missing.empty())
    return Diagnostic{Condition::minmax, order.label(missing.first()) + " is extremal but not marked"};
  for (auto p : marked)
    for (auto q : order.above(p) & marked)
      if (marking[p] < marking[q])
        return Diagnostic{Condition::dominance, order.label(p) + " < " + order.label(q) + " but " +
                                                    std::to_string(marking[p]) + " < " + std::to_string(marking[q])};
  return std::nullopt;
}

namespace {

std::optional<Diagnostic> diagnose_with_lattice(const Poset& order, const Poset& weak,
                                                const std::optional<Marking>& marking, const IdealLattice& lattice) {
  if (weak.labels() != order.labels())
    return Diagnostic{Condition::weaker, "weak order is over a different element set"};
  for (auto [p, q] : weak.relations())
    if (!order.less(p, q)) return Diagnostic{Condition::weaker, order.label(p) + " <' " + order.label(q) + " but not " +
                                                                    order.label(p) + " < " + order.label(q)};
  for (auto [a, b] : lattice.incomparable_pairs()) {
    const Ideal r = star_product(lattice[a], lattice[b], weak);
    if (!lattice.contains(r))
      return Diagnostic{Condition::star_closed, "(" + format_set(order, lattice[a]) + ", " + format_set(order, lattice[b]) +
                                                    ") has star " + format_set(order, r)};
  }
  if (marking) return diagnose_marking(order, weak, *marking);
  return std::nullopt;
}

}  // namespace

std::optional<Diagnostic> diagnose_relative_structure(const Poset& order, const Poset& weak,
                                                      const std::optional<Marking>& marking) {
  return diagnose_with_lattice(order, weak, marking, enumerate_ideals(order));
}

void check_marking(const RelativeStructure& s, const Marking& marking) {
  if (auto d = diagnose_marking(s.order(), s.weak(), marking)) throw ConditionViolated(*d);
}

RelativeStructure validate_relative_structure(const Poset& order, const Poset& weak, std::optional<Marking> marking) {
  IdealLattice lattice = enumerate_ideals(order);
  if (auto d = diagnose_with_lattice(order, weak, marking, lattice)) throw ConditionViolated(*d);
  return RelativeStructure(order, weak, std::move(marking), std::move(lattice));
}

RelativeStructure validate_relative_structure(const Poset& order, const std::vector<LabelPair>& weak_covers,
                                              std::optional<Marking> marking) {
  return validate_relative_structure(order, build_poset(order.labels(), weak_covers), std::move(marking));
}

Poset weak_order_excluding(const Poset& order, ElementSet excluded) { return drop_relations_from(order, excluded); }

}  // namespace posetdegen
