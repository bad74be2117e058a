#include "posetdegen/marked.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "posetdegen/errors.hpp"
#include "posetdegen/exact_lp.hpp"

namespace posetdegen {

std::int64_t FundamentalDecomposition::total() const {
  std::int64_t t = 0;
  for (const auto& [k, a] : terms) t += a;
  return t;
}

std::vector<Ideal> FundamentalDecomposition::support(ElementSet marked) const {
  std::vector<Ideal> out{Ideal{}};
  for (const auto& [k, a] : terms)
    if (k != out.back()) out.push_back(k);
  if (out.back() != marked) out.push_back(marked);
  return out;
}

FundamentalDecomposition fundamental_decomposition(const Poset& order, const Marking& lambda) {
  const ElementSet marked = lambda.marked;
  for (auto p : marked)
    for (auto q : order.above(p) & marked)
      if (lambda[p] < lambda[q])
        throw Error(ErrorCode::not_dominant, "marking is not dominant: " + order.label(p) + " < " + order.label(q) +
                                                 " but " + std::to_string(lambda[p]) + " < " + std::to_string(lambda[q]));
  FundamentalDecomposition out;
  if (marked.empty()) return out;
  std::int64_t lo = 0, hi = 0;
  for (auto p : marked) {
    lo = std::min(lo, lambda[p]);
    hi = std::max(hi, lambda[p]);
  }
  out.shift = -lo;
  const std::int64_t top = hi + out.shift;
  // K_i = {p : mu_p >= top - i + 1}, with like terms collected.
  for (std::int64_t i = 1; i <= top; ++i) {
    Ideal k;
    for (auto p : marked)
      if (lambda[p] + out.shift >= top - i + 1) k.insert(p);
    if (!out.terms.empty() && out.terms.back().first == k)
      ++out.terms.back().second;
    else
      out.terms.emplace_back(k, 1);
  }
  return out;
}

std::vector<Ideal> marked_lattice(const RelativeStructure& s, const Marking& lambda) {
  const auto support = fundamental_decomposition(s.order(), lambda).support(lambda.marked);
  std::vector<Ideal> out;
  for (auto j : s.lattice())
    if (std::find(support.begin(), support.end(), j & lambda.marked) != support.end()) out.push_back(j);
  return out;
}

LatticePolytope fundamental_mrpp(const RelativeStructure& s, ElementSet marked, Ideal k) {
  LatticePolytope out;
  out.kind = PolytopeKind::mrpp;
  out.ambient_dim = s.size();
  for (auto j : s.lattice())
    if ((j & marked) == k) {
      out.vertices.push_back(relative_vertex(s.weak(), j));
      out.vertex_labels.push_back(j);
    }
  out.points = out.vertices;
  std::sort(out.points.begin(), out.points.end());
  return out;
}

namespace {

// Multichains with a prescribed marked intersection per slot.
template <class Visit>
void walk_marked_chains(const RelativeStructure& s, ElementSet marked, const std::vector<Ideal>& slots, Visit&& visit) {
  const auto& lat = s.lattice();
  std::map<std::uint64_t, std::vector<std::size_t>> by_trace;
  for (std::size_t i = 0; i < lat.size(); ++i) by_trace[(lat[i] & marked).bits()].push_back(i);
  std::vector<const std::vector<std::size_t>*> candidates;
  for (auto k : slots) {
    auto it = by_trace.find(k.bits());
    if (it == by_trace.end()) return;
    candidates.push_back(&it->second);
  }
  std::vector<std::size_t> chosen;
  auto step = [&](auto&& self, std::size_t slot) -> void {
    if (slot == slots.size()) {
      visit(chosen);
      return;
    }
    for (auto pos : *candidates[slot]) {
      if (!chosen.empty() && (pos < chosen.back() || !lat[chosen.back()].subset_of(lat[pos]))) continue;
      chosen.push_back(pos);
      self(self, slot + 1);
      chosen.pop_back();
    }
  };
  step(step, 0);
}

std::vector<Ideal> slots_of(const FundamentalDecomposition& d) {
  std::vector<Ideal> slots;
  for (const auto& [k, a] : d.terms)
    for (std::int64_t i = 0; i < a; ++i) slots.push_back(k);
  return slots;
}

}  // namespace

std::vector<Point> mrpp_points(const RelativeStructure& s, const Marking& lambda) {
  const auto d = fundamental_decomposition(s.order(), lambda);
  const std::size_t n = s.size();
  const auto& lat = s.lattice();
  std::vector<Point> vertex;
  vertex.reserve(lat.size());
  for (auto j : lat) vertex.push_back(relative_vertex(s.weak(), j));
  Point base(n, 0);
  add_indicator(base, s.weak().maximal_in(s.order().all()), -d.shift);
  std::vector<Point> out;
  walk_marked_chains(s, lambda.marked, slots_of(d), [&](const std::vector<std::size_t>& chain) {
    Point x = base;
    for (auto pos : chain) add_to(x, vertex[pos]);
    out.push_back(std::move(x));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticePolytope build_mrpp(const RelativeStructure& s, const Marking& lambda, bool with_vertices) {
  fundamental_decomposition(s.order(), lambda);
  check_marking(s, lambda);
  LatticePolytope out;
  out.kind = PolytopeKind::mrpp;
  out.ambient_dim = s.size();
  out.points = mrpp_points(s, lambda);
  if (with_vertices) out.vertices = extreme_points(out.points);
  return out;
}

std::vector<Ideal> decompose_mrpp_point(const Point& x, const RelativeStructure& s, const Marking& lambda) {
  const auto d = fundamental_decomposition(s.order(), lambda);
  Point y = x;
  add_indicator(y, s.weak().maximal_in(s.order().all()), d.shift);
  auto chain = decompose_point(y, static_cast<std::size_t>(d.total()), s);
  const auto slots = slots_of(d);
  for (std::size_t i = 0; i < chain.size(); ++i)
    if ((chain[i] & lambda.marked) != slots[i])
      throw Error(ErrorCode::not_a_lattice_point, "point lies in the dilation but not in the marked section");
  return chain;
}

Point StandardizedStructure::theta(const Point& x) const {
  Point y(coordinate.size());
  for (std::size_t q = 0; q < coordinate.size(); ++q) y[q] = x[coordinate[q]];
  return y;
}

Ideal StandardizedStructure::project(Ideal j) const {
  Ideal out;
  for (std::size_t q = 0; q < classes.size(); ++q)
    if (classes[q].subset_of(j)) out.insert(q);
  return out;
}

Ideal StandardizedStructure::lift(Ideal q) const {
  Ideal out;
  for (auto c : q) out |= classes[c];
  return out;
}

WeightVector StandardizedStructure::transport(const WeightVector& w) const {
  if (w.size() != source.size())
    throw Error(ErrorCode::invalid_structure, "weight vector has " + std::to_string(w.size()) +
                                                  " entries, marked lattice has " + std::to_string(source.size()));
  WeightVector out(quotient.lattice().size());
  for (std::size_t i = 0; i < source.size(); ++i) out[quotient.lattice().position_of(image[i])] = w[i];
  return out;
}

StandardizedStructure standardize(const RelativeStructure& s, const Marking& lambda) {
  fundamental_decomposition(s.order(), lambda);
  check_marking(s, lambda);
  const Poset& order = s.order();
  const std::size_t n = s.size();
  const auto source = marked_lattice(s, lambda);

  // Elements are equivalent when no member of J_lambda separates them.
  std::vector<std::vector<bool>> signature(n, std::vector<bool>(source.size()));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < source.size(); ++i) signature[p][i] = source[i].contains(p);
  std::vector<ElementSet> classes;
  std::vector<std::size_t> class_of(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t c = 0;
    while (c < classes.size() && signature[classes[c].first()] != signature[p]) ++c;
    if (c == classes.size()) classes.emplace_back();
    classes[c].insert(p);
    class_of[p] = c;
  }
  const std::size_t m = classes.size();

  std::vector<std::string> labels;
  for (const auto& c : classes) {
    std::string label;
    for (auto p : c) label += (label.empty() ? "" : "~") + order.label(p);
    labels.push_back(label);
  }

  std::vector<ElementSet> above(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      bool forced = true;
      for (auto j : source)
        if (classes[b].subset_of(j) && !classes[a].subset_of(j)) {
          forced = false;
          break;
        }
      if (forced) above[a].insert(b);
    }
  Poset qorder = Poset::from_relation(labels, above);

  ElementSet qmarked;
  for (auto p : lambda.marked) qmarked.insert(class_of[p]);
  std::vector<IndexPair> weak_pairs;
  for (auto [p1, p2] : s.weak().relations())
    if (!qmarked.contains(class_of[p1]) && class_of[p1] != class_of[p2]) weak_pairs.emplace_back(class_of[p1], class_of[p2]);
  Poset qweak = Poset::from_index_covers(labels, weak_pairs);

  Marking mu{qmarked, std::vector<std::int64_t>(m, 0)};
  std::vector<std::size_t> coordinate(m);
  for (std::size_t q = 0; q < m; ++q) {
    const ElementSet marked_part = classes[q] & lambda.marked;
    if (!marked_part.empty()) {
      coordinate[q] = marked_part.first();
      mu.values[q] = lambda[marked_part.first()];
    } else {
      if (classes[q].count() != 1)
        throw Error(ErrorCode::internal_closure_failure, "unmarked class " + labels[q] + " has several elements");
      coordinate[q] = classes[q].first();
    }
  }
  RelativeStructure quotient = validate_relative_structure(qorder, qweak, mu);
  StandardizedStructure out{std::move(quotient), std::move(mu), std::move(classes), std::move(coordinate), source, {}};
  for (auto j : source) out.image.push_back(out.project(j));
  if (out.quotient.lattice().size() != source.size())
    throw Error(ErrorCode::internal_closure_failure, "quotient lattice does not match the marked lattice");
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!out.quotient.lattice().contains(out.image[i]) || out.lift(out.image[i]) != source[i])
      throw Error(ErrorCode::internal_closure_failure, "projection is not a lattice isomorphism");
  return out;
}

MarkedSubdivision mrpp_subdivide(const RelativeStructure& s, const Marking& lambda, const WeightVector& w, Hull hull,
                                 bool with_vertices) {
  StandardizedStructure standard = standardize(s, lambda);
  const WeightVector wq = standard.transport(w);
  Subdivision unmarked = subdivide(standard.quotient, wq, hull);
  const int full = affine_dimension(mrpp_points(standard.quotient, standard.mu));
  std::vector<MarkedPart> parts;
  for (std::size_t i = 0; i < unmarked.parts.size(); ++i) {
    const Part& part = unmarked.parts[i];
    RelativeStructure piece(part.order, standard.quotient.weak(), standard.mu, enumerate_ideals(part.order));
    auto pts = mrpp_points(piece, standard.mu);
    if (affine_dimension(pts) != full) continue;
    MarkedPart mp{i, part.order, part.sublattice, std::move(pts), {}};
    if (with_vertices) mp.vertices = extreme_points(mp.points);
    parts.push_back(std::move(mp));
  }
  return {std::move(standard), std::move(unmarked), std::move(parts)};
}

namespace {

struct ChainInequality {
  // sum of x over `inner` <= x_a - x_b
  std::size_t a, b;
  ElementSet inner;
};

void check_mcop_input(const Poset& order, const Marking& lambda, ElementSet chain_part, ElementSet order_part) {
  const ElementSet unmarked = order.all() - lambda.marked;
  if (chain_part.intersects(order_part) || (chain_part | order_part) != unmarked)
    throw Error(ErrorCode::not_a_partition, "C and O must partition the unmarked elements");
  fundamental_decomposition(order, lambda);
  const ElementSet missing = (order.minimal() | order.maximal()) - lambda.marked;
  if (!missing.empty())
    throw ConditionViolated({Condition::minmax, order.label(missing.first()) + " is extremal but not marked"});
}

}  // namespace

LatticePolytope mcop_from_inequalities(const Poset& order, const Marking& lambda, ElementSet chain_part,
                                       ElementSet order_part) {
  check_mcop_input(order, lambda, chain_part, order_part);
  const std::size_t n = order.size();
  const ElementSet ends = lambda.marked | order_part;

  std::vector<ChainInequality> ineqs;
  for (auto a : ends) {
    auto extend = [&](auto&& self, std::size_t last, ElementSet inner) -> void {
      for (auto b : ends & order.above(last)) ineqs.push_back({a, b, inner});
      for (auto c : chain_part & order.above(last)) self(self, c, inner | ElementSet::singleton(c));
    };
    extend(extend, a, ElementSet{});
  }

  // Free coordinates in a linear extension order so constraints can be checked
  // as soon as their last coordinate is fixed.
  std::vector<std::size_t> free_order;
  for (std::size_t p = 0; p < n; ++p)
    if (!lambda.marked.contains(p)) free_order.push_back(p);
  std::stable_sort(free_order.begin(), free_order.end(),
                   [&](std::size_t p, std::size_t q) { return order.below(p).count() < order.below(q).count(); });
  std::vector<std::size_t> rank_of(n, 0);
  for (std::size_t i = 0; i < free_order.size(); ++i) rank_of[free_order[i]] = i + 1;
  std::vector<std::vector<std::size_t>> due(free_order.size() + 1);
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    std::size_t last = std::max(rank_of[ineqs[i].a], rank_of[ineqs[i].b]);
    for (auto p : ineqs[i].inner) last = std::max(last, rank_of[p]);
    due[last].push_back(i);
  }

  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (auto p : lambda.marked) {
    lo = any ? std::min(lo, lambda[p]) : lambda[p];
    hi = any ? std::max(hi, lambda[p]) : lambda[p];
    any = true;
  }

  Point x(n, 0);
  for (auto p : lambda.marked) x[p] = lambda[p];
  const auto holds = [&](const ChainInequality& c) {
    std::int64_t sum = 0;
    for (auto p : c.inner) sum += x[p];
    return sum <= x[c.a] - x[c.b];
  };
  for (auto i : due[0])
    if (!holds(ineqs[i])) return {PolytopeKind::mcop, n, {}, {}, {}};

  std::vector<Point> points;
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == free_order.size()) {
      points.push_back(x);
      return;
    }
    const std::size_t p = free_order[k];
    const bool chain = chain_part.contains(p);
    const std::int64_t from = chain ? 0 : lo, to = chain ? hi - lo : hi;
    for (std::int64_t v = from; v <= to; ++v) {
      x[p] = v;
      bool ok = true;
      for (auto i : due[k + 1])
        if (!holds(ineqs[i])) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
    x[p] = 0;
  };
  assign(assign, 0);
  std::sort(points.begin(), points.end());

  // A lattice point is a vertex when its tight constraints pin down every free coordinate.
  std::vector<Point> vertices;
  const std::size_t dims = free_order.size();
  for (const auto& pt : points) {
    std::vector<std::vector<Rational>> rows;
    for (auto p : chain_part)
      if (pt[p] == 0) {
        std::vector<Rational> r(dims);
        r[rank_of[p] - 1] = 1;
        rows.push_back(std::move(r));
      }
    for (const auto& c : ineqs) {
      std::int64_t sum = 0;
      for (auto p : c.inner) sum += pt[p];
      if (sum != pt[c.a] - pt[c.b]) continue;
      std::vector<Rational> r(dims);
      for (auto p : c.inner) r[rank_of[p] - 1] += 1;
      if (rank_of[c.a] != 0) r[rank_of[c.a] - 1] -= 1;
      if (rank_of[c.b] != 0) r[rank_of[c.b] - 1] += 1;
      rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dims && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        const Rational f = rows[i][col] / rows[rank][col];
        for (std::size_t k = col; k < dims; ++k) rows[i][k] -= f * rows[rank][k];
      }
      ++rank;
    }
    if (rank == dims) vertices.push_back(pt);
  }
  return {PolytopeKind::mcop, n, std::move(vertices), {}, std::move(points)};
}

LatticePolytope mcop_build(const Poset& order, const Marking& lambda, ElementSet chain_part, ElementSet order_part) {
  LatticePolytope by_inequalities = mcop_from_inequalities(order, lambda, chain_part, order_part);
  const Poset weak = weak_order_excluding(order, lambda.marked | order_part);
  if (auto diag = diagnose_relative_structure(order, weak, lambda))
    throw Error(ErrorCode::theorem_violation, "MCOP weak order fails " + diag->message());
  const RelativeStructure s(order, weak, lambda, enumerate_ideals(order));
  const auto points = mrpp_points(s, lambda);
  if (points != by_inequalities.points)
    throw Error(ErrorCode::theorem_violation, "MCOP and MRPP lattice points differ");
  if (extreme_points(points) != by_inequalities.vertices)
    throw Error(ErrorCode::theorem_violation, "MCOP and MRPP vertices differ");
  return by_inequalities;
}

std::optional<std::pair<ElementSet, ElementSet>> mcop_recognize(const Poset& order, const Marking& lambda,
                                                                const std::vector<Point>& target_vertices) {
  std::vector<Point> target = target_vertices;
  std::sort(target.begin(), target.end());
  const auto unmarked = (order.all() - lambda.marked).members();
  const std::uint64_t count = std::uint64_t{1} << unmarked.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ElementSet c;
    for (std::size_t i = 0; i < unmarked.size(); ++i)
      if ((mask >> i) & 1u) c.insert(unmarked[i]);
    const ElementSet o = (order.all() - lambda.marked) - c;
    if (mcop_build(order, lambda, c, o).vertices == target) return std::pair{c, o};
  }
  return std::nullopt;
}

namespace {

std::string fresh_label(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

}  // namespace

FundamentalEmbedding embed_as_fundamental(const RelativeStructure& q) {
  const std::size_t n = q.size();
  std::vector<std::string> labels = q.order().labels();
  const std::string bottom = fresh_label(labels, "p0");
  labels.push_back(bottom);
  labels.push_back(fresh_label(labels, "p1"));
  std::vector<ElementSet> above(n + 2), weak_above(n + 2);
  for (std::size_t p = 0; p < n; ++p) {
    above[p] = q.order().above(p) | ElementSet::singleton(n + 1);
    weak_above[p] = q.weak().above(p);
  }
  above[n] = ElementSet::full(n) | ElementSet::singleton(n + 1);
  const Poset order = Poset::from_relation(labels, above);
  const Poset weak = Poset::from_relation(labels, weak_above);
  const ElementSet marked = ElementSet::singleton(n) | ElementSet::singleton(n + 1);
  const Ideal k = ElementSet::singleton(n);
  RelativeStructure s = validate_relative_structure(order, weak, Marking::fundamental(marked, k, n + 2));
  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i;
  return {std::move(s), marked, k, std::move(coords)};
}

FundamentalCollapse collapse_fundamental(const RelativeStructure& s, ElementSet marked, Ideal k) {
  const Poset& order = s.order();
  ElementSet keep;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const ElementSet at_or_above = order.above(p) | ElementSet::singleton(p);
    const ElementSet at_or_below = order.below(p) | ElementSet::singleton(p);
    if (at_or_above.intersects(k) || at_or_below.intersects(marked - k)) continue;
    keep.insert(p);
  }
  RelativeStructure r = validate_relative_structure(induced_subposet(order, keep), induced_subposet(s.weak(), keep));
  return {std::move(r), keep.members()};
}

std::vector<Point> project_points(const std::vector<Point>& points, const std::vector<std::size_t>& coordinates) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    Point y(coordinates.size());
    for (std::size_t i = 0; i < coordinates.size(); ++i) y[i] = x[coordinates[i]];
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace posetdegen
