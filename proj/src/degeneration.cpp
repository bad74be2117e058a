#include "posetdegen/degeneration.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "posetdegen/errors.hpp"

namespace posetdegen {

std::string_view to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::hibi: return "hibi";
    case PresentationKind::hibili: return "hibili";
    case PresentationKind::relative: return "relative";
    case PresentationKind::monomial: return "monomial";
  }
  return "?";
}

std::string_view to_string(ConeSide side) {
  switch (side) {
    case ConeSide::interior: return "interior";
    case ConeSide::boundary: return "boundary";
    case ConeSide::outside: return "outside";
  }
  return "?";
}

IdealPresentation ideal_presentation(const RelativeStructure& s, PresentationKind kind) {
  if (kind == PresentationKind::hibili && !(s.weak() == s.order()))
    throw Error(ErrorCode::kind_mismatch, "hibili presentation needs the weak order to equal the order");
  IdealPresentation out{kind, {}};
  const auto& lat = s.lattice();
  for (auto [a, b] : lat.incomparable_pairs()) {
    const Ideal j1 = lat[a], j2 = lat[b];
    Generator g{j1, j2, std::nullopt};
    switch (kind) {
      case PresentationKind::hibi: g.rhs = std::pair{j1 | j2, j1 & j2}; break;
      case PresentationKind::hibili: g.rhs = std::pair{j1 | j2, star_product(j1, j2, s.order())}; break;
      case PresentationKind::relative: g.rhs = std::pair{j1 | j2, s.star(j1, j2)}; break;
      case PresentationKind::monomial: break;
    }
    out.generators.push_back(g);
  }
  return out;
}

IdealPresentation relative_presentation(std::span<const Ideal> sublattice, const Poset& weak) {
  IdealPresentation out{PresentationKind::relative, {}};
  for (std::size_t a = 0; a < sublattice.size(); ++a)
    for (std::size_t b = a + 1; b < sublattice.size(); ++b) {
      const Ideal j1 = sublattice[a], j2 = sublattice[b];
      if (j1.subset_of(j2) || j2.subset_of(j1)) continue;
      out.generators.push_back({j1, j2, std::pair{j1 | j2, star_product(j1, j2, weak)}});
    }
  return out;
}

std::vector<ConeInequality> cone_inequalities(const RelativeStructure& s) {
  const auto& lat = s.lattice();
  std::vector<ConeInequality> out;
  for (auto [a, b] : lat.incomparable_pairs())
    out.push_back({a, b, lat.position_of(lat[a] | lat[b]), lat.position_of(s.star(lat[a], lat[b]))});
  return out;
}

Rational slack(const ConeInequality& c, const WeightVector& w) {
  return w[c.join] + w[c.star] - w[c.first] - w[c.second];
}

namespace {

void check_weight_size(const RelativeStructure& s, const WeightVector& w) {
  if (w.size() != s.lattice().size())
    throw Error(ErrorCode::invalid_structure, "weight vector has " + std::to_string(w.size()) + " entries, lattice has " +
                                                  std::to_string(s.lattice().size()));
}

WeightVector oriented(const WeightVector& w, Hull hull) {
  if (hull == Hull::upper) return w;
  WeightVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[i];
  return out;
}

ConePosition position_from(std::span<const ConeInequality> ineqs, const WeightVector& w) {
  ConePosition out;
  for (const auto& c : ineqs) {
    const int sign = sgn(slack(c, w));
    if (sign < 0)
      out.violated.emplace_back(c.first, c.second);
    else if (sign == 0)
      out.tight.emplace_back(c.first, c.second);
  }
  out.side = !out.violated.empty() ? ConeSide::outside : !out.tight.empty() ? ConeSide::boundary : ConeSide::interior;
  return out;
}

}  // namespace

ConePosition cone_position(const RelativeStructure& s, const WeightVector& w, Hull hull) {
  check_weight_size(s, w);
  return position_from(cone_inequalities(s), oriented(w, hull));
}

WeightVector canonical_interior_weight(const RelativeStructure& s) {
  WeightVector w;
  w.reserve(s.lattice().size());
  for (auto j : s.lattice()) {
    const long rest = static_cast<long>(s.size() - j.count());
    w.emplace_back(rest * rest);
  }
  return w;
}

WeightVector sample_cone_weight(std::span<const ConeInequality> inequalities, const WeightVector& canonical,
                                std::mt19937_64& rng, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  WeightVector w(canonical.size());
  for (auto& v : w) v = static_cast<long>(dist(rng));
  // Smallest integer t >= 0 with slack(w) + t * slack(canonical) >= 0 everywhere.
  Integer t = 0;
  for (const auto& c : inequalities) {
    const Rational s = slack(c, w);
    if (sgn(s) >= 0) continue;
    const Rational need = -s / slack(c, canonical);
    Integer up;
    mpz_cdiv_q(up.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
    if (up > t) t = up;
  }
  if (t != 0)
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += Rational(t) * canonical[i];
  return w;
}

Rational AffineFunction::operator()(const Point& x) const {
  Rational v = constant;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) v += normal[i] * static_cast<long>(x[i]);
  return v;
}

namespace {

struct Overflow {};

inline void add_checked(std::int64_t& a, std::int64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline void sub_checked(std::int64_t& a, std::int64_t b) {
  if (__builtin_sub_overflow(a, b, &a)) throw Overflow{};
}
inline void add_checked(Integer& a, const Integer& b) { a += b; }
inline void sub_checked(Integer& a, const Integer& b) { a -= b; }

// Affine interpolation along one linearization on integer-scaled weights.
// Returns (a_0, …, a_{n-1}, b) with a·v_J + b = W_J on the chain.
template <class T>
std::vector<T> interpolate(const Linearization& lin, const std::vector<std::size_t>& positions,
                           const std::vector<T>& weights, const Poset& weak) {
  const std::size_t n = lin.size();
  std::vector<T> a(n + 1);
  a[n] = weights[positions[0]];
  ElementSet tops;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t p = lin[i - 1];
    T v = weights[positions[i]];
    sub_checked(v, weights[positions[i - 1]]);
    const ElementSet covered = tops & weak.below(p);
    for (auto q : covered) add_checked(v, a[q]);
    a[p] = v;
    tops = (tops - covered) | ElementSet::singleton(p);
  }
  return a;
}

template <class T>
std::vector<std::vector<std::size_t>> group_linearizations(const std::vector<Linearization>& lins,
                                                           const std::vector<std::vector<std::size_t>>& positions,
                                                           const std::vector<T>& weights, const Poset& weak,
                                                           std::vector<std::vector<T>>& keys) {
  std::map<std::vector<T>, std::size_t> index;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < lins.size(); ++i) {
    auto key = interpolate(lins[i], positions[i], weights, weak);
    auto [it, fresh] = index.emplace(std::move(key), groups.size());
    if (fresh) {
      groups.emplace_back();
      keys.push_back(it->first);
    }
    groups[it->second].push_back(i);
  }
  return groups;
}

}  // namespace

Subdivider::Subdivider(const RelativeStructure& s)
    : s_(s), inequalities_(cone_inequalities(s)), linearizations_(linear_extensions(s.order())) {
  chain_positions_.reserve(linearizations_.size());
  for (const auto& l : linearizations_) {
    std::vector<std::size_t> pos;
    for (auto j : linearization_chain(l)) pos.push_back(s.lattice().position_of(j));
    chain_positions_.push_back(std::move(pos));
  }
}

Subdivision Subdivider::operator()(const WeightVector& w, Hull hull) const {
  check_weight_size(s_, w);
  const WeightVector effective = oriented(w, hull);
  {
    auto pos = position_from(inequalities_, effective);
    if (pos.side == ConeSide::outside) {
      const auto& lat = s_.lattice();
      const auto [a, b] = pos.violated.front();
      throw OutsideCone(std::move(pos.violated), "weight violates the cone inequality for (" + format_set(s_.order(), lat[a]) +
                                                     ", " + format_set(s_.order(), lat[b]) + ")");
    }
  }
  const std::size_t n = s_.size();
  // Common denominator, so that interpolation runs over the integers.
  Integer den = 1;
  for (const auto& v : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> scaled(w.size());
  bool small = true;
  const Integer limit = Integer(1) << 40;
  for (std::size_t i = 0; i < w.size(); ++i) {
    scaled[i] = w[i].get_num() * (den / w[i].get_den());
    if (abs(scaled[i]) > limit) small = false;
  }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<Rational>> lifts;  // per group: a_0..a_{n-1}, b
  const auto record = [&](const auto& keys) {
    for (const auto& key : keys) {
      std::vector<Rational> lift(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        if constexpr (std::is_same_v<std::decay_t<decltype(key[i])>, Integer>)
          lift[i] = Rational(key[i], den);
        else
          lift[i] = Rational(Integer(static_cast<long>(key[i])), den);
        lift[i].canonicalize();
      }
      lifts.push_back(std::move(lift));
    }
  };
  bool done = false;
  if (small) {
    try {
      std::vector<std::int64_t> ws(scaled.size());
      for (std::size_t i = 0; i < ws.size(); ++i) ws[i] = scaled[i].get_si();
      std::vector<std::vector<std::int64_t>> keys;
      groups = group_linearizations(linearizations_, chain_positions_, ws, s_.weak(), keys);
      record(keys);
      done = true;
    } catch (const Overflow&) {
      groups.clear();
      lifts.clear();
    }
  }
  if (!done) {
    std::vector<std::vector<Integer>> keys;
    groups = group_linearizations(linearizations_, chain_positions_, scaled, s_.weak(), keys);
    record(keys);
  }

  Subdivision out;
  out.linearizations = linearizations_;
  // Part is not nothrow-movable (mpq_class), so growth would copy.
  out.parts.reserve(groups.size());
  const auto& lat = s_.lattice();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<std::size_t> positions;
    for (auto li : groups[g]) positions.insert(positions.end(), chain_positions_[li].begin(), chain_positions_[li].end());
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    Part part;
    part.sublattice.reserve(positions.size());
    for (auto pos : positions) part.sublattice.push_back(lat[pos]);
    if (groups[g].size() == 1) {
      // A single simplex: its chain is closed with full height and its order is the linearization.
      if (!is_star_closed(part.sublattice, s_.weak()))
        throw Error(ErrorCode::internal_closure_failure, "part sublattice is not closed under star");
      const auto& l = linearizations_[groups[g].front()];
      std::vector<ElementSet> above(n);
      ElementSet later;
      for (auto it = l.rbegin(); it != l.rend(); ++it) {
        above[*it] = later;
        later.insert(*it);
      }
      part.order = Poset::from_relation(s_.order().labels(), std::move(above));
    } else {
      if (!is_union_intersection_closed(part.sublattice) || !is_star_closed(part.sublattice, s_.weak()) ||
          !has_full_height(part.sublattice, n))
        throw Error(ErrorCode::internal_closure_failure,
                    "part sublattice is not closed under union, intersection and star");
      part.order = sublattice_to_order(part.sublattice, s_.order());
      if (count_linear_extensions(part.order) != groups[g].size())
        throw Error(ErrorCode::internal_closure_failure, "part is not the union of its order's simplices");
    }
    part.lift.normal.assign(lifts[g].begin(), lifts[g].begin() + static_cast<std::ptrdiff_t>(n));
    part.lift.constant = lifts[g][n];
    part.simplices = groups[g];
    out.parts.push_back(std::move(part));
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](const Part& x, const Part& y) { return x.simplices.front() < y.simplices.front(); });
  return out;
}

Subdivision subdivide(const RelativeStructure& s, const WeightVector& w, Hull hull) { return Subdivider(s)(w, hull); }

bool is_refinement(const Subdivision& fine, const Subdivision& coarse) {
  std::vector<std::size_t> owner(coarse.linearizations.size());
  for (std::size_t i = 0; i < coarse.parts.size(); ++i)
    for (auto l : coarse.parts[i].simplices) owner[l] = i;
  for (const auto& part : fine.parts)
    for (auto l : part.simplices)
      if (owner[l] != owner[part.simplices.front()]) return false;
  return true;
}

std::vector<Component> components_of(const RelativeStructure& s, const Subdivision& sub) {
  std::vector<Component> out;
  for (const auto& part : sub.parts) {
    Component c{part.sublattice, part.order, relative_presentation(part.sublattice, s.weak()), {}};
    const std::unordered_set<Ideal> inside(part.sublattice.begin(), part.sublattice.end());
    for (auto j : s.lattice())
      if (!inside.contains(j)) c.vanishing.push_back(j);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> zhu_components(const RelativeStructure& s, const WeightVector& w, Hull hull) {
  return components_of(s, subdivide(s, w, hull));
}

std::size_t standard_monomial_count(const RelativeStructure& s, std::size_t m) {
  return count_multichains(s.lattice(), m);
}

}  // namespace posetdegen
