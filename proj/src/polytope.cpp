#include "posetdegen/polytope.hpp"

#include <algorithm>
#include <unordered_set>

#include "posetdegen/errors.hpp"

namespace posetdegen {

std::string_view to_string(PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::order: return "order";
    case PolytopeKind::chain: return "chain";
    case PolytopeKind::relative: return "relative";
    case PolytopeKind::mrpp: return "mrpp";
    case PolytopeKind::mcop: return "mcop";
  }
  return "?";
}

RelativeStructure with_kind(const RelativeStructure& s, PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::order:
      return RelativeStructure(s.order(), Poset::trivial(s.order().labels()), std::nullopt, s.lattice());
    case PolytopeKind::chain:
      return RelativeStructure(s.order(), s.order(), std::nullopt, s.lattice());
    case PolytopeKind::relative:
      return s;
    default:
      throw Error(ErrorCode::invalid_structure, "polytope kind needs a marking");
  }
}

LatticePolytope build_polytope(const RelativeStructure& s, PolytopeKind kind) {
  const RelativeStructure r = with_kind(s, kind);
  LatticePolytope out;
  out.kind = kind;
  out.ambient_dim = r.size();
  for (auto j : r.lattice()) {
    out.vertices.push_back(relative_vertex(r.weak(), j));
    out.vertex_labels.push_back(j);
  }
  out.points = out.vertices;
  std::sort(out.points.begin(), out.points.end());
  if (std::adjacent_find(out.points.begin(), out.points.end()) != out.points.end())
    throw Error(ErrorCode::invalid_structure, "two ideals give the same vertex");
  return out;
}

std::vector<Ideal> linearization_chain(const Linearization& l) {
  std::vector<Ideal> chain{Ideal{}};
  Ideal j;
  for (auto p : l) {
    j.insert(p);
    chain.push_back(j);
  }
  return chain;
}

namespace {

// Bareiss fraction-free elimination.
template <class T>
T determinant(std::vector<std::vector<T>> a) {
  const std::size_t n = a.size();
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? T(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

bool is_unimodular(const std::vector<Point>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return true;
  if (n <= 16) {
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    const auto d = determinant(std::move(a));
    return d == 1 || d == -1;
  }
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(rows[i][j]);
  const Integer d = abs(determinant(std::move(a)));
  return d == 1;
}

// Per-position vertex and the positions of supersets, for multichain walks.
struct ChainTable {
  std::vector<Point> vertex;
  std::vector<std::vector<std::size_t>> supersets;  // includes the position itself

  explicit ChainTable(const RelativeStructure& s) {
    const auto& lat = s.lattice();
    vertex.reserve(lat.size());
    supersets.resize(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      vertex.push_back(relative_vertex(s.weak(), lat[i]));
      for (std::size_t j = i; j < lat.size(); ++j)
        if (lat[i].subset_of(lat[j])) supersets[i].push_back(j);
    }
  }
};

}  // namespace

std::vector<Simplex> canonical_triangulation(const RelativeStructure& s) {
  std::vector<Simplex> out;
  for (auto& l : linear_extensions(s.order())) {
    Simplex simplex;
    simplex.chain = linearization_chain(l);
    for (auto j : simplex.chain) simplex.vertices.push_back(relative_vertex(s.weak(), j));
    // The first vertex is the origin, so the remaining vertices are the edge vectors.
    std::vector<Point> edges(simplex.vertices.begin() + 1, simplex.vertices.end());
    if (!is_unimodular(edges))
      throw Error(ErrorCode::invalid_structure, "simplex of a linearization is not unimodular");
    simplex.linearization = std::move(l);
    out.push_back(std::move(simplex));
  }
  return out;
}

std::vector<Point> lattice_points(const RelativeStructure& s, std::size_t m) {
  const std::size_t n = s.size();
  if (m == 0) return {Point(n, 0)};
  const ChainTable table(s);
  std::vector<Point> out;
  Point current(n, 0);
  // Ideals are chosen in increasing order, each a superset of the previous.
  auto walk = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (auto j : table.supersets[from]) {
      add_to(current, table.vertex[j]);
      self(self, j, left - 1);
      for (std::size_t k = 0; k < n; ++k) current[k] -= table.vertex[j][k];
    }
  };
  walk(walk, 0, m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Ideal> decompose_point(const Point& x, std::size_t m, const RelativeStructure& s) {
  const std::size_t n = s.size();
  const auto fail = [] { return Error(ErrorCode::not_a_lattice_point, "point is not a lattice point of the dilation"); };
  if (x.size() != n) throw fail();
  const Poset& weak = s.weak();
  // Larger elements of <' have strictly more elements below them.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return weak.below(a).count() > weak.below(b).count(); });
  std::vector<std::int64_t> y(n, 0);
  for (auto p : order) {
    std::int64_t top = 0;
    for (auto q : weak.above(p)) top = std::max(top, y[q]);
    y[p] = x[p] + top;
  }
  const std::int64_t mm = static_cast<std::int64_t>(m);
  for (std::size_t p = 0; p < n; ++p) {
    if (y[p] < 0 || y[p] > mm) throw fail();
    for (auto q : s.order().above(p))
      if (y[p] < y[q]) throw fail();
  }
  std::vector<Ideal> chain;
  Point sum(n, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    Ideal j;
    for (std::size_t p = 0; p < n; ++p)
      if (y[p] >= mm - static_cast<std::int64_t>(i) + 1) j.insert(p);
    add_indicator(sum, weak.maximal_in(j));
    chain.push_back(j);
  }
  if (sum != x) throw fail();
  return chain;
}

std::vector<std::size_t> ehrhart_values(const RelativeStructure& s, std::size_t m_max) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m <= m_max; ++m) out.push_back(lattice_points(s, m).size());
  return out;
}

NormalityReport check_normality(const RelativeStructure& s, std::size_t k_max) {
  const auto base = lattice_points(s, 1);
  std::unordered_set<Point, PointHash> sum{Point(s.size(), 0)};
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::unordered_set<Point, PointHash> next;
    next.reserve(sum.size() * 2);
    for (const auto& a : sum)
      for (const auto& b : base) {
        Point c = a;
        add_to(c, b);
        next.insert(std::move(c));
      }
    sum = std::move(next);
    const auto dilated = lattice_points(s, k);
    for (const auto& x : dilated)
      if (!sum.contains(x)) return {false, k, x};
    if (sum.size() != dilated.size()) {
      // A Minkowski sum point outside k·R; report the smallest such point.
      const std::unordered_set<Point, PointHash> in(dilated.begin(), dilated.end());
      std::optional<Point> extra;
      for (const auto& x : sum)
        if (!in.contains(x) && (!extra || x < *extra)) extra = x;
      return {false, k, extra};
    }
  }
  return {};
}

std::vector<Rational> transfer_map(const std::vector<Rational>& x, const Poset& p) {
  const std::size_t n = p.size();
  if (x.size() != n) throw Error(ErrorCode::not_in_order_polytope, "point has the wrong dimension");
  for (std::size_t a = 0; a < n; ++a) {
    if (sgn(x[a]) < 0 || x[a] > 1)
      throw Error(ErrorCode::not_in_order_polytope, "coordinate " + p.label(a) + " outside [0,1]");
    for (auto b : p.above(a))
      if (x[a] < x[b])
        throw Error(ErrorCode::not_in_order_polytope, p.label(a) + " < " + p.label(b) + " but x increases");
  }
  std::vector<Rational> y(n);
  for (std::size_t a = 0; a < n; ++a) {
    Rational top = 0;
    for (auto b : p.above(a))
      if (x[b] > top) top = x[b];
    y[a] = x[a] - top;
  }
  return y;
}

std::vector<Rational> inverse_transfer_map(const std::vector<Rational>& x, const Poset& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  std::sort(seq.begin(), seq.end(), [&](auto a, auto b) { return order.below(a).count() > order.below(b).count(); });
  std::vector<Rational> y(n);
  for (auto p : seq) {
    Rational top = 0;
    for (auto q : order.above(p))
      if (y[q] > top) top = y[q];
    y[p] = x[p] + top;
  }
  return y;
}

bool triangulation_contains(const RelativeStructure& s, const std::vector<Simplex>& triangulation, const Point& x,
                            std::size_t m) {
  const std::size_t n = s.size();
  for (const auto& simplex : triangulation) {
    // Solve sum_i c_i v_i = x over the nonzero vertices v_1..v_n.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) a[r][i] = static_cast<long>(simplex.vertices[i + 1][r]);
      a[r][n] = static_cast<long>(x[r]);
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (sgn(a[piv][col]) == 0) ++piv;  // nonsingular by unimodularity
      std::swap(a[piv], a[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || sgn(a[r][col]) == 0) continue;
        const Rational f = a[r][col] / a[col][col];
        for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
      }
    }
    Rational total = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Rational c = a[i][n] / a[i][i];
      if (sgn(c) < 0) ok = false;
      total += c;
    }
    if (ok && total <= static_cast<long>(m)) return true;
  }
  return false;
}

}  // namespace posetdegen
