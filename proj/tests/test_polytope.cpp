#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetdegen/exact_lp.hpp"
#include "posetdegen/flag.hpp"
#include "posetdegen/polytope.hpp"

using namespace posetdegen;

namespace {

RelativeStructure order_structure(const Poset& p) { return validate_relative_structure(p, Poset::trivial(p.labels())); }
RelativeStructure chain_structure(const Poset& p) { return validate_relative_structure(p, p); }

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Integer points of the box [0,m]^n inside the convex hull of m times the vertices.
std::vector<Point> lp_points(const LatticePolytope& poly, std::int64_t m) {
  std::vector<Point> scaled;
  for (auto v : poly.vertices) {
    for (auto& c : v) c *= m;
    scaled.push_back(v);
  }
  std::vector<Point> out;
  Point x(poly.ambient_dim, 0);
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == x.size()) {
      if (in_convex_hull(scaled, x)) out.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= m; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  walk(walk, 0);
  return out;
}

}  // namespace

TEST_CASE("unit square for the antichain") {
  const auto s = order_structure(oracle::antichain_poset(2));
  for (auto kind : {PolytopeKind::order, PolytopeKind::chain, PolytopeKind::relative}) {
    const auto poly = build_polytope(s, kind);
    CHECK(poly.vertices.size() == 4);
    CHECK(sorted(poly.vertices) == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
}

TEST_CASE("relative polytope specializes to order and chain polytopes") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : oracle::all_posets(n)) {
      const auto order = build_polytope(order_structure(p), PolytopeKind::relative);
      const auto chain = build_polytope(chain_structure(p), PolytopeKind::relative);
      CHECK(order.vertices == build_polytope(chain_structure(p), PolytopeKind::order).vertices);
      CHECK(chain.vertices == build_polytope(order_structure(p), PolytopeKind::chain).vertices);
      // Order polytope vertices are indicators of ideals.
      for (std::size_t i = 0; i < order.vertices.size(); ++i)
        CHECK(order.vertices[i] == indicator(order.vertex_labels[i], n));
    }
}

TEST_CASE("vertices are distinct 0/1 points labelled by ideals") {
  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto poly = build_polytope(s, PolytopeKind::relative);
    CHECK(std::set<Point>(poly.vertices.begin(), poly.vertices.end()).size() == poly.vertices.size());
    CHECK(poly.vertex_labels.size() == poly.vertices.size());
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      CHECK(poly.vertices[i] == relative_vertex(e.weak, poly.vertex_labels[i]));
      for (auto c : poly.vertices[i]) CHECK((c == 0 || c == 1));
    }
    // The library's vertex list is exactly the set of extreme points.
    CHECK(sorted(extreme_points(poly.vertices)) == sorted(poly.vertices));
  }
}

TEST_CASE("canonical triangulation") {
  CHECK(canonical_triangulation(chain_structure(oracle::chain_poset(3))).size() == 1);
  CHECK(canonical_triangulation(order_structure(oracle::grid_poset(2, 4))).size() == 2);
  const FlagData gr = build_flag_poset(5, {0, 2, 5});
  CHECK(canonical_triangulation(flag_structure(gr, FlagMode::fflv)).size() == 5);

  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto tri = canonical_triangulation(s);
    CHECK(tri.size() == oracle::brute_linear_extensions(e.order));
    for (const auto& simplex : tri) {
      CHECK(simplex.vertices.size() == e.order.size() + 1);
      CHECK(simplex.chain.front().empty());
      CHECK(simplex.chain.back() == e.order.all());
    }
  }
}

TEST_CASE("lattice points of dilations") {
  const auto chain2 = order_structure(oracle::chain_poset(2));
  CHECK(lattice_points(chain2, 0) == std::vector<Point>{{0, 0}});
  CHECK(lattice_points(chain2, 2).size() == 6);
  CHECK(ehrhart_values(chain2, 3) == std::vector<std::size_t>{1, 3, 6, 10});
  const auto anti = order_structure(oracle::antichain_poset(2));
  const auto values = ehrhart_values(anti, 4);
  for (std::size_t m = 0; m <= 4; ++m) CHECK(values[m] == (m + 1) * (m + 1));
  CHECK(ehrhart_values(chain_structure(oracle::grid_poset(2, 4)), 1)[1] == 6);

  for (const auto& e : oracle::small_corpus(3)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto poly = build_polytope(s, PolytopeKind::relative);
    CHECK(lattice_points(s, 1) == sorted(poly.vertices));
    for (std::int64_t m = 1; m <= 2; ++m) CHECK(lattice_points(s, static_cast<std::size_t>(m)) == lp_points(poly, m));
  }
}

TEST_CASE("decomposing lattice points") {
  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto poly = build_polytope(s, PolytopeKind::relative);
    for (std::size_t i = 0; i < poly.vertices.size(); ++i)
      CHECK(decompose_point(poly.vertices[i], 1, s) == std::vector<Ideal>{poly.vertex_labels[i]});
    for (std::size_t m = 2; m <= 3; ++m)
      for (const auto& x : lattice_points(s, m)) {
        const auto chain = decompose_point(x, m, s);
        REQUIRE(chain.size() == m);
        Point sum(e.order.size(), 0);
        for (std::size_t i = 0; i < m; ++i) {
          if (i > 0) CHECK(chain[i - 1].subset_of(chain[i]));
          add_to(sum, relative_vertex(e.weak, chain[i]));
        }
        CHECK(sum == x);
      }
  }

  // Order polytope: J_i collects the coordinates >= m - i + 1.
  const auto s = order_structure(oracle::grid_poset(2, 4));
  for (const auto& x : lattice_points(s, 3)) {
    const auto chain = decompose_point(x, 3, s);
    for (std::size_t i = 1; i <= 3; ++i) {
      ElementSet expect;
      for (std::size_t p = 0; p < x.size(); ++p)
        if (x[p] >= static_cast<std::int64_t>(3 - i + 1)) expect.insert(p);
      CHECK(chain[i - 1] == expect);
    }
  }

  CHECK_THROWS_AS(decompose_point({2, 0}, 1, s), Error);
}

TEST_CASE("triangulation membership agrees with the point list") {
  for (const auto& e : oracle::small_corpus(3)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto tri = canonical_triangulation(s);
    const auto pts = lattice_points(s, 2);
    const std::set<Point> inside(pts.begin(), pts.end());
    Point x(e.order.size(), 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
      if (i == x.size()) {
        CHECK(triangulation_contains(s, tri, x, 2) == inside.contains(x));
        return;
      }
      for (std::int64_t v = 0; v <= 2; ++v) {
        x[i] = v;
        self(self, i + 1);
      }
    };
    walk(walk, 0);
  }
}

TEST_CASE("normality") {
  CHECK(check_normality(order_structure(oracle::chain_poset(3)), 3).normal);
  CHECK(check_normality(chain_structure(oracle::grid_poset(2, 4)), 3).normal);
  const auto s = validate_relative_structure(oracle::grid_poset(2, 5), oracle::grid_poset(2, 5));
  CHECK(check_normality(s, 2).normal);
}

TEST_CASE("transfer map") {
  const Poset chain = oracle::chain_poset(2);
  CHECK(transfer_map({0, 0}, chain) == std::vector<Rational>{0, 0});
  CHECK(transfer_map({1, 1}, chain) == std::vector<Rational>{0, 1});
  CHECK_THROWS_AS(transfer_map({0, 1}, chain), Error);

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : oracle::all_posets(n))
      for (auto j : enumerate_ideals(p)) {
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = j.contains(i) ? 1 : 0;
        const auto y = transfer_map(x, p);
        const auto m = p.maximal_in(j);
        for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == (m.contains(i) ? 1 : 0));
        CHECK(inverse_transfer_map(y, p) == x);
      }

  const std::vector<Rational> half{Rational(1, 2), Rational(1, 3)};
  CHECK(inverse_transfer_map(transfer_map(half, chain), chain) == half);
}
