#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetdegen/point.hpp"
#include "posetdegen/rational.hpp"
#include "posetdegen/relative_structure.hpp"

namespace posetdegen {

enum class PolytopeKind { order, chain, relative, mrpp, mcop };

std::string_view to_string(PolytopeKind kind);

// Lattice polytope in Z^P. For the unmarked kinds `vertex_labels[i]` is the
// ideal J with vertices[i] = 1_{max J}; marked kinds leave the labels empty.
// `points` lists every lattice point (sorted).
struct LatticePolytope {
  PolytopeKind kind = PolytopeKind::relative;
  std::size_t ambient_dim = 0;
  std::vector<Point> vertices;
  std::vector<Ideal> vertex_labels;
  std::vector<Point> points;
};

struct Simplex {
  Linearization linearization;
  std::vector<Ideal> chain;  // ∅ = J0 ⊂ J1 ⊂ … ⊂ Jn = P
  std::vector<Point> vertices;
};

// The vertex 1_{max' J}.
inline Point relative_vertex(const Poset& weak, Ideal j) { return indicator(weak.maximal_in(j), weak.size()); }

// kind = order uses a trivial weak order, chain uses <' = <, relative uses the
// structure's own weak order.
LatticePolytope build_polytope(const RelativeStructure& s, PolytopeKind kind);

// The same structure with its weak order replaced according to `kind`.
RelativeStructure with_kind(const RelativeStructure& s, PolytopeKind kind);

// The chain of ideals along a linearization.
std::vector<Ideal> linearization_chain(const Linearization& l);

// One unimodular simplex per linearization; throws InvalidStructure if a
// simplex fails the unimodularity check.
std::vector<Simplex> canonical_triangulation(const RelativeStructure& s);

// Sorted integer points of m·R, generated from multichains J1 ⊆ … ⊆ Jm.
std::vector<Point> lattice_points(const RelativeStructure& s, std::size_t m);

// The unique multichain J1 ⊆ … ⊆ Jm whose vertices sum to x.
// Throws NotALatticePoint.
std::vector<Ideal> decompose_point(const Point& x, std::size_t m, const RelativeStructure& s);

std::vector<std::size_t> ehrhart_values(const RelativeStructure& s, std::size_t m_max);

struct NormalityReport {
  bool normal = true;
  std::size_t failing_dilation = 0;
  std::optional<Point> counterexample;
};

// Compares lattice points of k·R with the k-fold Minkowski sum of R's lattice
// points for k = 1..k_max.
NormalityReport check_normality(const RelativeStructure& s, std::size_t k_max);

// y_p = x_p - max_{q > p} x_q. Throws NotInOrderPolytope.
std::vector<Rational> transfer_map(const std::vector<Rational>& x, const Poset& p);
// Inverse of the transfer map of `order`, solved top-down:
// y_p = x_p + max_{q > p} y_q.
std::vector<Rational> inverse_transfer_map(const std::vector<Rational>& x, const Poset& order);

// Membership of an integer point in m·R via barycentric coordinates in the
// simplices of the canonical triangulation. Slow; meant for cross-checks.
bool triangulation_contains(const RelativeStructure& s, const std::vector<Simplex>& triangulation, const Point& x,
                            std::size_t m);

}  // namespace posetdegen
