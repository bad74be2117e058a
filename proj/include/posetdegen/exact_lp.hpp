#pragma once

#include <span>
#include <vector>

#include "posetdegen/point.hpp"
#include "posetdegen/rational.hpp"

namespace posetdegen {

// Phase-one simplex over the rationals with Bland's rule: is there y >= 0 with
// A y = b? `columns` lists the columns of A.
bool is_feasible(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b);

// x is a convex combination of `points`.
bool in_convex_hull(std::span<const Point> points, const Point& x);

// Members of `points` that are not convex combinations of the others.
// Midpoint pairs and unique maximizers of a few fixed directions settle most
// points before any linear program runs.
std::vector<Point> extreme_points(std::span<const Point> points);

// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const Point> points);

}  // namespace posetdegen
