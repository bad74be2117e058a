#include "posetdegen/exact_lp.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace posetdegen {

bool is_feasible(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b) {
  const std::size_t m = b.size();
  const std::size_t n = columns.size();
  if (m == 0) return true;
  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-columns[j][i]) : columns[j][i];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs of min sum(artificials).
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s -= t[i][j];
    cost[j] = s;
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // cost[rhs] holds minus the remaining artificial total.
  return sgn(cost[n + m]) == 0;
}

bool in_convex_hull(std::span<const Point> points, const Point& x) {
  if (points.empty()) return false;
  const std::size_t d = x.size();
  std::vector<std::vector<Rational>> cols;
  cols.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rational> c(d + 1);
    for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<long>(p[i]);
    c[d] = 1;
    cols.push_back(std::move(c));
  }
  std::vector<Rational> b(d + 1);
  for (std::size_t i = 0; i < d; ++i) b[i] = static_cast<long>(x[i]);
  b[d] = 1;
  return is_feasible(cols, b);
}

std::vector<Point> extreme_points(std::span<const Point> input) {
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  const std::size_t d = pts[0].size();

  enum class Status { unknown, vertex, interior };
  std::vector<Status> status(n, Status::unknown);

  std::unordered_map<Point, std::size_t, PointHash> where;
  for (std::size_t i = 0; i < n; ++i) where.emplace(pts[i], i);
  Point sum(d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool even = true;
      for (std::size_t k = 0; k < d; ++k) {
        sum[k] = pts[a][k] + pts[b][k];
        if (sum[k] % 2 != 0) {
          even = false;
          break;
        }
      }
      if (!even) continue;
      for (auto& v : sum) v /= 2;
      if (auto it = where.find(sum); it != where.end()) status[it->second] = Status::interior;
    }

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  const std::size_t directions = 2 * d + 24;
  for (std::size_t r = 0; r < directions; ++r) {
    std::vector<std::int64_t> c(d, 0);
    if (r < 2 * d)
      c[r / 2] = (r % 2 == 0) ? 1 : -1;
    else
      for (auto& v : c) v = coef(rng);
    std::size_t arg = 0, ties = 0;
    __int128 best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      __int128 val = 0;
      for (std::size_t k = 0; k < d; ++k) val += static_cast<__int128>(c[k]) * pts[i][k];
      if (i == 0 || val > best) {
        best = val;
        arg = i;
        ties = 1;
      } else if (val == best) {
        ++ties;
      }
    }
    if (ties == 1) status[arg] = Status::vertex;
  }

  std::vector<Point> out;
  std::vector<Point> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (status[i] == Status::interior) continue;
    if (status[i] == Status::unknown) {
      others.clear();
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(pts[j]);
      if (in_convex_hull(others, pts[i])) continue;
    }
    out.push_back(pts[i]);
  }
  return out;
}

int affine_dimension(std::span<const Point> points) {
  if (points.empty()) return -1;
  const std::size_t d = points[0].size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> r(d);
    for (std::size_t k = 0; k < d; ++k) r[k] = static_cast<long>(points[i][k] - points[0][k]);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[row]);
    for (std::size_t i = row + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col] / rows[row][col];
      for (std::size_t k = col; k < d; ++k) rows[i][k] -= f * rows[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace posetdegen
