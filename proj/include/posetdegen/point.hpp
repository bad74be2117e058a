#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "posetdegen/element_set.hpp"

namespace posetdegen {

// Integer vector indexed by poset elements.
using Point = std::vector<std::int64_t>;

inline Point indicator(ElementSet s, std::size_t n) {
  Point x(n, 0);
  for (auto p : s) x[p] = 1;
  return x;
}

inline void add_to(Point& x, const Point& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
}

inline void add_indicator(Point& x, ElementSet s, std::int64_t c = 1) {
  for (auto p : s) x[p] += c;
}

struct PointHash {
  std::size_t operator()(const Point& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : x) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

}  // namespace posetdegen
