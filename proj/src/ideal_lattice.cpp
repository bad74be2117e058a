#include "posetdegen/ideal_lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "posetdegen/errors.hpp"

namespace posetdegen {

IdealLattice::IdealLattice(std::vector<Ideal> ideals) : ideals_(std::move(ideals)) {
  std::sort(ideals_.begin(), ideals_.end());
  ideals_.erase(std::unique(ideals_.begin(), ideals_.end()), ideals_.end());
  index_.reserve(ideals_.size());
  for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i], i);
}

std::optional<std::size_t> IdealLattice::position(Ideal j) const {
  if (auto it = index_.find(j); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t IdealLattice::position_of(Ideal j) const {
  if (auto it = index_.find(j); it != index_.end()) return it->second;
  throw Error(ErrorCode::not_a_sublattice, "set is not a member of the ideal lattice");
}

std::vector<std::pair<std::size_t, std::size_t>> IdealLattice::incomparable_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ideals_.size(); ++i)
    for (std::size_t j = i + 1; j < ideals_.size(); ++j)
      if (!ideals_[i].subset_of(ideals_[j]) && !ideals_[j].subset_of(ideals_[i])) out.emplace_back(i, j);
  return out;
}

IdealLattice enumerate_ideals(const Poset& p) {
  // Grow ideals one minimal element of the complement at a time.
  std::vector<Ideal> found{Ideal{}};
  std::unordered_set<Ideal> seen{Ideal{}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const Ideal j = found[k];
    for (auto v : p.all() - j) {
      if (!p.below(v).subset_of(j)) continue;
      const Ideal next = j | Ideal::singleton(v);
      if (seen.insert(next).second) found.push_back(next);
    }
  }
  return IdealLattice(std::move(found));
}

ElementSet max_antichain(Ideal j, const Poset& order) { return order.maximal_in(j); }

Ideal star_product(Ideal j1, Ideal j2, const Poset& weak) {
  const ElementSet tops = (j1 & j2) & (weak.maximal_in(j1) | weak.maximal_in(j2));
  return weak.down_closure(tops);
}

namespace {

// Sorted copy for membership tests; cheaper than hashing for small families.
class Members {
 public:
  explicit Members(std::span<const Ideal> k) : sorted_(k.begin(), k.end()) { std::sort(sorted_.begin(), sorted_.end()); }
  bool contains(Ideal j) const { return std::binary_search(sorted_.begin(), sorted_.end(), j); }

 private:
  std::vector<Ideal> sorted_;
};

}  // namespace

bool is_union_intersection_closed(std::span<const Ideal> k) {
  const Members members(k);
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b)
      if (!members.contains(k[a] | k[b]) || !members.contains(k[a] & k[b])) return false;
  return true;
}

bool is_star_closed(std::span<const Ideal> k, const Poset& weak) {
  const Members members(k);
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = a + 1; b < k.size(); ++b)
      if (!members.contains(star_product(k[a], k[b], weak))) return false;
  return true;
}

bool has_full_height(std::span<const Ideal> k, std::size_t n) {
  std::vector<Ideal> sorted(k.begin(), k.end());
  std::sort(sorted.begin(), sorted.end());
  std::unordered_set<Ideal> reached;
  for (auto j : sorted) {
    if (j.empty()) {
      reached.insert(j);
      continue;
    }
    for (auto v : j)
      if (reached.contains(j - Ideal::singleton(v))) {
        reached.insert(j);
        break;
      }
  }
  return reached.contains(ElementSet::full(n));
}

Poset sublattice_to_order(std::span<const Ideal> k, const Poset& p) {
  const std::size_t n = p.size();
  for (auto j : k)
    if (!j.subset_of(p.all()) || !p.is_ideal(j))
      throw Error(ErrorCode::not_a_sublattice, "member is not an order ideal of the poset");
  const std::unordered_set<Ideal> members(k.begin(), k.end());
  if (!members.contains(Ideal{}) || !members.contains(p.all()))
    throw Error(ErrorCode::not_a_sublattice, "sublattice must contain the empty ideal and the whole poset");
  if (!is_union_intersection_closed(k))
    throw Error(ErrorCode::not_a_sublattice, "set of ideals is not closed under union and intersection");
  if (!has_full_height(k, n))
    throw Error(ErrorCode::height_deficient, "sublattice has no maximal chain of length " + std::to_string(n));
  // q is above p exactly when every member containing q also contains p.
  std::vector<ElementSet> above(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool forced = true;
      for (auto j : k)
        if (j.contains(b) && !j.contains(a)) {
          forced = false;
          break;
        }
      if (forced) above[a].insert(b);
    }
  return Poset::from_relation(p.labels(), std::move(above));
}

std::size_t count_multichains(const IdealLattice& lattice, std::size_t m) {
  if (m == 0) return 1;
  const std::size_t n = lattice.size();
  std::vector<std::size_t> f(n, 1), g(n);
  for (std::size_t step = 1; step < m; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t s = 0;
      for (std::size_t j = 0; j <= i; ++j)
        if (lattice[j].subset_of(lattice[i])) s += f[j];
      g[i] = s;
    }
    std::swap(f, g);
  }
  std::size_t total = 0;
  for (auto v : f) total += v;
  return total;
}

}  // namespace posetdegen
