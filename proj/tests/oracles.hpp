#pragma once

// Independent reference implementations for the test suite. Nothing here
// calls into the library's enumeration code; the data types are shared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "posetdegen/degeneration.hpp"
#include "posetdegen/exact_lp.hpp"
#include "posetdegen/marked.hpp"
#include "posetdegen/poset.hpp"
#include "posetdegen/relative_structure.hpp"

namespace oracle {

using namespace posetdegen;

// rel[p][q] true iff p < q.
using Relation = std::vector<std::vector<bool>>;

inline Relation relation_of(const Poset& p) {
  Relation r(p.size(), std::vector<bool>(p.size(), false));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) r[a][b] = p.less(a, b);
  return r;
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline Poset poset_of(const Relation& r, std::vector<std::string> labels) {
  std::vector<ElementSet> above(r.size());
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (r[a][b]) above[a].insert(b);
  return Poset::from_relation(std::move(labels), std::move(above));
}

inline void close_transitively(Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
}

inline Poset chain_poset(std::size_t n) {
  Relation r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r[i][j] = true;
  return poset_of(r, default_labels(n));
}

inline Poset antichain_poset(std::size_t n) { return Poset::trivial(default_labels(n)); }

// P_k = {p_{i,j} : i <= k < j <= n}, ordered componentwise.
inline Poset grid_poset(std::size_t k, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = k + 1; j <= n; ++j) {
      cells.emplace_back(i, j);
      labels.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
    }
  Relation r(cells.size(), std::vector<bool>(cells.size(), false));
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      r[a][b] = a != b && cells[a].first <= cells[b].first && cells[a].second <= cells[b].second;
  return poset_of(r, labels);
}

// Permutations of the elements that respect the order.
inline std::size_t brute_linear_extensions(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
        if (p.less(perm[j], perm[i])) ok = false;
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Subsets closed downwards, tested pair by pair.
inline std::vector<ElementSet> brute_ideals(const Poset& p) {
  std::vector<ElementSet> out;
  const std::uint64_t n = p.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    bool ok = true;
    for (std::size_t q = 0; q < n && ok; ++q)
      if ((bits >> q) & 1u)
        for (std::size_t r = 0; r < n && ok; ++r)
          if (p.less(r, q) && !((bits >> r) & 1u)) ok = false;
    if (ok) out.emplace_back(bits);
  }
  return out;
}

// All posets on n elements up to isomorphism, from naturally labelled
// relations deduplicated by their lexicographically least relabelling.
inline std::vector<Poset> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) r[slots[s].first][slots[s].second] = true;
    Relation closed = r;
    close_transitively(closed);
    if (closed != r) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (r[perm[i]][perm[j]] ? 1u : 0u);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(poset_of(r, default_labels(n)));
  }
  return out;
}

inline Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  Relation r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r[i][j] = edge(rng);
  close_transitively(r);
  return poset_of(r, default_labels(n));
}

// Random weak orders: transitive closures of random subsets of the relation,
// keeping those forming a relative structure.
inline std::vector<Poset> sample_weak_orders(const Poset& order, std::size_t count, std::mt19937_64& rng,
                                             ElementSet forbidden_sources = {}) {
  const auto rel = order.relations();
  std::vector<Poset> out;
  std::set<std::vector<IndexPair>> seen;
  auto offer = [&](const Poset& w) {
    if (seen.contains(w.relations())) return;
    if (diagnose_relative_structure(order, w)) return;
    seen.insert(w.relations());
    out.push_back(w);
  };
  offer(Poset::trivial(order.labels()));
  offer(weak_order_excluding(order, forbidden_sources));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t attempt = 0; attempt < 40 * count && out.size() < count; ++attempt) {
    const double keep = u(rng);
    Relation r(order.size(), std::vector<bool>(order.size(), false));
    for (auto [p, q] : rel)
      if (!forbidden_sources.contains(p) && u(rng) < keep) r[p][q] = true;
    close_transitively(r);
    offer(poset_of(r, order.labels()));
  }
  if (out.size() > count) out.resize(count);
  return out;
}

struct CorpusEntry {
  std::string name;
  Poset order;
  Poset weak;
};

// Every poset on 1..max_n elements with every valid weak order.
inline std::vector<CorpusEntry> small_corpus(std::size_t max_n = 5) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t id = 0;
    for (const auto& p : all_posets(n)) {
      std::size_t wid = 0;
      for (const auto& w : weaker_orders(p))
        if (!diagnose_relative_structure(p, w))
          out.push_back({"n" + std::to_string(n) + "#" + std::to_string(id) + "w" + std::to_string(wid++), p, w});
      ++id;
    }
  }
  return out;
}

inline std::vector<CorpusEntry> random_corpus(std::size_t posets, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < posets; ++i) {
    const Poset p = random_poset(n, 0.3, rng);
    std::size_t wid = 0;
    for (const auto& w : sample_weak_orders(p, 3, rng))
      out.push_back({"r" + std::to_string(i) + "w" + std::to_string(wid++), p, w});
  }
  return out;
}

struct MarkedEntry {
  RelativeStructure structure;
  Marking lambda;
};

// Random poset whose extremal elements (and a few more) are marked, a weak
// order with no marked sources, and a dominant marking with values in
// [lo, hi] pushed up along the order.
inline MarkedEntry random_marked_structure(std::size_t n, std::mt19937_64& rng, std::int64_t lo = -1,
                                           std::int64_t hi = 3) {
  const Poset order = random_poset(n, 0.35, rng);
  ElementSet marked = order.minimal() | order.maximal();
  std::bernoulli_distribution extra(0.25);
  for (std::size_t p = 0; p < n; ++p)
    if (extra(rng)) marked.insert(p);
  const auto weaks = sample_weak_orders(order, 4, rng, marked);
  const Poset weak = weaks[std::uniform_int_distribution<std::size_t>(0, weaks.size() - 1)(rng)];

  Marking lambda{marked, std::vector<std::int64_t>(n, 0)};
  std::uniform_int_distribution<std::int64_t> value(lo, hi);
  std::vector<std::size_t> top_down(n);
  std::iota(top_down.begin(), top_down.end(), 0);
  std::sort(top_down.begin(), top_down.end(),
            [&](std::size_t p, std::size_t q) { return order.above(p).count() < order.above(q).count(); });
  for (auto p : top_down) {
    if (!marked.contains(p)) continue;
    std::int64_t v = value(rng);
    for (auto q : order.above(p) & marked) v = std::max(v, lambda.values[q]);
    lambda.values[p] = v;
  }
  return {validate_relative_structure(order, weak, lambda), lambda};
}

inline Marking scaled(const Marking& m, std::int64_t k) {
  Marking out = m;
  for (auto& v : out.values) v *= k;
  return out;
}

// Weyl dimension of the gl_n representation with highest weight
// lambda_j = #{i < l : d_i >= j}.
inline std::size_t weyl_dimension(std::size_t n, const std::vector<std::size_t>& dims) {
  std::vector<long> lambda(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i + 1 < dims.size(); ++i) lambda[j] += dims[i] >= j;
  Rational dim = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      Rational factor(lambda[i] - lambda[j] + static_cast<long>(j - i), static_cast<long>(j - i));
      factor.canonicalize();
      dim *= factor;
    }
  return static_cast<std::size_t>(dim.get_num().get_ui());
}

// Gelfand-Tsetlin patterns with top row lambda, counted row by row.
inline std::size_t gt_patterns(std::size_t n, const std::vector<std::size_t>& dims) {
  std::vector<long> top(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i + 1 < dims.size(); ++i) top[j - 1] += dims[i] >= j;
  std::map<std::vector<long>, std::size_t> rows{{top, 1}};
  for (std::size_t len = n; len > 1; --len) {
    std::map<std::vector<long>, std::size_t> next;
    for (const auto& [row, mult] : rows) {
      std::vector<long> below(len - 1);
      auto fill = [&](auto&& self, std::size_t i) -> void {
        if (i == len - 1) {
          next[below] += mult;
          return;
        }
        for (long v = row[i + 1]; v <= row[i]; ++v) {
          below[i] = v;
          self(self, i + 1);
        }
      };
      fill(fill, 0);
    }
    rows = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& [row, mult] : rows) total += mult;
  return total;
}

// The lift of a part is a regularity certificate: it weakly dominates the
// heights on every vertex (upper hull) with equality exactly on the part.
inline bool lift_certifies(const RelativeStructure& s, const Part& part, const WeightVector& w, Hull hull) {
  std::set<std::uint64_t> members;
  for (auto j : part.sublattice) members.insert(j.bits());
  for (std::size_t i = 0; i < s.lattice().size(); ++i) {
    const Ideal j = s.lattice()[i];
    const Rational g = part.lift(indicator(s.weak().maximal_in(j), s.size()));
    const Rational diff = hull == Hull::upper ? g - w[i] : w[i] - g;
    if (diff < 0) return false;
    if ((diff == 0) != members.contains(j.bits())) return false;
  }
  return true;
}

}  // namespace oracle
