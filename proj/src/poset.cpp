#include "posetdegen/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "posetdegen/errors.hpp"

namespace posetdegen {

namespace {

void check_capacity(std::size_t n) {
  if (n > max_elements)
    throw Error(ErrorCode::size_bound_exceeded,
                "posets are limited to " + std::to_string(max_elements) + " elements");
}

// Warshall closure on the above-sets.
void close_transitively(std::vector<ElementSet>& above) {
  const std::size_t n = above.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (above[i].contains(k)) above[i] |= above[k];
}

bool has_loop(const std::vector<ElementSet>& above) {
  for (std::size_t i = 0; i < above.size(); ++i)
    if (above[i].contains(i)) return true;
  return false;
}

// A directed cycle in the cover graph, as element indices.
std::vector<std::size_t> find_cycle(std::size_t n, const std::vector<IndexPair>& covers) {
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : covers) out[a].push_back(b);
  std::vector<int> state(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    stack.push_back(v);
    for (auto w : out[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[w] == 0 && visit(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v)
    if (state[v] == 0 && visit(v)) break;
  return cycle;
}

std::string describe_cycle(const std::vector<std::string>& labels, const std::vector<std::size_t>& cycle) {
  std::string s;
  for (auto v : cycle) s += labels[v] + " < ";
  if (!cycle.empty()) s += labels[cycle.front()];
  return s;
}

struct RelationHash {
  std::size_t operator()(const std::vector<ElementSet>& rel) const noexcept {
    std::size_t h = 0;
    for (auto s : rel) h = h * 1000003u ^ std::hash<std::uint64_t>{}(s.bits());
    return h;
  }
};

}  // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<ElementSet> above)
    : labels_(std::move(labels)), above_(std::move(above)), below_(labels_.size()) {
  for (std::size_t p = 0; p < above_.size(); ++p)
    for (auto q : above_[p]) below_[q].insert(p);
}

Poset Poset::from_relation(std::vector<std::string> labels, std::vector<ElementSet> above) {
  check_capacity(labels.size());
  if (above.size() != labels.size())
    throw Error(ErrorCode::invalid_structure, "relation size does not match element count");
  const auto universe = ElementSet::full(labels.size());
  for (std::size_t p = 0; p < above.size(); ++p) {
    if (!above[p].subset_of(universe) || above[p].contains(p))
      throw Error(ErrorCode::invalid_structure, "relation is not irreflexive on " + labels[p]);
    for (auto q : above[p])
      if (!above[q].subset_of(above[p]))
        throw Error(ErrorCode::invalid_structure,
                    "relation is not transitive at " + labels[p] + " < " + labels[q]);
  }
  return Poset(std::move(labels), std::move(above));
}

Poset Poset::from_index_covers(std::vector<std::string> labels, const std::vector<IndexPair>& covers) {
  check_capacity(labels.size());
  std::vector<ElementSet> above(labels.size());
  for (auto [a, b] : covers) above[a].insert(b);
  close_transitively(above);
  if (has_loop(above))
    throw Error(ErrorCode::cycle_detected, "cycle: " + describe_cycle(labels, find_cycle(labels.size(), covers)));
  return Poset(std::move(labels), std::move(above));
}

Poset Poset::trivial(std::vector<std::string> labels) {
  check_capacity(labels.size());
  std::vector<ElementSet> above(labels.size());
  return Poset(std::move(labels), std::move(above));
}

std::optional<std::size_t> Poset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t Poset::relation_size() const {
  std::size_t r = 0;
  for (auto s : above_) r += s.count();
  return r;
}

std::vector<IndexPair> Poset::relations() const {
  std::vector<IndexPair> out;
  for (std::size_t p = 0; p < size(); ++p)
    for (auto q : above_[p]) out.emplace_back(p, q);
  return out;
}

std::vector<IndexPair> Poset::covers() const {
  std::vector<IndexPair> out;
  for (std::size_t p = 0; p < size(); ++p) {
    ElementSet composite;
    for (auto m : above_[p]) composite |= above_[m];
    for (auto q : above_[p] - composite) out.emplace_back(p, q);
  }
  return out;
}

ElementSet Poset::minimal() const {
  ElementSet s;
  for (std::size_t p = 0; p < size(); ++p)
    if (below_[p].empty()) s.insert(p);
  return s;
}

ElementSet Poset::maximal() const {
  ElementSet s;
  for (std::size_t p = 0; p < size(); ++p)
    if (above_[p].empty()) s.insert(p);
  return s;
}

bool Poset::is_total() const {
  const std::size_t n = size();
  return relation_size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool Poset::is_ideal(ElementSet s) const {
  for (auto p : s)
    if (!below_[p].subset_of(s)) return false;
  return true;
}

ElementSet Poset::down_closure(ElementSet s) const {
  ElementSet out = s;
  for (auto p : s) out |= below_[p];
  return out;
}

ElementSet Poset::maximal_in(ElementSet s) const {
  ElementSet out;
  for (auto p : s)
    if (!above_[p].intersects(s)) out.insert(p);
  return out;
}

Poset build_poset(const std::vector<std::string>& elements, const std::vector<LabelPair>& covers) {
  check_capacity(elements.size());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorCode::duplicate_label, "duplicate label: " + elements[i]);
  std::vector<IndexPair> pairs;
  pairs.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorCode::unknown_label, "unknown label: " + a);
    if (ib == index.end()) throw Error(ErrorCode::unknown_label, "unknown label: " + b);
    pairs.emplace_back(ia->second, ib->second);
  }
  return Poset::from_index_covers(elements, pairs);
}

std::string format_set(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    out += p.label(v);
    first = false;
  }
  return out + "}";
}

bool is_weaker(const Poset& weaker, const Poset& stronger) {
  if (weaker.size() != stronger.size()) return false;
  for (std::size_t p = 0; p < weaker.size(); ++p)
    if (!weaker.above(p).subset_of(stronger.above(p))) return false;
  return true;
}

Poset drop_relations_from(const Poset& order, ElementSet excluded) {
  std::vector<ElementSet> above(order.size());
  for (std::size_t p = 0; p < order.size(); ++p)
    if (!excluded.contains(p)) above[p] = order.above(p);
  // Dropping every relation out of a set keeps transitivity: if p < q < r kept
  // then p is not excluded, so p < r is kept as well.
  return Poset::from_relation(order.labels(), std::move(above));
}

Poset induced_subposet(const Poset& order, ElementSet keep) {
  const auto members = keep.members();
  std::vector<std::string> labels;
  for (auto p : members) labels.push_back(order.label(p));
  std::vector<ElementSet> above(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (order.less(members[i], members[j])) above[i].insert(j);
  return Poset::from_relation(std::move(labels), std::move(above));
}

std::optional<Poset> add_relation(const Poset& order, std::size_t p, std::size_t q) {
  if (p == q || order.less(q, p)) return std::nullopt;
  std::vector<ElementSet> above(order.size());
  const ElementSet up = order.above(q) | ElementSet::singleton(q);
  const ElementSet down = order.below(p) | ElementSet::singleton(p);
  for (std::size_t a = 0; a < order.size(); ++a) {
    above[a] = order.above(a);
    if (down.contains(a)) above[a] |= up;
  }
  return Poset::from_relation(order.labels(), std::move(above));
}

std::vector<Linearization> linear_extensions(const Poset& p) {
  std::vector<Linearization> out;
  Linearization current;
  current.reserve(p.size());
  const ElementSet all = p.all();
  std::function<void(ElementSet)> extend = [&](ElementSet placed) {
    if (placed == all) {
      out.push_back(current);
      return;
    }
    for (auto v : all - placed) {
      if (!p.below(v).subset_of(placed)) continue;
      current.push_back(v);
      extend(placed | ElementSet::singleton(v));
      current.pop_back();
    }
  };
  extend(ElementSet{});
  return out;
}

std::size_t count_linear_extensions(const Poset& p) {
  // Counting over ideals: e(J) = sum over maximal m of J of e(J - m).
  std::unordered_map<ElementSet, std::size_t> memo;
  std::function<std::size_t(ElementSet)> count = [&](ElementSet j) -> std::size_t {
    if (j.empty()) return 1;
    if (auto it = memo.find(j); it != memo.end()) return it->second;
    std::size_t total = 0;
    for (auto m : p.maximal_in(j)) total += count(j - ElementSet::singleton(m));
    memo.emplace(j, total);
    return total;
  };
  return count(p.all());
}

std::size_t default_size_bound() {
  if (const char* env = std::getenv("POSETDEGEN_SIZE_BOUND")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 7;
}

namespace {

void enforce_bound(const Poset& p, std::optional<std::size_t> bound) {
  const std::size_t b = bound.value_or(default_size_bound());
  if (p.size() > b)
    throw Error(ErrorCode::size_bound_exceeded,
                "poset has " + std::to_string(p.size()) + " elements, enumeration bound is " + std::to_string(b));
}

std::vector<ElementSet> above_sets(const Poset& p) {
  std::vector<ElementSet> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p.above(i);
  return out;
}

}  // namespace

std::vector<Poset> stronger_orders(const Poset& p, std::optional<std::size_t> bound) {
  enforce_bound(p, bound);
  std::unordered_set<std::vector<ElementSet>, RelationHash> seen;
  std::vector<Poset> out;
  std::vector<Poset> stack{p};
  seen.insert(above_sets(p));
  while (!stack.empty()) {
    Poset cur = std::move(stack.back());
    stack.pop_back();
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = 0; b < cur.size(); ++b) {
        if (a == b || cur.comparable(a, b)) continue;
        auto next = add_relation(cur, a, b);
        if (next && seen.insert(above_sets(*next)).second) stack.push_back(std::move(*next));
      }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(), [](const Poset& x, const Poset& y) {
    if (x.relation_size() != y.relation_size()) return x.relation_size() < y.relation_size();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.above(i) != y.above(i)) return x.above(i).bits() < y.above(i).bits();
    return false;
  });
  return out;
}

std::vector<Poset> weaker_orders(const Poset& p, std::optional<std::size_t> bound) {
  enforce_bound(p, bound);
  // Include/exclude each relation of p in turn. A choice is rejected as soon as
  // it would leave included a<b, b<c next to an excluded a<c, so every leaf is
  // transitive.
  const auto rel = p.relations();
  std::vector<ElementSet> above(p.size()), excluded(p.size());
  std::vector<Poset> out;
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == rel.size()) {
      out.push_back(Poset::from_relation(p.labels(), above));
      return;
    }
    const auto [a, c] = rel[i];
    // Option 1: include a < c. Need every decided c < d to have a < d allowed,
    // and every decided b < a to have b < c allowed.
    bool ok = true;
    for (auto d : above[c])
      if (excluded[a].contains(d)) ok = false;
    for (std::size_t b = 0; b < p.size() && ok; ++b)
      if (above[b].contains(a) && excluded[b].contains(c)) ok = false;
    if (ok) {
      above[a].insert(c);
      step(i + 1);
      above[a].erase(c);
    }
    // Option 2: exclude a < c. Not allowed when some decided a < b < c forces it.
    bool forced = false;
    for (auto b : above[a])
      if (above[b].contains(c)) forced = true;
    if (!forced) {
      excluded[a].insert(c);
      step(i + 1);
      excluded[a].erase(c);
    }
  };
  step(0);
  return out;
}

}  // namespace posetdegen
