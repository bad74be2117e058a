#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdegen/element_set.hpp"

namespace posetdegen {

using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

// A total order listed from smallest to largest element index.
using Linearization = std::vector<std::size_t>;

// Finite poset with a transitively closed, irreflexive strict order stored as a
// bit matrix. Elements are indexed by their position in labels().
class Poset {
 public:
  Poset() = default;

  // Validates irreflexivity and transitivity of `above`, where above[p] is the
  // set of q with p < q.
  static Poset from_relation(std::vector<std::string> labels, std::vector<ElementSet> above);
  // Transitive closure of the given index pairs; throws CycleDetected.
  static Poset from_index_covers(std::vector<std::string> labels, const std::vector<IndexPair>& covers);
  static Poset trivial(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool less(std::size_t p, std::size_t q) const { return above_[p].contains(q); }
  bool comparable(std::size_t p, std::size_t q) const { return less(p, q) || less(q, p); }
  ElementSet above(std::size_t p) const { return above_[p]; }
  ElementSet below(std::size_t q) const { return below_[q]; }
  ElementSet all() const { return ElementSet::full(size()); }

  std::size_t relation_size() const;
  std::vector<IndexPair> relations() const;
  // Hasse diagram edges (p, q) with q covering p.
  std::vector<IndexPair> covers() const;

  ElementSet minimal() const;
  ElementSet maximal() const;
  bool is_total() const;
  bool is_ideal(ElementSet s) const;
  ElementSet down_closure(ElementSet s) const;
  // Members of s with no strictly larger member in s.
  ElementSet maximal_in(ElementSet s) const;

  bool operator==(const Poset& o) const { return labels_ == o.labels_ && above_ == o.above_; }

 private:
  Poset(std::vector<std::string> labels, std::vector<ElementSet> above);

  std::vector<std::string> labels_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
};

// Label-level constructor: relation = transitive closure of covers.
// Throws DuplicateLabel, UnknownLabel, CycleDetected.
Poset build_poset(const std::vector<std::string>& elements, const std::vector<LabelPair>& covers);

// "{a,b}" in element-index order.
std::string format_set(const Poset& p, ElementSet s);

// `weaker` relation is contained in `stronger` (same element set).
bool is_weaker(const Poset& weaker, const Poset& stronger);

// Restrict `order` to pairs (p, q) with p not in `excluded`.
Poset drop_relations_from(const Poset& order, ElementSet excluded);

// The order induced on `keep`, whose elements are renumbered in index order.
Poset induced_subposet(const Poset& order, ElementSet keep);

// The order whose relation is the transitive closure of `order` plus (p, q).
// Returns nullopt when the extension would create a cycle.
std::optional<Poset> add_relation(const Poset& order, std::size_t p, std::size_t q);

std::vector<Linearization> linear_extensions(const Poset& p);
std::size_t count_linear_extensions(const Poset& p);

// Exhaustive-enumeration guard, overridable via POSETDEGEN_SIZE_BOUND.
std::size_t default_size_bound();

// Every partial order on the same elements whose relation contains that of `p`.
// Throws SizeBoundExceeded when p.size() > bound.
std::vector<Poset> stronger_orders(const Poset& p, std::optional<std::size_t> bound = std::nullopt);

// Every partial order on the same elements whose relation is contained in that of `p`.
std::vector<Poset> weaker_orders(const Poset& p, std::optional<std::size_t> bound = std::nullopt);

}  // namespace posetdegen
