#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetdegen/marked.hpp"

namespace posetdegen {

// The poset P_d for 0 = d_0 < d_1 < … < d_l = n: the markers
// p~_i = p_{d_{i-1}+1, d_i} together with every P_{d_i}, i < l, where
// P_k = {p_{i,j} : i <= k < j}. p_{i1,j1} <= p_{i2,j2} iff i1 <= i2 and j1 <= j2.
// Elements are labelled "p{i}_{j}" and sorted by (i, j).
struct FlagData {
  std::size_t n = 0;
  std::vector<std::size_t> dims;
  Poset poset;
  std::vector<std::pair<std::size_t, std::size_t>> coords;  // (i, j) per element
  std::vector<std::size_t> markers;                         // element of p~_1, …, p~_l
  Marking lambda;                                           // sum of 1_{K_i}, K_i = {p~_1..p~_i}

  std::optional<std::size_t> element(std::size_t i, std::size_t j) const;
  // Elements of P_k.
  ElementSet grid(std::size_t k) const;
  bool is_grassmannian() const { return dims.size() == 3; }
};

// Throws InvalidDims.
FlagData build_flag_poset(std::size_t n, const std::vector<std::size_t>& dims);

enum class FlagMode { gt, fflv };
enum class PlueckerMode { order, chain, gt, fflv };

std::string_view to_string(FlagMode mode);
std::string_view to_string(PlueckerMode mode);

// gt: trivial weak order; fflv: p <' q iff p < q and p is not a marker.
RelativeStructure flag_structure(const FlagData& f, FlagMode mode);

// Column index of a Plücker coordinate. Increasing for order and gt; for chain
// and fflv the canonical ordering keeps values <= k at their own position and
// fills the remaining positions with the larger values in decreasing order.
// Signs of reordered coordinates are dropped.
using PlueckerIndex = std::vector<std::size_t>;

// Throws ModeDimsMismatch (order/chain need Grassmannian dims) and InvalidIndex.
// The order and chain maps work on the grid P_k alone (markers stripped).
Ideal pluecker_to_ideal(const FlagData& f, PlueckerMode mode, const PlueckerIndex& index);
PlueckerIndex ideal_to_pluecker(const FlagData& f, PlueckerMode mode, Ideal j);

// Every index of the map, grouped by length and sorted.
std::vector<PlueckerIndex> pluecker_indices(const FlagData& f, PlueckerMode mode);

// Reorders an index into the map's canonical form; throws InvalidIndex.
PlueckerIndex canonical_index(const FlagData& f, PlueckerMode mode, PlueckerIndex index);

std::string pluecker_name(const PlueckerIndex& index);

LatticePolytope flag_polytope(const FlagData& f, FlagMode mode, bool with_vertices = false);

struct FlagPartReport {
  std::vector<IndexPair> added_covers;  // covers of the part order missing from <
  std::size_t vertex_count = 0;
  std::size_t lattice_point_count = 0;
  std::vector<std::string> vanishing_variables;
};

struct FlagDegeneration {
  MarkedSubdivision subdivision;
  std::vector<FlagPartReport> parts;
};

// w is indexed like the ideal lattice of P_d.
FlagDegeneration flag_degeneration(const FlagData& f, FlagMode mode, const WeightVector& w, Hull hull = Hull::upper);

}  // namespace posetdegen
