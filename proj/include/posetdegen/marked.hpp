#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "posetdegen/degeneration.hpp"
#include "posetdegen/polytope.hpp"
#include "posetdegen/relative_structure.hpp"

namespace posetdegen {

// lambda + shift·1_{P*} = sum of alpha_K · 1_K over a strictly increasing chain
// of nonempty ideals K of (P*, <).
struct FundamentalDecomposition {
  std::vector<std::pair<Ideal, std::int64_t>> terms;
  std::int64_t shift = 0;

  std::int64_t total() const;  // sum of the alpha_K
  // D(lambda): the chain ∅, the K with alpha_K > 0, and P*.
  std::vector<Ideal> support(ElementSet marked) const;
};

// Throws NotDominant.
FundamentalDecomposition fundamental_decomposition(const Poset& order, const Marking& lambda);

// Ideals J with J ∩ P* in D(lambda), in lattice order.
std::vector<Ideal> marked_lattice(const RelativeStructure& s, const Marking& lambda);

// Vertices 1_{max' J} over J with J ∩ P* = K.
LatticePolytope fundamental_mrpp(const RelativeStructure& s, ElementSet marked, Ideal k);

// Lattice points of R_lambda: sums over multichains J1 ⊆ … ⊆ JS with exactly
// alpha_K members meeting P* in K, shifted back by the decomposition's shift.
std::vector<Point> mrpp_points(const RelativeStructure& s, const Marking& lambda);

// Checks the marking against the structure (condition iii, minmax, dominance).
// Vertex extraction runs exact linear programs and can be skipped.
LatticePolytope build_mrpp(const RelativeStructure& s, const Marking& lambda, bool with_vertices = true);

// The multichain behind a lattice point of R_lambda. Throws NotALatticePoint.
std::vector<Ideal> decompose_mrpp_point(const Point& x, const RelativeStructure& s, const Marking& lambda);

// Quotient of a marked structure by the elements J_lambda cannot separate.
struct StandardizedStructure {
  RelativeStructure quotient;
  Marking mu;
  std::vector<ElementSet> classes;        // class of each element of Q, as a subset of P
  std::vector<std::size_t> coordinate;    // theta(x)_q = x_{coordinate[q]}
  std::vector<Ideal> source;              // J_lambda, in lattice order
  std::vector<Ideal> image;               // pi(J) for each member of `source`

  Point theta(const Point& x) const;
  Ideal project(Ideal j) const;
  Ideal lift(Ideal q) const;
  // Reindex weights on J_lambda to weights on J(Q).
  WeightVector transport(const WeightVector& w) const;
};

StandardizedStructure standardize(const RelativeStructure& s, const Marking& lambda);

struct MarkedPart {
  std::size_t part = 0;           // index into the quotient's subdivision
  Poset order;                    // <_i on Q
  std::vector<Ideal> sublattice;  // J(Q, <_i)
  std::vector<Point> points;      // lattice points of R_mu(Q, <_i, <')
  std::vector<Point> vertices;
};

struct MarkedSubdivision {
  StandardizedStructure standard;
  Subdivision unmarked;
  std::vector<MarkedPart> parts;
};

// w is indexed like marked_lattice(s, lambda).
MarkedSubdivision mrpp_subdivide(const RelativeStructure& s, const Marking& lambda, const WeightVector& w,
                                 Hull hull = Hull::upper, bool with_vertices = true);

// Marked chain-order polytope for the partition C ⊔ O of the unmarked
// elements, built twice: from its defining inequalities and as the MRPP with
// p <' q iff p < q and p not in P* ∪ O. Throws NotAPartition, NotDominant and
// TheoremViolation when the two disagree.
LatticePolytope mcop_build(const Poset& order, const Marking& lambda, ElementSet chain_part, ElementSet order_part);

// Lattice points and vertices of the inequality description alone.
LatticePolytope mcop_from_inequalities(const Poset& order, const Marking& lambda, ElementSet chain_part,
                                       ElementSet order_part);

// First (C, O), in increasing bit order of C, whose MCOP has the target's vertex set.
std::optional<std::pair<ElementSet, ElementSet>> mcop_recognize(const Poset& order, const Marking& lambda,
                                                                const std::vector<Point>& target_vertices);

// A relative poset polytope of Q as the fundamental MRPP of Q plus a new
// bottom and top, marked, with K = {bottom}.
struct FundamentalEmbedding {
  RelativeStructure structure;
  ElementSet marked;
  Ideal k;
  std::vector<std::size_t> coordinates;  // elements of the new poset that carry Q's coordinates
};
FundamentalEmbedding embed_as_fundamental(const RelativeStructure& q);

// The relative poset polytope on P0 = {p : p not below K, not above P* \ K}
// that a fundamental MRPP projects onto.
struct FundamentalCollapse {
  RelativeStructure structure;
  std::vector<std::size_t> coordinates;  // elements of P kept, in order
};
FundamentalCollapse collapse_fundamental(const RelativeStructure& s, ElementSet marked, Ideal k);

// Restrict points to the given coordinates.
std::vector<Point> project_points(const std::vector<Point>& points, const std::vector<std::size_t>& coordinates);

}  // namespace posetdegen
