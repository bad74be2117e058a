#pragma once

#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "posetdegen/polytope.hpp"
#include "posetdegen/rational.hpp"
#include "posetdegen/relative_structure.hpp"

namespace posetdegen {

// One rational value per ideal, indexed by lattice position.
using WeightVector = std::vector<Rational>;

// Which side of the lifted polytope defines the subdivision. The cone
// inequalities w_J1 + w_J2 <= w_{J1∪J2} + w_{J1*'J2} describe upper-hull
// (concave) lifts; `lower` negates the weights first.
enum class Hull { upper, lower };

enum class PresentationKind { hibi, hibili, relative, monomial };

std::string_view to_string(PresentationKind kind);

// X_first X_second - X_rhs.first X_rhs.second, or the bare monomial when rhs
// is empty.
struct Generator {
  Ideal first;
  Ideal second;
  std::optional<std::pair<Ideal, Ideal>> rhs;
};

struct IdealPresentation {
  PresentationKind kind = PresentationKind::relative;
  std::vector<Generator> generators;
};

// Throws KindMismatch when hibili is requested for a structure with <' != <.
IdealPresentation ideal_presentation(const RelativeStructure& s, PresentationKind kind);
// Relative binomials over the incomparable pairs of a star-closed sublattice.
IdealPresentation relative_presentation(std::span<const Ideal> sublattice, const Poset& weak);

// The inequality for an incomparable pair, as lattice positions.
struct ConeInequality {
  std::size_t first, second, join, star;
};

std::vector<ConeInequality> cone_inequalities(const RelativeStructure& s);

// w_join + w_star - w_first - w_second.
Rational slack(const ConeInequality& c, const WeightVector& w);

enum class ConeSide { interior, boundary, outside };

std::string_view to_string(ConeSide side);

struct ConePosition {
  ConeSide side = ConeSide::interior;
  std::vector<IdealPair> tight;
  std::vector<IdealPair> violated;
};

ConePosition cone_position(const RelativeStructure& s, const WeightVector& w, Hull hull = Hull::upper);

// w_J = |P \ J|^2.
WeightVector canonical_interior_weight(const RelativeStructure& s);

// Random integer weights in [-range, range] pushed into the closed cone by
// the smallest integer multiple of the canonical interior weight.
WeightVector sample_cone_weight(std::span<const ConeInequality> inequalities, const WeightVector& canonical,
                                std::mt19937_64& rng, std::int64_t range);

struct AffineFunction {
  std::vector<Rational> normal;
  Rational constant;

  Rational operator()(const Point& x) const;
  bool operator==(const AffineFunction&) const = default;
};

struct Part {
  std::vector<Ideal> sublattice;   // sorted like the ideal lattice
  Poset order;                     // the stronger order with J(P, order) = sublattice
  AffineFunction lift;             // interpolates w on the part's vertices
  std::vector<std::size_t> simplices;  // indices into the linearization list
};

struct Subdivision {
  std::vector<Part> parts;
  std::vector<Linearization> linearizations;
};

// Precomputes linearizations and cone inequalities so that many weights can be
// processed for one structure.
class Subdivider {
 public:
  explicit Subdivider(const RelativeStructure& s);

  const RelativeStructure& structure() const { return s_; }
  const std::vector<ConeInequality>& inequalities() const { return inequalities_; }
  const std::vector<Linearization>& linearizations() const { return linearizations_; }

  // Throws OutsideCone or InternalClosureFailure.
  Subdivision operator()(const WeightVector& w, Hull hull = Hull::upper) const;

 private:
  const RelativeStructure& s_;
  std::vector<ConeInequality> inequalities_;
  std::vector<Linearization> linearizations_;
  std::vector<std::vector<std::size_t>> chain_positions_;
};

Subdivision subdivide(const RelativeStructure& s, const WeightVector& w, Hull hull = Hull::upper);

// Every part of `coarse` is a union of parts of `fine` (same linearization list).
bool is_refinement(const Subdivision& fine, const Subdivision& coarse);

struct Component {
  std::vector<Ideal> sublattice;
  Poset order;
  IdealPresentation presentation;
  std::vector<Ideal> vanishing;  // ideals whose variables vanish on the component
};

std::vector<Component> zhu_components(const RelativeStructure& s, const WeightVector& w, Hull hull = Hull::upper);
std::vector<Component> components_of(const RelativeStructure& s, const Subdivision& sub);

// Degree-m monomials X_J1 … X_Jm with J1 ⊆ … ⊆ Jm.
std::size_t standard_monomial_count(const RelativeStructure& s, std::size_t m);

}  // namespace posetdegen
