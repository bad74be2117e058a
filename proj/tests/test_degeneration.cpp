#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetdegen/degeneration.hpp"
#include "posetdegen/polytope.hpp"

using namespace posetdegen;

namespace {

RelativeStructure order_structure(const Poset& p) { return validate_relative_structure(p, Poset::trivial(p.labels())); }

WeightVector zeros(const RelativeStructure& s) { return WeightVector(s.lattice().size(), 0); }

}  // namespace

TEST_CASE("ideal presentations") {
  const auto chain = order_structure(oracle::chain_poset(3));
  for (auto kind : {PresentationKind::hibi, PresentationKind::relative, PresentationKind::monomial})
    CHECK(ideal_presentation(chain, kind).generators.empty());

  const auto anti = order_structure(oracle::antichain_poset(2));
  const auto hibi = ideal_presentation(anti, PresentationKind::hibi);
  REQUIRE(hibi.generators.size() == 1);
  const auto& g = hibi.generators[0];
  CHECK(std::set<std::uint64_t>{g.first.bits(), g.second.bits()} == std::set<std::uint64_t>{1, 2});
  REQUIRE(g.rhs.has_value());
  CHECK(g.rhs->first == ElementSet{0b11});
  CHECK(g.rhs->second.empty());

  CHECK_THROWS_AS(ideal_presentation(order_structure(oracle::grid_poset(2, 4)), PresentationKind::hibili), Error);
  const auto monomial = ideal_presentation(anti, PresentationKind::monomial);
  REQUIRE(monomial.generators.size() == 1);
  CHECK_FALSE(monomial.generators[0].rhs.has_value());
}

TEST_CASE("cone membership") {
  const auto anti = order_structure(oracle::antichain_poset(2));
  CHECK(cone_position(anti, zeros(anti)).side == ConeSide::boundary);
  CHECK(cone_position(anti, canonical_interior_weight(anti)).side == ConeSide::interior);
  CHECK(canonical_interior_weight(anti) == WeightVector{4, 1, 1, 0});
  CHECK(canonical_interior_weight(order_structure(oracle::chain_poset(2))) == WeightVector{4, 1, 0});

  const WeightVector bad{0, 1, 1, 0};
  const auto pos = cone_position(anti, bad);
  CHECK(pos.side == ConeSide::outside);
  CHECK(pos.violated == std::vector<IdealPair>{{1, 2}});
  try {
    subdivide(anti, bad);
    FAIL("expected OutsideCone");
  } catch (const OutsideCone& e) {
    CHECK(e.violations() == std::vector<IdealPair>{{1, 2}});
  }
  CHECK(cone_position(anti, bad, Hull::lower).side == ConeSide::interior);

  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto side = cone_position(s, canonical_interior_weight(s)).side;
    CHECK(side == ConeSide::interior);
  }
}

TEST_CASE("sampled weights land in the closed cone") {
  std::mt19937_64 rng(7);
  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto ineqs = cone_inequalities(s);
    const auto canon = canonical_interior_weight(s);
    for (int i = 0; i < 5; ++i) {
      const auto w = sample_cone_weight(ineqs, canon, rng, 5);
      for (const auto& c : ineqs) CHECK(slack(c, w) >= 0);
    }
  }
}

TEST_CASE("subdivision extremes") {
  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const auto flat = subdivide(s, zeros(s));
    REQUIRE(flat.parts.size() == 1);
    CHECK(flat.parts[0].order == e.order);
    CHECK(flat.parts[0].sublattice == s.lattice().ideals());

    const auto fine = subdivide(s, canonical_interior_weight(s));
    CHECK(fine.parts.size() == oracle::brute_linear_extensions(e.order));
    for (const auto& part : fine.parts) {
      CHECK(part.order.is_total());
      CHECK(part.simplices.size() == 1);
    }
    CHECK(is_refinement(fine, flat));
  }
}

TEST_CASE("parts of random subdivisions") {
  std::mt19937_64 rng(11);
  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    const Subdivider sub(s);
    const auto canon = canonical_interior_weight(s);
    for (int round = 0; round < 4; ++round) {
      const auto w = sample_cone_weight(sub.inequalities(), canon, rng, 3);
      const auto result = sub(w);
      std::size_t simplices = 0;
      for (const auto& part : result.parts) {
        CHECK(is_union_intersection_closed(part.sublattice));
        CHECK(is_star_closed(part.sublattice, e.weak));
        CHECK(has_full_height(part.sublattice, e.order.size()));
        CHECK(is_weaker(e.order, part.order));
        CHECK(oracle::lift_certifies(s, part, w, Hull::upper));
        CHECK(part.simplices.size() == count_linear_extensions(part.order));
        simplices += part.simplices.size();
        auto brute = oracle::brute_ideals(part.order);
        std::sort(brute.begin(), brute.end());
        CHECK(brute == part.sublattice);
      }
      CHECK(simplices == result.linearizations.size());

      // A small push towards the canonical weight refines the subdivision.
      Rational big = 1;
      for (const auto& c : sub.inequalities()) big = std::max(big, Rational(1 + abs(slack(c, w))));
      WeightVector nudged = w;
      for (std::size_t i = 0; i < w.size(); ++i) nudged[i] = w[i] * big * 16 + canon[i];
      CHECK(is_refinement(sub(nudged), result));
      CHECK(sub(nudged).parts.size() == result.linearizations.size());

      WeightVector negated = w;
      for (auto& x : negated) x = -x;
      const auto lower = sub(negated, Hull::lower);
      CHECK(lower.parts.size() == result.parts.size());
      for (std::size_t i = 0; i < lower.parts.size(); ++i)
        CHECK(lower.parts[i].sublattice == result.parts[i].sublattice);
    }
  }
}

TEST_CASE("components") {
  const auto s = order_structure(oracle::grid_poset(2, 4));
  const auto flat = zhu_components(s, zeros(s));
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].vanishing.empty());
  CHECK(flat[0].presentation.generators.size() == ideal_presentation(s, PresentationKind::relative).generators.size());

  const auto fine = zhu_components(s, canonical_interior_weight(s));
  CHECK(fine.size() == 2);
  for (const auto& c : fine) {
    CHECK(c.presentation.generators.empty());
    CHECK(c.sublattice.size() + c.vanishing.size() == s.lattice().size());
    CHECK(c.sublattice.size() == s.size() + 1);
  }
}

TEST_CASE("standard monomials count lattice points") {
  CHECK(standard_monomial_count(order_structure(oracle::chain_poset(2)), 2) == 6);
  CHECK(standard_monomial_count(order_structure(oracle::antichain_poset(2)), 2) == 9);
  for (const auto& e : oracle::small_corpus(4)) {
    const auto s = validate_relative_structure(e.order, e.weak);
    CHECK(standard_monomial_count(s, 1) == s.lattice().size());
    const auto values = ehrhart_values(s, 3);
    for (std::size_t m = 0; m <= 3; ++m) CHECK(standard_monomial_count(s, m) == values[m]);
  }
}
