#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetdegen/exact_lp.hpp"
#include "posetdegen/flag.hpp"
#include "posetdegen/marked.hpp"

using namespace posetdegen;

namespace {

// a < x < c, b < x, with a, b, c marked.
Poset small_vee() { return build_poset({"a", "b", "x", "c"}, {{"a", "x"}, {"b", "x"}, {"x", "c"}}); }

// Lattice points of the Minkowski sum of fundamental pieces, found by
// testing every point of the bounding box against the hull of vertex sums.
std::vector<Point> minkowski_oracle(const RelativeStructure& s, const Marking& lambda) {
  const auto d = fundamental_decomposition(s.order(), lambda);
  std::vector<Point> sums{Point(s.size(), 0)};
  for (const auto& [k, alpha] : d.terms) {
    const auto piece = fundamental_mrpp(s, lambda.marked, k).points;
    for (std::int64_t copy = 0; copy < alpha; ++copy) {
      std::set<Point> next;
      for (const auto& a : sums)
        for (const auto& b : piece) {
          Point c = a;
          add_to(c, b);
          next.insert(c);
        }
      sums.assign(next.begin(), next.end());
    }
  }
  for (auto& x : sums) add_indicator(x, s.weak().maximal_in(s.order().all()), -d.shift);
  Point lo = sums.front(), hi = sums.front();
  for (const auto& x : sums)
    for (std::size_t i = 0; i < x.size(); ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  std::vector<Point> out;
  Point x = lo;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == x.size()) {
      if (in_convex_hull(sums, x)) out.push_back(x);
      return;
    }
    for (x[i] = lo[i]; x[i] <= hi[i]; ++x[i]) self(self, i + 1);
    x[i] = lo[i];
  };
  walk(walk, 0);
  return out;
}

}  // namespace

TEST_CASE("fundamental decomposition") {
  const Poset p = small_vee();
  const ElementSet marked{0b1011};

  const auto omega = fundamental_decomposition(p, Marking::fundamental(marked, ElementSet{0b0001}, 4));
  REQUIRE(omega.terms.size() == 1);
  CHECK(omega.terms[0] == std::pair<Ideal, std::int64_t>{ElementSet{0b0001}, 1});
  CHECK(omega.shift == 0);

  const auto zero = fundamental_decomposition(p, Marking{marked, {0, 0, 0, 0}});
  CHECK(zero.terms.empty());
  CHECK(zero.support(marked) == std::vector<Ideal>{ElementSet{}, marked});

  const FlagData f = build_flag_poset(4, {0, 1, 3, 4});
  const auto flag = fundamental_decomposition(f.poset, f.lambda);
  REQUIRE(flag.terms.size() == 3);
  ElementSet k;
  for (std::size_t i = 0; i < 3; ++i) {
    k.insert(f.markers[i]);
    CHECK(flag.terms[i] == std::pair<Ideal, std::int64_t>{k, 1});
  }

  CHECK_THROWS_AS(fundamental_decomposition(p, Marking{marked, {0, 0, 0, 1}}), Error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto e = oracle::random_marked_structure(5, rng);
    const auto d = fundamental_decomposition(e.structure.order(), e.lambda);
    std::vector<std::int64_t> total(5, -d.shift);
    for (const auto& [kk, alpha] : d.terms) {
      CHECK(alpha > 0);
      CHECK(kk.subset_of(e.lambda.marked));
      for (auto q : kk) CHECK((e.structure.order().below(q) & e.lambda.marked).subset_of(kk));
      for (auto q : kk) total[q] += alpha;
    }
    for (auto q : e.lambda.marked) CHECK(total[q] == e.lambda[q]);
  }
}

TEST_CASE("fundamental pieces at the extremes") {
  const Poset p = small_vee();
  const ElementSet marked{0b1011};
  const auto s = validate_relative_structure(p, Poset::trivial(p.labels()), Marking{marked, {0, 0, 0, 0}});
  CHECK(fundamental_mrpp(s, marked, ElementSet{}).points == std::vector<Point>{{0, 0, 0, 0}});
  CHECK(fundamental_mrpp(s, marked, marked).points == std::vector<Point>{indicator(p.all(), 4)});

  const auto chain = validate_relative_structure(p, drop_relations_from(p, marked), Marking{marked, {0, 0, 0, 0}});
  CHECK(fundamental_mrpp(chain, marked, marked).points ==
        std::vector<Point>{indicator(chain.weak().maximal_in(p.all()), 4)});

  for (auto k : {ElementSet{0b0001}, ElementSet{0b0011}}) {
    const auto lambda = Marking::fundamental(marked, k, 4);
    CHECK(build_mrpp(s, lambda).points == fundamental_mrpp(s, marked, k).points);
  }
  CHECK(build_mrpp(s, Marking{marked, {0, 0, 0, 0}}).points == std::vector<Point>{{0, 0, 0, 0}});
}

TEST_CASE("marked points against a Minkowski-sum hull") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const auto e = oracle::random_marked_structure(4, rng, -1, 2);
    const auto pts = mrpp_points(e.structure, e.lambda);
    CHECK(pts == minkowski_oracle(e.structure, e.lambda));
    for (const auto& x : pts) {
      for (auto q : e.lambda.marked) CHECK(x[q] == e.lambda[q]);
      const auto chain = decompose_mrpp_point(x, e.structure, e.lambda);
      const auto d = fundamental_decomposition(e.structure.order(), e.lambda);
      Point sum(x.size(), 0);
      for (auto j : chain) add_to(sum, relative_vertex(e.structure.weak(), j));
      add_indicator(sum, e.structure.weak().maximal_in(e.structure.order().all()), -d.shift);
      CHECK(sum == x);
    }
  }
}

TEST_CASE("standardization") {
  const FlagData f = build_flag_poset(4, {0, 2, 4});
  for (auto mode : {FlagMode::gt, FlagMode::fflv}) {
    const auto st = standardize(flag_structure(f, mode), f.lambda);
    CHECK(st.quotient.order() == f.poset);
    CHECK(st.quotient.weak() == flag_structure(f, mode).weak());
    CHECK(st.mu == f.lambda);
    for (std::size_t q = 0; q < st.classes.size(); ++q) CHECK(st.classes[q] == ElementSet::singleton(q));
  }

  std::mt19937_64 rng(13);
  std::size_t proper = 0;
  for (int i = 0; i < 30; ++i) {
    const auto e = oracle::random_marked_structure(6, rng);
    const auto st = standardize(e.structure, e.lambda);
    proper += st.classes.size() < e.structure.size();
    ElementSet seen;
    for (auto c : st.classes) {
      CHECK_FALSE(c.intersects(seen));
      seen |= c;
    }
    CHECK(seen == e.structure.order().all());
    // pi is a lattice isomorphism from J_lambda onto J(Q).
    CHECK(st.image.size() == st.quotient.lattice().size());
    for (std::size_t a = 0; a < st.source.size(); ++a) {
      CHECK(st.lift(st.image[a]) == st.source[a]);
      for (std::size_t b = 0; b < st.source.size(); ++b)
        CHECK(st.source[a].subset_of(st.source[b]) == st.image[a].subset_of(st.image[b]));
    }
    for (std::int64_t m = 1; m <= 2; ++m) {
      const auto pts = mrpp_points(e.structure, oracle::scaled(e.lambda, m));
      std::set<Point> images;
      for (const auto& x : pts) images.insert(st.theta(x));
      CHECK(images.size() == pts.size());
      CHECK(std::vector<Point>(images.begin(), images.end()) == mrpp_points(st.quotient, oracle::scaled(st.mu, m)));
    }
  }
  CHECK(proper > 0);
}

TEST_CASE("fundamental embedding and collapse") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : oracle::all_posets(n))
      for (const auto& w : weaker_orders(p)) {
        if (diagnose_relative_structure(p, w)) continue;
        const auto q = validate_relative_structure(p, w);
        const auto emb = embed_as_fundamental(q);
        for (std::int64_t m = 1; m <= 2; ++m) {
          const auto lambda = oracle::scaled(Marking::fundamental(emb.marked, emb.k, emb.structure.size()), m);
          const auto pts = mrpp_points(emb.structure, lambda);
          const auto proj = project_points(pts, emb.coordinates);
          CHECK(proj.size() == pts.size());
          CHECK(proj == lattice_points(q, static_cast<std::size_t>(m)));
        }
      }

  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto e = oracle::random_marked_structure(5, rng);
    for (auto k : enumerate_ideals(induced_subposet(e.structure.order(), e.lambda.marked))) {
      // Ideals of P* as a subposet, mapped back to element indices.
      const auto members = e.lambda.marked.members();
      ElementSet kk;
      for (auto idx : k) kk.insert(members[idx]);
      const auto col = collapse_fundamental(e.structure, e.lambda.marked, kk);
      const auto pts = fundamental_mrpp(e.structure, e.lambda.marked, kk).points;
      const auto proj = project_points(pts, col.coordinates);
      CHECK(proj.size() == pts.size());
      CHECK(proj == lattice_points(col.structure, 1));
    }
  }
}

TEST_CASE("marked subdivisions") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 15; ++i) {
    const auto e = oracle::random_marked_structure(5, rng);
    const auto lattice = marked_lattice(e.structure, e.lambda);
    const auto flat = mrpp_subdivide(e.structure, e.lambda, WeightVector(lattice.size(), 0));
    REQUIRE(flat.parts.size() == 1);
    CHECK(flat.parts[0].points == mrpp_points(flat.standard.quotient, flat.standard.mu));
  }
}

TEST_CASE("marked chain-order polytopes") {
  const FlagData f = build_flag_poset(4, {0, 1, 2, 4});
  const ElementSet unmarked = f.poset.all() - f.lambda.marked;

  // O = everything: the marked order polytope, i.e. x_p >= x_q for p < q.
  const auto gt = mcop_build(f.poset, f.lambda, ElementSet{}, unmarked);
  CHECK(gt.points == flag_polytope(f, FlagMode::gt).points);
  std::vector<Point> brute;
  Point x(f.poset.size(), 0);
  for (auto p : f.lambda.marked) x[p] = f.lambda[p];
  const auto free = unmarked.members();
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == free.size()) {
      for (auto [a, b] : f.poset.relations())
        if (x[a] < x[b]) return;
      brute.push_back(x);
      return;
    }
    for (x[free[i]] = 0; x[free[i]] <= 3; ++x[free[i]]) self(self, i + 1);
    x[free[i]] = 0;
  };
  walk(walk, 0);
  std::sort(brute.begin(), brute.end());
  CHECK(gt.points == brute);

  const auto fflv = mcop_build(f.poset, f.lambda, unmarked, ElementSet{});
  CHECK(fflv.points == flag_polytope(f, FlagMode::fflv).points);

  CHECK(mcop_recognize(f.poset, f.lambda, gt.vertices) == std::pair{ElementSet{}, unmarked});
  CHECK(mcop_recognize(f.poset, f.lambda, fflv.vertices) == std::pair{unmarked, ElementSet{}});

  CHECK_THROWS_AS(mcop_build(f.poset, f.lambda, unmarked, unmarked), Error);

  // Fundamental markings: vertices are 1_{A(J)} over ideals meeting P* in K.
  const Poset p = small_vee();
  const ElementSet marked{0b1011};
  for (auto k : {ElementSet{}, ElementSet{0b0001}, ElementSet{0b0011}, marked})
    for (auto c : {ElementSet{}, ElementSet{0b0100}}) {
      const ElementSet o = ElementSet{0b0100} - c;
      const auto lambda = Marking::fundamental(marked, k, 4);
      std::set<Point> expect;
      for (auto j : enumerate_ideals(p))
        if ((j & marked) == k) expect.insert(indicator((j & (marked | o)) | (p.maximal_in(j) & c), 4));
      const auto built = mcop_build(p, lambda, c, o);
      CHECK(std::set<Point>(built.vertices.begin(), built.vertices.end()) == expect);
    }
}
