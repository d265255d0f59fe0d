#include <algorithm>
#include <set>

#include "doctest.h"
#include "hcnerve/errors.hpp"
#include "hcnerve/comparison.hpp"
#include "hcnerve/homology.hpp"
#include "hcnerve/kan.hpp"
#include "hcnerve/wbar.hpp"

using namespace hcn;

namespace {

SimplicialGroupoid xmod_c2() { return crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 4); }

}  // namespace

TEST_CASE("W-bar of a constant group counts H^n") {
  for (int m : {1, 2, 3}) {
    const TruncatedSSet w = build_wbar(constant_simplicial(cyclic(m), 4), 4);
    int expected = 1;
    for (int n = 0; n <= 4; ++n, expected *= m) CHECK(w.count(n) == expected);
  }
}

TEST_CASE("face formulas on 2-simplices of a constant group") {
  const FiniteGroup h = symmetric(3);
  const SimplicialGroupoid g = constant_simplicial(h, 3);
  const ArrowId t = 1;
  CHECK(wbar_face(constant_simplicial(cyclic(2), 3), {{0, 0, 0}, {t, t}}, 1).arrows == std::vector<ArrowId>{0});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const WBarSimplex x{{0, 0, 0}, {a, b}};
      CHECK(wbar_face(g, x, 0).arrows == std::vector<ArrowId>{a});
      CHECK(wbar_face(g, x, 1).arrows == std::vector<ArrowId>{h.mul(a, b)});
      CHECK(wbar_face(g, x, 2).arrows == std::vector<ArrowId>{b});
    }
}

TEST_CASE("degeneracy formulas") {
  const SimplicialGroupoid g = constant_simplicial(cyclic(3), 3);
  const WBarSimplex x{{0, 0}, {2}};
  CHECK(wbar_degeneracy(g, x, 1).arrows == std::vector<ArrowId>{0, 2});
  CHECK(wbar_degeneracy(g, x, 0).arrows == std::vector<ArrowId>{2, 0});
  const WBarSimplex v{{0}, {}};
  CHECK(wbar_degeneracy(g, v, 0).arrows == std::vector<ArrowId>{0});
}

TEST_CASE("mismatched bookkeeping is refused") {
  const SimplicialGroupoid g = two_object_groupoid(cyclic(2), 3);
  const ArrowId a01 = g.hom(0, 0, 1).front();
  // a 1-simplex claims objects (0, 0) but carries an arrow 0 -> 1
  CHECK_THROWS_AS(wbar_face(g, {{0, 0}, {a01}}, 0), BuildError);
}

TEST_CASE("W-bar is a simplicial set for every test instance") {
  for (const SimplicialGroupoid& g :
       {constant_simplicial(cyclic(2), 4), constant_simplicial(cyclic(3), 4), constant_simplicial(symmetric(3), 3),
        xmod_c2(), two_object_groupoid(cyclic(2), 3)}) {
    const TruncatedSSet w = build_wbar(g, g.dim_cap());
    CHECK(validate(w).empty());
    CHECK(is_kan(w, g.dim_cap() - 1).ok);
  }
}

TEST_CASE("W-bar of the crossed module instance") {
  const TruncatedSSet w = build_wbar(xmod_c2(), 4);
  // |W-bar_n| = prod_{j<n} |G_j| = prod 2^{j+1}
  CHECK(w.count(0) == 1);
  CHECK(w.count(1) == 2);
  CHECK(w.count(2) == 8);
  CHECK(w.count(3) == 64);
  CHECK(w.count(4) == 1024);
}

TEST_CASE("W-bar of a constant group is the classical nerve") {
  const SimplicialGroupoid g = constant_simplicial(cyclic(3), 4);
  const WBarComplex w = build_wbar_complex(g, 4);
  const ClassicalNerve c = classical_nerve(g, 4);
  CHECK(check_isomorphism(w.sset, c.sset, wbar_to_classical(g, w, c)));
}

TEST_CASE("total space W") {
  const SimplicialGroupoid g = constant_simplicial(cyclic(2), 4);
  const WTotal w = build_w_total(g, 4);
  for (int n = 0; n <= 4; ++n) CHECK(w.total->count(n) == (2 << n));
  CHECK(validate(*w.total).empty());
  CHECK(check_simplicial_map(w.projection).empty());
  for (int n = 0; n <= 4; ++n) {
    std::set<SimplexId> hit(w.projection.assignment[n].begin(), w.projection.assignment[n].end());
    CHECK(static_cast<int>(hit.size()) == w.base->count(n));
    // orbits of the free order-2 action
    std::set<std::set<SimplexId>> orbits;
    for (SimplexId x = 0; x < w.total->count(n); ++x)
      orbits.insert({x, w.action[n][static_cast<std::size_t>(x) * 2 + 1]});
    CHECK(static_cast<int>(orbits.size()) == (1 << n));
  }
  CHECK(w_structural_problems(w, g).empty());
}

TEST_CASE("principal fibration clauses") {
  FibrationOptions opts;
  opts.lift_up_to = 3;
  SUBCASE("constant C2") {
    const SimplicialGroupoid g = constant_simplicial(cyclic(2), 4);
    const PrincipalFibrationReport r = check_principal_fibration(build_w_total(g, 4), g, opts);
    CHECK(r.freeness.passed);
    CHECK(r.quotient.passed);
    CHECK(r.lifting.passed);
    CHECK(r.contractible.passed);
    CHECK(r.ok());
  }
  SUBCASE("crossed module C2") {
    const SimplicialGroupoid g = xmod_c2();
    const PrincipalFibrationReport r = check_principal_fibration(build_w_total(g, 4), g, opts);
    CHECK_MESSAGE(r.ok(), r.contractible.detail);
  }
  SUBCASE("a corrupted action entry fails freeness") {
    const SimplicialGroupoid g = constant_simplicial(cyclic(2), 4);
    WTotal w = build_w_total(g, 4);
    w.action[2][3 * 2 + 1] = 3;
    const PrincipalFibrationReport r = check_principal_fibration(w, g, opts);
    CHECK_FALSE(r.freeness.passed);
    CHECK(r.freeness.detail.find("level 2") != std::string::npos);
    CHECK_FALSE(r.ok());
  }
}

TEST_CASE("twist convention is pinned") {
  SUBCASE("S3 singles out the chosen convention") {
    const auto passing = passing_twist_conventions(constant_simplicial(symmetric(3), 3), 3);
    REQUIRE(passing.size() == 1);
    CHECK(passing.front() == kWTwist);
    CHECK(kWTwist == TwistConvention::kFirstFaceLeft);
  }
  SUBCASE("the other conventions break W for S3") {
    const SimplicialGroupoid g = constant_simplicial(symmetric(3), 3);
    for (TwistConvention c : {TwistConvention::kFirstFaceRight, TwistConvention::kLastFaceLeft,
                              TwistConvention::kLastFaceRight}) {
      CHECK_FALSE(w_structural_problems(assemble_w_total(g, 3, c), g).empty());
      CHECK_THROWS_AS(build_w_total(g, 3, c), BuildError);
    }
  }
  SUBCASE("abelian groups do not distinguish left from right") {
    const auto passing = passing_twist_conventions(constant_simplicial(cyclic(3), 3), 3);
    CHECK(std::find(passing.begin(), passing.end(), kWTwist) != passing.end());
  }
}

TEST_CASE("W is only built for simplicial groups") {
  CHECK_THROWS(build_w_total(two_object_groupoid(cyclic(2), 3), 3));
}

TEST_CASE("W of S3 is contractible through degree 2") {
  const SimplicialGroupoid g = constant_simplicial(symmetric(3), 3);
  const WTotal w = build_w_total(g, 3);
  const auto h = homology(*w.total, 2);
  CHECK(h[0] == HomologyGroup{0, 1, {}});
  CHECK(h[1].is_zero());
  CHECK(h[2].is_zero());
}
