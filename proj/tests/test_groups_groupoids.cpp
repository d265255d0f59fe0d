#include "doctest.h"
#include "hcnerve/errors.hpp"
#include "hcnerve/group.hpp"
#include "hcnerve/groupoid.hpp"
#include "hcnerve/homotopy.hpp"
#include "hcnerve/kan.hpp"

using namespace hcn;

TEST_CASE("finite group builders") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(2).table() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(cyclic(5).mul(3, 4) == 2);
  const FiniteGroup s3 = symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(cyclic(4).is_abelian());
  CHECK(product(cyclic(2), cyclic(3)).order() == 6);
  CHECK(product(cyclic(2), cyclic(3)).is_abelian());
  CHECK(group_law_violations(s3.table()).empty());
}

TEST_CASE("symmetric group multiplication matches composition of permutations") {
  for (int m = 1; m <= 4; ++m) {
    const FiniteGroup s = symmetric(m);
    CHECK(permutation_of(m, 0) == [&] {
      std::vector<int> id(m);
      for (int x = 0; x < m; ++x) id[x] = x;
      return id;
    }());
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b) {
        const auto pa = permutation_of(m, a), pb = permutation_of(m, b), pab = permutation_of(m, s.mul(a, b));
        for (int x = 0; x < m; ++x) CHECK(pab[x] == pa[pb[x]]);
      }
  }
}

TEST_CASE("product is componentwise") {
  const FiniteGroup g = cyclic(2), h = symmetric(3), gh = product(g, h);
  for (int a = 0; a < gh.order(); ++a)
    for (int b = 0; b < gh.order(); ++b) {
      const int c = gh.mul(a, b);
      CHECK(c / h.order() == g.mul(a / h.order(), b / h.order()));
      CHECK(c % h.order() == h.mul(a % h.order(), b % h.order()));
    }
}

TEST_CASE("malformed tables and size guards") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidArgument);  // identity is not 0
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(symmetric(6), InvalidArgument);
  CHECK_THROWS_AS(cyclic(0), InvalidArgument);
  CHECK_THROWS_AS(cyclic(kMaxTableSize + 1), InvalidArgument);
}

TEST_CASE("constant simplicial group") {
  const SimplicialGroupoid g = constant_simplicial(cyclic(2), 4);
  CHECK(g.objects() == 1);
  for (int n = 0; n <= 4; ++n) {
    CHECK(g.count(n) == 2);
    for (int i = 0; i <= n && n > 0; ++i)
      for (ArrowId a = 0; a < 2; ++a) CHECK(g.face(n, i, a) == a);
    for (int i = 0; i <= n && n < 4; ++i)
      for (ArrowId a = 0; a < 2; ++a) CHECK(g.degen(n, i, a) == a);
  }
  CHECK(validate_groupoid(g).empty());
}

TEST_CASE("crossed module simplicial group") {
  SUBCASE("trivial C2 by C2") {
    const CrossedModule xm = trivial_crossed_module(cyclic(2), cyclic(2));
    CHECK(xm.violations().empty());
    const SimplicialGroupoid g = crossed_module_simplicial(xm, 4);
    for (int n = 0; n <= 4; ++n) CHECK(g.count(n) == (2 << n));
    CHECK(validate_groupoid(g).empty());
  }
  SUBCASE("faces on G_1 are source and target of the 2-group") {
    // Oracle: in the strict 2-group of (M, P), the arrow (m, p) runs from p to boundary(m) p.
    const CrossedModule xm = identity_crossed_module(symmetric(3));
    CHECK(xm.violations().empty());
    const SimplicialGroupoid g = crossed_module_simplicial(xm, 2);
    CHECK(validate_groupoid(g).empty());
    for (int m = 0; m < 6; ++m)
      for (int p = 0; p < 6; ++p) {
        const ArrowId a = crossed_module_index(xm, {m}, p);
        CHECK(g.face(1, 1, a) == crossed_module_index(xm, {}, p));
        CHECK(g.face(1, 0, a) == crossed_module_index(xm, {}, xm.p.mul(xm.boundary[m], p)));
      }
  }
  SUBCASE("Peiffer violations are reported") {
    // Trivial action with identity boundary fails Peiffer for a nonabelian group.
    CrossedModule xm = identity_crossed_module(symmetric(3));
    for (auto& row : xm.action)
      for (int m = 0; m < static_cast<int>(row.size()); ++m) row[m] = m;
    CHECK_FALSE(xm.violations().empty());
    CHECK_THROWS(crossed_module_simplicial(xm, 2));
  }
}

TEST_CASE("two-object groupoid") {
  const SimplicialGroupoid g = two_object_groupoid(cyclic(2), 3);
  CHECK(g.objects() == 2);
  CHECK(g.hom(0, 0, 1).size() == 2);
  CHECK(g.hom(2, 1, 0).size() == 2);
  CHECK(validate_groupoid(g).empty());
  // Connected: some 0-arrow joins the two objects.
  CHECK_FALSE(g.hom(0, 0, 1).empty());
  const ArrowId f = g.hom(0, 0, 1).front();
  CHECK(g.compose(0, g.inverse(0, f), f) == g.identity(0, 0));
  CHECK_THROWS_AS(g.compose(0, f, f), BuildError);
}

TEST_CASE("hom simplicial sets of simplicial groups are Kan") {
  for (const SimplicialGroupoid& g : {constant_simplicial(symmetric(3), 3),
                                      crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 4),
                                      crossed_module_simplicial(identity_crossed_module(cyclic(3)), 4)}) {
    const TruncatedSSet hom = g.hom_sset(0, 0);
    CHECK(is_kan(hom, hom.dim_cap() - 1).ok);
  }
}

TEST_CASE("groupoid validation catches broken functoriality") {
  SimplicialGroupoid g = crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 2);
  GroupoidLevel& lv = g.mutable_level(1);
  std::swap(lv.faces[0][0], lv.faces[0][1]);
  g.finalize();
  CHECK_FALSE(validate_groupoid(g).empty());
}

TEST_CASE("groupoid functors") {
  const SimplicialGroupoid c2 = constant_simplicial(cyclic(2), 2);
  const SimplicialGroupoid two = two_object_groupoid(cyclic(2), 2);
  GroupoidFunctorData identity{{0}, {{0, 1}, {0, 1}, {0, 1}}};
  CHECK(check_groupoid_functor(identity, c2, c2).empty());
  GroupoidFunctorData trivial{{0}, {{0, 0}, {0, 0}, {0, 0}}};
  CHECK(check_groupoid_functor(trivial, c2, c2).empty());
  GroupoidFunctorData broken{{0}, {{1, 1}, {0, 1}, {0, 1}}};
  CHECK_FALSE(check_groupoid_functor(broken, c2, c2).empty());
  // Inclusion of C2 as the endomorphisms of object 0.
  GroupoidFunctorData include{{0}, {}};
  for (int n = 0; n <= 2; ++n) include.arrows.push_back(two.hom(n, 0, 0));
  CHECK(check_groupoid_functor(include, c2, two).empty());
}
