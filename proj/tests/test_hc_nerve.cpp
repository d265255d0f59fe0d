#include <functional>

#include "doctest.h"
#include "hcnerve/ctilde.hpp"
#include "hcnerve/delta_wbar.hpp"
#include "hcnerve/errors.hpp"
#include "hcnerve/hc_nerve.hpp"
#include "hcnerve/kan.hpp"
#include "hcnerve/wbar.hpp"

using namespace hcn;

namespace {

// Strict descending chains of subsets of [i, j] containing i and j, counted by
// brute force over all bitmasks.
int count_strict_chains(int i, int j) {
  const SubsetMask ends = (1u << i) | (1u << j);
  std::vector<SubsetMask> sets;
  for (SubsetMask m = 0; m < (1u << (j + 1)); ++m)
    if ((m & ends) == ends && (m >> i) << i == m) sets.push_back(m);
  std::function<int(SubsetMask)> below = [&](SubsetMask top) {
    int total = 1;
    for (SubsetMask m : sets)
      if (m != top && (m & top) == m) total += below(m);
    return total;
  };
  int total = 0;
  for (SubsetMask m : sets) total += below(m);
  return total;
}

std::vector<SimplicialGroupoid> instances() {
  return {constant_simplicial(cyclic(2), 4), constant_simplicial(cyclic(3), 4), constant_simplicial(symmetric(3), 3),
          crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 4),
          two_object_groupoid(cyclic(2), 3)};
}

}  // namespace

TEST_CASE("interval posets and C~ slot counts") {
  const std::vector<int> expected{0, 1, 5, 20, 86, 451};
  for (int n = 0; n <= 5; ++n) {
    int oracle = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) oracle += count_strict_chains(i, j);
    CHECK(oracle == expected[n]);
    CHECK(CTilde(n).size() == expected[n]);
  }
  // vertices of hom(i, j) are the subsets: 2^{j-i-1} of them
  const CTilde c(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      int vertices = 0;
      for (const auto& s : c.slots())
        if (s.chain.i == i && s.chain.j == j && s.chain.dim() == 0) ++vertices;
      CHECK(vertices == (1 << (j - i - 1)));
    }
}

TEST_CASE("slot structure") {
  const CTilde c(3);
  for (int s = 0; s < c.size(); ++s) {
    const auto& slot = c.slot(s);
    CHECK(is_valid_chain(slot.chain));
    CHECK(is_strict(slot.chain));
    CHECK(c.find(slot.chain) == s);
    CHECK(slot.generator == (slot.chain.sets.back() == ((1u << slot.chain.i) | (1u << slot.chain.j))));
    CHECK(static_cast<int>(slot.splits.size()) == std::popcount(slot.chain.sets.back()) - 2);
  }
  const Chain degenerate{0, 2, {0b111, 0b111, 0b101}};
  const ChainRef ref = c.reference(degenerate);
  CHECK(ref.dim == 2);
  CHECK(ref.degens == std::vector<int>{0});
  CHECK(c.find(Chain{0, 2, {0b101, 0b111}}) == -1);  // increasing, not a chain
  CHECK_THROWS_AS(c.reference(Chain{0, 2, {0b101, 0b111}}), InvalidArgument);
}

TEST_CASE("pushforward along monotone maps") {
  CHECK(push_forward(coface_map(2, 1), Chain{0, 1, {0b11}}) == Chain{0, 2, {0b101}});
  CHECK(push_forward(identity_map(3), Chain{0, 3, {0b1111, 0b1001}}) == Chain{0, 3, {0b1111, 0b1001}});
  CHECK(push_forward(codegeneracy_map(1, 0), Chain{0, 2, {0b111, 0b101}}) == Chain{0, 1, {0b11, 0b11}});
  // (beta o alpha)_* = beta_* o alpha_* on every nondegenerate chain
  for (int p = 0; p <= 3; ++p) {
    const CTilde shape(p);
    for (int q = 0; q <= 3; ++q)
      for (int r = 0; r <= 3; ++r)
        for (const Monotone& alpha : all_monotone_maps(p, q))
          for (const Monotone& beta : all_monotone_maps(q, r))
            for (const auto& slot : shape.slots())
              CHECK(push_forward(compose(beta, alpha), slot.chain) ==
                    push_forward(beta, push_forward(alpha, slot.chain)));
  }
}

TEST_CASE("union composition and restriction") {
  const Chain outer{1, 3, {0b1110, 0b1010}}, inner{0, 1, {0b11, 0b11}};
  const Chain u = union_compose(outer, inner);
  CHECK(u == Chain{0, 3, {0b1111, 0b1011}});
  CHECK(restrict(u, 1, 3) == outer);
  CHECK(restrict(u, 0, 1) == inner);
}

TEST_CASE("Delta_Wbar homs and generators") {
  const DeltaWbar d(3);
  CHECK(d.factor_dims(0, 3) == std::vector<int>{0, 1, 2});
  CHECK(d.factor_dims(1, 2) == std::vector<int>{1});
  CHECK(d.factor_dims(2, 2).empty());
  CHECK(d.generator(1).dim == 2);
  CHECK(d.generator(3).dim == 0);
  CHECK(d.vertices(0, 3).size() == 1 * 2 * 3);
  const WbarArrow g = d.compose(d.vertices(1, 2).back(), d.vertices(0, 1).back());
  CHECK_THROWS(d.compose(d.generator(2), d.generator(1)));
  CHECK(g.src == 0);
  CHECK(g.tgt == 2);
  CHECK(d.is_valid(g));
  CHECK(d.compose(d.identity(2, g.dim), g) == g);
}

TEST_CASE("Delta_Wbar cofaces and codegeneracies") {
  // the last coface at n = 2 on g_{1,1} is d_1 g_{2,1}
  CHECK(coface_generator(2, 2, 1) == face(DeltaWbar(2).generator(1), 1));
  // sigma_0 sends g_{n+1,1} to the identity at 0
  for (int n = 1; n <= 3; ++n) CHECK(codegeneracy_generator(n, 0, 1) == DeltaWbar(n).identity(0, n));
  CHECK(cosimplicial_identity_problems(4).empty());
}

TEST_CASE("homotopy coherent functors") {
  SUBCASE("constant groups give |H|^n functors") {
    for (int m : {2, 3}) {
      const SimplicialGroupoid g = constant_simplicial(cyclic(m), 4);
      int expected = 1;
      for (int n = 0; n <= 4; ++n, expected *= m) CHECK(enumerate_hc_functors(g, CTilde(n)).size() == static_cast<std::size_t>(expected));
    }
  }
  SUBCASE("low levels count objects and 0-arrows") {
    const SimplicialGroupoid g = two_object_groupoid(cyclic(3), 2);
    CHECK(enumerate_hc_functors(g, CTilde(0)).size() == 2);
    CHECK(enumerate_hc_functors(g, CTilde(1)).size() == static_cast<std::size_t>(g.count(0)));
  }
  SUBCASE("every enumerated functor verifies") {
    const SimplicialGroupoid g = crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 3);
    const CTilde shape(3);
    for (const HCFunctor& f : enumerate_hc_functors(g, shape)) CHECK(verify_hc_functor(g, shape, f).empty());
  }
  SUBCASE("a tampered value is rejected") {
    const SimplicialGroupoid g = constant_simplicial(cyclic(3), 2);
    const CTilde shape(2);
    HCFunctor f = enumerate_hc_functors(g, shape).at(4);
    f.values.back() = (f.values.back() + 1) % 3;
    CHECK_FALSE(verify_hc_functor(g, shape, f).empty());
  }
  SUBCASE("the budget is enforced") {
    EnumerationOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(enumerate_hc_functors(constant_simplicial(cyclic(3), 4), CTilde(4), opts), BudgetExceeded);
  }
}

TEST_CASE("homotopy coherent nerve") {
  SUBCASE("constant C2") {
    const TruncatedSSet n = build_nerve(constant_simplicial(cyclic(2), 4), 4);
    for (int k = 0; k <= 4; ++k) CHECK(n.count(k) == (1 << k));
    CHECK(validate(n).empty());
  }
  SUBCASE("two-object groupoid has two vertices") {
    CHECK(build_nerve(two_object_groupoid(cyclic(2), 3), 3).count(0) == 2);
  }
  SUBCASE("crossed module") {
    const TruncatedSSet n = build_nerve(crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 4), 4);
    CHECK(n.count(2) == 8);
    CHECK(n.count(4) == 1024);
  }
  SUBCASE("valid and Kan for every instance") {
    for (const SimplicialGroupoid& g : instances()) {
      const TruncatedSSet n = build_nerve(g, g.dim_cap());
      CHECK(validate(n).empty());
      CHECK(is_kan(n, 3).ok);
    }
  }
  SUBCASE("constant instances are classical nerves") {
    for (const SimplicialGroupoid& g : {constant_simplicial(symmetric(3), 3), two_object_groupoid(cyclic(2), 3)}) {
      const NerveComplex n = build_nerve_complex(g, 3);
      const ClassicalNerve c = classical_nerve(g, 3);
      CHECK(c.sset.count(1) == g.count(0));
      CHECK(n.sset.count(3) == c.sset.count(3));
    }
  }
}

TEST_CASE("W-bar through the representable functors") {
  SUBCASE("functors and tuples correspond") {
    const SimplicialGroupoid g = constant_simplicial(cyclic(2), 4);
    const RepresentableWbar r = wbar_via_representable(g, 4);
    CHECK(r.sset.count(0) == 1);
    CHECK(r.simplices[2].size() == 4);
    for (const auto& level : r.simplices)
      for (const WbarFunctor& f : level) CHECK(functor_of(tuple_of(f)) == f);
  }
  SUBCASE("agrees with the tuple formulas on every instance") {
    for (const SimplicialGroupoid& g : instances()) {
      const RepresentableWbar r = wbar_via_representable(g, g.dim_cap());
      std::vector<Violation> problems;
      CHECK(check_isomorphism(r.sset, build_wbar(g, g.dim_cap()), r.bijection, &problems));
      CHECK(problems.empty());
    }
  }
  SUBCASE("generator images are the tuple entries") {
    const SimplicialGroupoid g = constant_simplicial(symmetric(3), 3);
    const WBarSimplex x{{0, 0, 0, 0}, {1, 4, 5}};
    const WbarFunctor f = functor_of(x);
    const DeltaWbar d(3);
    for (int k = 1; k <= 3; ++k) CHECK(evaluate_functor(g, f, d.generator(k)) == x.arrows[3 - k]);
  }
}
