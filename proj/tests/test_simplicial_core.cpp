#include <algorithm>
#include <map>

#include "doctest.h"
#include "hcnerve/errors.hpp"
#include "hcnerve/groupoid.hpp"
#include "hcnerve/hc_nerve.hpp"
#include "hcnerve/kan.hpp"
#include "hcnerve/monotone.hpp"
#include "hcnerve/sset.hpp"
#include "hcnerve/wbar.hpp"

using namespace hcn;

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

SimplexId id_of(const Monotone& beta, int n) {
  const auto maps = all_monotone_maps(static_cast<int>(beta.size()) - 1, n);
  return static_cast<SimplexId>(std::find(maps.begin(), maps.end(), beta) - maps.begin());
}

// Counting form of the Eilenberg-Zilber bijection.
bool ez_counts_match(const TruncatedSSet& s) {
  for (int n = 0; n <= s.dim_cap(); ++n) {
    long long total = 0;
    for (int k = 0; k <= n; ++k) total += binomial(n, k) * static_cast<long long>(nondegenerate(s, n - k).size());
    if (total != s.count(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monotone maps") {
  CHECK(coface_map(2, 1) == Monotone{0, 2});
  CHECK(codegeneracy_map(1, 0) == Monotone{0, 0, 1});
  CHECK(compose(coface_map(2, 0), coface_map(1, 0)) == Monotone{2});
  CHECK_FALSE(is_monotone({1, 0}, 1));
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(all_monotone_maps(p, q).size() == static_cast<std::size_t>(binomial(p + q + 1, p + 1)));
  CHECK_THROWS_AS(operator_steps({1, 0}, 1), InvalidArgument);
}

TEST_CASE("operator factorization agrees with precomposition in the standard simplex") {
  const TruncatedSSet delta = standard_simplex(3, 4);
  for (int m = 0; m <= 3; ++m)
    for (int s = 0; s <= 3; ++s)
      for (const Monotone& alpha : all_monotone_maps(m, s))
        for (const Monotone& beta : all_monotone_maps(s, 3))
          CHECK(delta.apply(alpha, s, id_of(beta, 3)) == id_of(compose(beta, alpha), 3));
}

TEST_CASE("standard simplex is a valid simplicial set") {
  for (int n = 0; n <= 3; ++n) {
    const TruncatedSSet d = standard_simplex(n, 4);
    CHECK(validate(d).empty());
    for (int m = 0; m <= 4; ++m) CHECK(d.count(m) == binomial(n + m + 1, m + 1));
    CHECK(ez_counts_match(d));
    CHECK(nondegenerate(d, n).size() == 1);
  }
}

TEST_CASE("a corrupted face entry is reported with its level and simplex") {
  TruncatedSSet d = standard_simplex(2, 3);
  const SimplexId top = id_of({0, 1, 2}, 2);
  Level& lv = d.mutable_level(2);
  lv.faces[0][top] = lv.faces[1][top];
  const auto problems = validate(d);
  REQUIRE_FALSE(problems.empty());
  const bool named = std::any_of(problems.begin(), problems.end(), [&](const Violation& v) {
    return v.level == 2 && v.simplex == top && v.relation.find("d_0") != std::string::npos;
  });
  CHECK(named);
}

TEST_CASE("out-of-range tables are caught before identities are evaluated") {
  TruncatedSSet d = standard_simplex(1, 2);
  d.mutable_level(1).faces[0][0] = 7;
  const auto problems = validate(d);
  REQUIRE(problems.size() == 1);
  CHECK(problems.front().relation == "d_0 out of range");
  CHECK(problems.front().level == 1);
  CHECK(problems.front().simplex == 0);
}

TEST_CASE("Eilenberg-Zilber decomposition") {
  const TruncatedSSet d = standard_simplex(1, 4);
  const SimplexId v = 1;
  const SimplexId s0v = d.degen(0, 0, v);
  auto e = ez_decompose(d, 1, s0v);
  CHECK(e.word == std::vector<int>{0});
  CHECK(e.base == v);
  CHECK(e.base_level == 0);

  const SimplexId edge = id_of({0, 1}, 1);
  e = ez_decompose(d, 1, edge);
  CHECK(e.word.empty());
  CHECK(e.base == edge);

  // s_0 s_0 v and s_1 s_0 v are the same simplex with one canonical word.
  const SimplexId a = d.degen(1, 0, s0v), b = d.degen(1, 1, s0v);
  CHECK(a == b);
  e = ez_decompose(d, 2, a);
  CHECK(e.word == std::vector<int>{1, 0});
  CHECK(e.base == v);
  CHECK(apply_degeneracy_word(d, e.base_level, e.base, e.word) == a);

  for (int n = 0; n <= 4; ++n)
    for (SimplexId x = 0; x < d.count(n); ++x) {
      const auto ez = ez_decompose(d, n, x);
      CHECK(apply_degeneracy_word(d, ez.base_level, ez.base, ez.word) == x);
      CHECK(std::is_sorted(ez.word.rbegin(), ez.word.rend()));
      CHECK(is_degenerate(d, n, x) == !ez.word.empty());
    }
}

TEST_CASE("degeneracies out of the top level are refused") {
  const TruncatedSSet d = standard_simplex(1, 2);
  CHECK_THROWS_AS(d.degen(2, 0, 0), TruncationError);
}

TEST_CASE("relabelling preserves validity and gives an isomorphism") {
  const TruncatedSSet d = standard_simplex(2, 3);
  std::vector<std::vector<SimplexId>> perm(4);
  for (int n = 0; n <= 3; ++n) {
    for (SimplexId x = 0; x < d.count(n); ++x) perm[n].push_back(d.count(n) - 1 - x);
  }
  const TruncatedSSet p = permute(d, perm);
  CHECK(validate(p).empty());
  CHECK(check_isomorphism(d, p, perm));
  auto wrong = perm;
  std::swap(wrong[1][0], wrong[1][1]);
  std::vector<Violation> problems;
  CHECK_FALSE(check_isomorphism(d, p, wrong, &problems));
  CHECK_FALSE(problems.empty());
}

TEST_CASE("simplicial maps") {
  auto a = std::make_shared<const TruncatedSSet>(standard_simplex(1, 2));
  auto b = std::make_shared<const TruncatedSSet>(standard_simplex(0, 2));
  SimplicialMap collapse{a, b, {}};
  for (int n = 0; n <= 2; ++n) collapse.assignment.emplace_back(a->count(n), 0);
  CHECK(check_simplicial_map(collapse).empty());
  SimplicialMap broken{b, a, {{0}, {0}, {0}}};
  broken.assignment[1][0] = id_of({0, 1}, 1);
  CHECK_FALSE(check_simplicial_map(broken).empty());
}

TEST_CASE("horn fillers") {
  SUBCASE("inner horn in a poset nerve has the composite as filler") {
    const TruncatedSSet d = standard_simplex(2, 2);
    const Horn h = Horn::make(d, 2, 1, {id_of({1, 2}, 2), id_of({0, 1}, 2)});
    const auto filler = find_filler(h);
    REQUIRE(filler.has_value());
    CHECK(*filler == id_of({0, 1, 2}, 2));
  }
  SUBCASE("Lambda^1_0 in Delta^1 is filled") {
    const TruncatedSSet d = standard_simplex(1, 2);
    const Horn h = Horn::make(d, 1, 0, {1});
    const auto filler = find_filler(h);
    REQUIRE(filler.has_value());
    CHECK(d.face(1, 1, *filler) == 1);
  }
  SUBCASE("incompatible faces are rejected when the horn is made") {
    const TruncatedSSet d = standard_simplex(2, 2);
    CHECK_THROWS_AS(Horn::make(d, 2, 1, {id_of({1, 2}, 2), id_of({0, 0}, 2)}), InvalidArgument);
  }
  SUBCASE("Lambda^2_0 with two t-loops in W-bar C2") {
    const WBarComplex w = build_wbar_complex(constant_simplicial(cyclic(2), 4), 4);
    SimplexId t = kNoSimplex;
    for (SimplexId x = 0; x < w.sset.count(1); ++x)
      if (w.simplices[1][x].arrows == std::vector<ArrowId>{1}) t = x;
    REQUIRE(t != kNoSimplex);
    const Horn h = Horn::make(w.sset, 2, 0, {t, t});
    CHECK(find_filler(h).has_value());
  }
}

TEST_CASE("Kan condition") {
  SUBCASE("nerve of a finite group") {
    const ClassicalNerve c = classical_nerve(constant_simplicial(cyclic(3), 4), 4);
    const KanReport r = is_kan(c.sset, 3);
    CHECK(r.ok);
    CHECK(r.horns_checked > 0);
  }
  SUBCASE("nerve of the poset [1] is not Kan") {
    const TruncatedSSet p = poset_nerve({{true, true}, {false, true}}, 3);
    CHECK(validate(p).empty());
    const KanReport r = is_kan(p, 2);
    CHECK_FALSE(r.ok);
    REQUIRE(r.failing.has_value());
    CHECK(r.failing->n == 2);
    CHECK((r.failing->k == 0 || r.failing->k == 2));
  }
  SUBCASE("W-bar C2 through dimension 3") {
    CHECK(is_kan(build_wbar(constant_simplicial(cyclic(2), 4), 4), 3).ok);
  }
  SUBCASE("thread count does not change the answer") {
    const TruncatedSSet p = poset_nerve({{true, true, true}, {false, true, true}, {false, false, true}}, 3);
    const KanReport one = is_kan(p, 3, 1), four = is_kan(p, 3, 4);
    CHECK(one.ok == four.ok);
    CHECK(one.failing->to_string() == four.failing->to_string());
  }
  SUBCASE("depth beyond the cap is refused") {
    CHECK_THROWS(is_kan(standard_simplex(0, 2), 3));
  }
}

TEST_CASE("horn lifting") {
  auto e = std::make_shared<const TruncatedSSet>(standard_simplex(1, 3));
  auto b = std::make_shared<const TruncatedSSet>(standard_simplex(0, 3));
  SimplicialMap identity{e, e, {}};
  SimplicialMap collapse{e, b, {}};
  for (int n = 0; n <= 3; ++n) {
    std::vector<SimplexId> id(e->count(n));
    for (SimplexId x = 0; x < e->count(n); ++x) id[x] = x;
    identity.assignment.push_back(id);
    collapse.assignment.emplace_back(e->count(n), 0);
  }
  CHECK(has_horn_lifting(identity, 2).ok);
  const LiftingReport r = has_horn_lifting(collapse, 2);
  CHECK_FALSE(r.ok);
  CHECK(r.failing.has_value());
}
