#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hcnerve/ctilde.hpp"
#include "hcnerve/delta_wbar.hpp"
#include "hcnerve/groupoid.hpp"
#include "hcnerve/sset.hpp"
#include "hcnerve/wbar.hpp"

namespace hcn {

// An n-simplex of the homotopy coherent nerve: a simplicial functor
// C~[Delta^n] -> G, stored by its object assignment and its value on every
// nondegenerate chain (values[s] for slot s of CTilde(n)).
struct HCFunctor {
  std::vector<int> objects;
  std::vector<ArrowId> values;
  bool operator==(const HCFunctor&) const = default;
};

// Value on any chain, completing degenerate chains by degeneracies of the
// stored values and identity homs by identities.
ArrowId hc_value(const SimplicialGroupoid& g, const HCFunctor& f, const ChainRef& ref);

// Simplicial-map law on every nondegenerate chain and functoriality on every
// split, plus degree and endpoint bookkeeping. Empty iff f is a functor.
std::vector<std::string> verify_hc_functor(const SimplicialGroupoid& g, const CTilde& shape, const HCFunctor& f);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // candidate assignments per level
};

// Every simplicial functor C~[Delta^n] -> G in canonical order, by
// backtracking over intervals of increasing length. Throws BudgetExceeded if
// more than options.budget generator candidates are examined.
std::vector<HCFunctor> enumerate_hc_functors(const SimplicialGroupoid& g, const CTilde& shape,
                                             const EnumerationOptions& options = {});

struct NerveComplex {
  TruncatedSSet sset;
  std::vector<std::vector<HCFunctor>> simplices;
  std::vector<CTilde> shapes;  // shapes[n] = CTilde(n)
};

// Levels 0..dim_cap of N G; faces and degeneracies by precomposition with
// the pushforwards along the cofaces and codegeneracies of Delta.
NerveComplex build_nerve_complex(const SimplicialGroupoid& g, int dim_cap, const EnumerationOptions& options = {});
TruncatedSSet build_nerve(const SimplicialGroupoid& g, int dim_cap, const EnumerationOptions& options = {});

// A simplicial functor Delta^n_Wbar -> G, given by the objects and the
// images f_k of the generators g_{n,k}; f_k has degree n - k.
struct WbarFunctor {
  std::vector<int> objects;
  std::vector<ArrowId> generators;  // generators[k-1] = f_k
  int dim() const { return static_cast<int>(objects.size()) - 1; }
  bool operator==(const WbarFunctor&) const = default;
};

ArrowId evaluate_functor(const SimplicialGroupoid& g, const WbarFunctor& f, const WbarArrow& a);

// The identification of functors with tuples: f_k = g_{n-k}.
WbarFunctor functor_of(const WBarSimplex& x);
WBarSimplex tuple_of(const WbarFunctor& f);

struct RepresentableWbar {
  TruncatedSSet sset;
  std::vector<std::vector<WbarFunctor>> simplices;
  // bijection[n][id] = id of tuple_of(simplex) in build_wbar_complex
  std::vector<std::vector<SimplexId>> bijection;
};

// W-bar G built as the functors Delta^n_Wbar -> G with structure maps by
// precomposition with the cofaces and codegeneracies.
RepresentableWbar wbar_via_representable(const SimplicialGroupoid& g, int dim_cap);

// The ordinary nerve of the category of 0-arrows: strings (a_1..a_n) of
// composable arrows a_k : y_{k-1} -> y_k, enumerated by (y_0, a_1, ..., a_n).
struct ClassicalNerve {
  TruncatedSSet sset;
  std::vector<std::vector<std::vector<int>>> keys;  // objects ++ arrows
};
ClassicalNerve classical_nerve(const SimplicialGroupoid& g, int dim_cap);

}  // namespace hcn
