#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hcnerve/ctilde.hpp"
#include "hcnerve/delta_wbar.hpp"
#include "hcnerve/hc_nerve.hpp"
#include "hcnerve/wbar.hpp"

namespace hcn {

// The vertex phi(I) of hom(i, j) in Delta^n_Wbar, coordinates listed by
// ascending factor dimension: in the factor s = n - t (i < t <= j) the
// coordinate is min{u in I : u >= t} - t.
std::vector<int> phi_vertex(int n, int i, int j, SubsetMask subset);

// phi on any chain of C~[Delta^n], applied vertexwise. Identity homs go to
// identities.
WbarArrow phi(int n, const Chain& c);

struct PhiComponent {
  int n = 0;
  std::vector<WbarArrow> values;  // per slot of CTilde(n)
};

PhiComponent build_phi(const CTilde& shape);

// Validity of every value, compatibility with faces, and the composition
// square on every split.
std::vector<std::string> phi_functor_problems(const CTilde& shape);

// alpha_* phi_p = phi_q alpha_* on every nondegenerate chain, for every
// monotone alpha : [p] -> [q] with p, q <= max_dim.
std::vector<std::string> naturality_problems(int max_dim);

// The unique vertex of hom(0, 1) in Delta^1_Wbar pushed along [1] -> [n],
// 0 |-> i, 1 |-> j; coordinates by ascending factor dimension.
std::vector<int> iota_vertex(int n, int i, int j);
// iota_vertex(n, i, j) == (0, 1, ..., j - i - 1) for 0 <= i <= j <= n <= max_n.
std::vector<std::string> iota_lemma_problems(int max_n);

// Exhaustive search over identity-on-objects simplicial functors
// C~[Delta^n] -> Delta^n_Wbar for n <= max_n. Both sides are nerves of posets
// on each hom, so functors are determined by order-preserving vertex maps
// compatible with composition.
struct UniquenessReport {
  std::vector<std::size_t> functors;  // per n
  std::size_t natural_families = 0;   // families commuting with every alpha_*
  bool only_phi = false;              // exactly one, and it is phi
};
UniquenessReport check_uniqueness(int max_n);

// The map W-bar G -> N G sending a tuple, read as a functor
// Delta^n_Wbar -> G, to its composite with phi_n.
SimplicialMap induced_map(const SimplicialGroupoid& g, std::shared_ptr<const WBarComplex> wbar,
                          std::shared_ptr<const NerveComplex> nerve);

struct Comparison {
  std::shared_ptr<const WBarComplex> wbar;
  std::shared_ptr<const NerveComplex> nerve;
  SimplicialMap map;
};
Comparison build_comparison(const SimplicialGroupoid& g, int dim_cap, const EnumerationOptions& options = {});

bool is_levelwise_bijective(const SimplicialMap& f);

// Identifications with the classical nerve, meaningful for constant G:
// a tuple (g_0..g_{n-1}) goes to the string (g_{n-1}, ..., g_0) and a
// functor F to (F{0,1}, ..., F{n-1,n}). Arrows are brought to degree 0 by d_0.
// Entries are kNoSimplex where the image is not a classical simplex.
std::vector<std::vector<SimplexId>> wbar_to_classical(const SimplicialGroupoid& g, const WBarComplex& wbar,
                                                      const ClassicalNerve& classical);
std::vector<std::vector<SimplexId>> nerve_to_classical(const SimplicialGroupoid& g, const NerveComplex& nerve,
                                                       const ClassicalNerve& classical);

}  // namespace hcn
