#pragma once

#include <vector>

namespace hcn {

// A monotone map [m] -> [s], stored as its list of values alpha(0..m).
using Monotone = std::vector<int>;

bool is_monotone(const Monotone& alpha, int codomain);

Monotone identity_map(int m);
// delta^i : [s-1] -> [s], skipping i.
Monotone coface_map(int s, int i);
// sigma^i : [s+1] -> [s], hitting i twice.
Monotone codegeneracy_map(int s, int i);
// beta o alpha
Monotone compose(const Monotone& beta, const Monotone& alpha);

// Every monotone map [p] -> [q].
std::vector<Monotone> all_monotone_maps(int p, int q);

// One elementary simplicial operator: a face d_index or a degeneracy s_index.
struct OperatorStep {
  bool is_face;
  int index;
  bool operator==(const OperatorStep&) const = default;
};

// Factorization alpha = delta o sigma, listed in the order the simplicial
// operators must be applied to an s-simplex to compute alpha^*(x): faces with
// the largest missing index first, then degeneracies at the smallest repeated
// position first. The cosimplicial action alpha_* applies the same steps in
// reverse order (as cofaces/codegeneracies).
std::vector<OperatorStep> operator_steps(const Monotone& alpha, int codomain);

// Apply alpha^* to x using caller-provided face(level, i, x) and
// degen(level, i, x) tables.
template <class Face, class Degen>
int apply_operator(const Monotone& alpha, int codomain, int x, Face&& face, Degen&& degen) {
  int level = codomain;
  for (const OperatorStep& step : operator_steps(alpha, codomain)) {
    if (step.is_face) {
      x = face(level, step.index, x);
      --level;
    } else {
      x = degen(level, step.index, x);
      ++level;
    }
  }
  return x;
}

}  // namespace hcn
