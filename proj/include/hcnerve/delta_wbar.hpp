#pragma once

#include <string>
#include <vector>

#include "hcnerve/errors.hpp"
#include "hcnerve/monotone.hpp"

namespace hcn {

// A dim-simplex of hom(src, tgt) in Delta^n_Wbar = prod over n-tgt <= s < n-src
// of Delta^s. coords[t] is the component [dim] -> [s] for s = n - tgt + t.
struct WbarArrow {
  int src = 0;
  int tgt = 0;
  int dim = 0;
  std::vector<Monotone> coords;

  bool operator==(const WbarArrow&) const = default;
  auto operator<=>(const WbarArrow&) const = default;
  std::string to_string() const;
};

class DeltaWbar {
 public:
  explicit DeltaWbar(int n);

  int n() const { return n_; }
  // Factor dimensions of hom(i, j), ascending.
  std::vector<int> factor_dims(int i, int j) const;
  bool is_valid(const WbarArrow& a) const;

  // g_{n,k} : k-1 -> k, of degree n - k (1 <= k <= n).
  WbarArrow generator(int k) const;
  WbarArrow identity(int object, int dim) const;
  // g o f
  WbarArrow compose(const WbarArrow& g, const WbarArrow& f) const;
  // Every 0-simplex of hom(i, j).
  std::vector<WbarArrow> vertices(int i, int j) const;

 private:
  int n_;
};

// alpha^* of an arrow, alpha : [m] -> [a.dim].
WbarArrow pull_back(const Monotone& alpha, const WbarArrow& a);
inline WbarArrow face(const WbarArrow& a, int t) { return pull_back(coface_map(a.dim, t), a); }
inline WbarArrow degeneracy(const WbarArrow& a, int t) { return pull_back(codegeneracy_map(a.dim, t), a); }

// The value of a simplicial functor out of Delta^n_Wbar on an arrow, given the
// images f_1..f_n of the generators (gens[k-1] = f_k). pull(alpha, s, x)
// computes alpha^* x for x of degree s, compose(g, f) the composite and
// identity(object, dim) the identity at the image of an object.
template <class Arrow, class Pull, class Compose, class Identity>
Arrow evaluate(const WbarArrow& a, int n, const std::vector<Arrow>& gens, Pull&& pull, Compose&& compose,
               Identity&& identity) {
  if (a.src == a.tgt) return identity(a.src, a.dim);
  std::size_t t = 0;
  Arrow acc{};
  bool first = true;
  for (int k = a.tgt; k > a.src; --k, ++t) {
    Arrow term = pull(a.coords[t], n - k, gens[k - 1]);
    acc = first ? term : compose(acc, term);
    first = false;
  }
  return acc;
}

// d-th coface Delta^{n-1}_Wbar -> Delta^n_Wbar on the generator g_{n-1,j}.
WbarArrow coface_generator(int n, int i, int j);
// i-th codegeneracy Delta^{n+1}_Wbar -> Delta^n_Wbar on the generator g_{n+1,j}.
WbarArrow codegeneracy_generator(int n, int i, int j);

// The cofaces and codegeneracies extended to all arrows.
WbarArrow apply_coface(int n, int i, const WbarArrow& a);        // a in Delta^{n-1}_Wbar
WbarArrow apply_codegeneracy(int n, int i, const WbarArrow& a);  // a in Delta^{n+1}_Wbar

// alpha_* : Delta^p_Wbar -> Delta^q_Wbar for alpha : [p] -> [q], built from
// the factorization of alpha into cofaces and codegeneracies.
WbarArrow push_forward(const Monotone& alpha, int q, const WbarArrow& a);

// Cosimplicial identities on every generator of Delta^n_Wbar, n <= max_n.
std::vector<std::string> cosimplicial_identity_problems(int max_n);

}  // namespace hcn
