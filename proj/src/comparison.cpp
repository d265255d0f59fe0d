#include "hcnerve/comparison.hpp"

#include <unordered_map>

#include "hcnerve/detail/keyed_levels.hpp"
#include "hcnerve/errors.hpp"

namespace hcn {

std::vector<int> phi_vertex(int n, int i, int j, SubsetMask subset) {
  if (!is_valid_chain(Chain{i, j, {subset}}) || j > n) throw InvalidArgument("not an element of P_{i,j}");
  std::vector<int> out;
  // Ascending s = n - t means descending t.
  for (int t = j; t > i; --t) {
    int u = t;
    while (!(subset >> u & 1)) ++u;
    out.push_back(u - t);
  }
  return out;
}

WbarArrow phi(int n, const Chain& c) {
  if (!is_valid_chain(c)) throw InvalidArgument("not a chain");
  WbarArrow a{c.i, c.j, c.dim(), {}};
  if (c.i == c.j) return a;
  a.coords.assign(c.j - c.i, Monotone(c.sets.size()));
  for (std::size_t v = 0; v < c.sets.size(); ++v) {
    const std::vector<int> vertex = phi_vertex(n, c.i, c.j, c.sets[v]);
    for (std::size_t t = 0; t < vertex.size(); ++t) a.coords[t][v] = vertex[t];
  }
  return a;
}

PhiComponent build_phi(const CTilde& shape) {
  PhiComponent out{shape.n(), {}};
  for (const CTilde::Slot& slot : shape.slots()) out.values.push_back(phi(shape.n(), slot.chain));
  return out;
}

namespace {

WbarArrow phi_of_ref(const CTilde& shape, const PhiComponent& p, const ChainRef& ref) {
  if (ref.slot < 0) return DeltaWbar(shape.n()).identity(ref.i, ref.dim);
  WbarArrow a = p.values[ref.slot];
  for (int t : ref.degens) a = degeneracy(a, t);
  return a;
}

std::string chain_name(const Chain& c) {
  std::string s = "hom(" + std::to_string(c.i) + "," + std::to_string(c.j) + ") chain";
  for (SubsetMask m : c.sets) s += " " + std::to_string(m);
  return s;
}

}  // namespace

std::vector<std::string> phi_functor_problems(const CTilde& shape) {
  std::vector<std::string> problems;
  const DeltaWbar cat(shape.n());
  const PhiComponent p = build_phi(shape);
  for (int s = 0; s < shape.size(); ++s) {
    const CTilde::Slot& slot = shape.slot(s);
    const WbarArrow& v = p.values[s];
    if (!cat.is_valid(v)) {
      problems.push_back(chain_name(slot.chain) + ": image is not monotone");
      continue;
    }
    for (int t = 0; t < static_cast<int>(slot.faces.size()); ++t)
      if (!(face(v, t) == p.values[slot.faces[t]]))
        problems.push_back(chain_name(slot.chain) + ": d_" + std::to_string(t) + " does not commute");
    for (const CTilde::Split& split : slot.splits)
      if (!(cat.compose(phi_of_ref(shape, p, split.right), phi_of_ref(shape, p, split.left)) == v))
        problems.push_back(chain_name(slot.chain) + ": composition square fails at " + std::to_string(split.point));
  }
  return problems;
}

std::vector<std::string> naturality_problems(int max_dim) {
  std::vector<std::string> problems;
  std::vector<CTilde> shapes;
  for (int n = 0; n <= max_dim; ++n) shapes.emplace_back(n);
  for (int p = 0; p <= max_dim; ++p)
    for (int q = 0; q <= max_dim; ++q)
      for (const Monotone& alpha : all_monotone_maps(p, q))
        for (const CTilde::Slot& slot : shapes[p].slots()) {
          const WbarArrow lhs = push_forward(alpha, q, phi(p, slot.chain));
          const WbarArrow rhs = phi(q, push_forward(alpha, slot.chain));
          if (!(lhs == rhs)) {
            std::string a;
            for (int v : alpha) a += std::to_string(v);
            problems.push_back("alpha " + a + " into [" + std::to_string(q) + "] on " + chain_name(slot.chain) + ": " +
                               lhs.to_string() + " vs " + rhs.to_string());
          }
        }
  return problems;
}

std::vector<int> iota_vertex(int n, int i, int j) {
  if (!(0 <= i && i <= j && j <= n)) throw InvalidArgument("need 0 <= i <= j <= n");
  const WbarArrow pushed = push_forward(Monotone{i, j}, n, DeltaWbar(1).generator(1));
  if (pushed.src != i || pushed.tgt != j || pushed.dim != 0) throw BuildError("iota moved the endpoints");
  std::vector<int> out;
  for (const Monotone& c : pushed.coords) out.push_back(c[0]);
  return out;
}

std::vector<std::string> iota_lemma_problems(int max_n) {
  std::vector<std::string> problems;
  for (int n = 1; n <= max_n; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        std::vector<int> expected(j - i);
        for (int t = 0; t < j - i; ++t) expected[t] = t;
        if (iota_vertex(n, i, j) != expected)
          problems.push_back("iota(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j) +
                             ") is not (0, 1, ..., j-i-1)");
      }
  return problems;
}

namespace {

// An identity-on-objects functor C~[Delta^n] -> Delta^n_Wbar as its values on
// the dimension-0 slots (the other slots stay empty).
using VertexFunctor = std::vector<WbarArrow>;

WbarArrow vertex_value(const CTilde& shape, const VertexFunctor& f, int i, int j, SubsetMask m) {
  if (i == j) return DeltaWbar(shape.n()).identity(i, 0);
  return f[shape.find(Chain{i, j, {m}})];
}

std::vector<VertexFunctor> enumerate_vertex_functors(const CTilde& shape) {
  const int n = shape.n();
  const DeltaWbar cat(n);
  std::vector<int> vertex_slots;
  for (int s = 0; s < shape.size(); ++s)
    if (shape.slot(s).chain.dim() == 0) vertex_slots.push_back(s);
  std::vector<VertexFunctor> out;
  VertexFunctor f(shape.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == vertex_slots.size()) {
      // Order preservation on every edge I > J of the reversed poset.
      for (const CTilde::Slot& slot : shape.slots()) {
        if (slot.chain.dim() != 1) continue;
        const WbarArrow& a = f[slot.faces[1]];  // d_1 drops J, leaving I
        const WbarArrow& b = f[slot.faces[0]];
        for (std::size_t t = 0; t < a.coords.size(); ++t)
          if (a.coords[t][0] > b.coords[t][0]) return;
      }
      out.push_back(f);
      return;
    }
    const int s = vertex_slots[k];
    const CTilde::Slot& slot = shape.slot(s);
    const Chain& c = slot.chain;
    if (slot.generator) {
      for (const WbarArrow& v : cat.vertices(c.i, c.j)) {
        f[s] = v;
        self(self, k + 1);
      }
      return;
    }
    WbarArrow value;
    bool first = true;
    for (const CTilde::Split& split : slot.splits) {
      const WbarArrow composite =
          cat.compose(vertex_value(shape, f, split.point, c.j, restrict(c, split.point, c.j).sets[0]),
                      vertex_value(shape, f, c.i, split.point, restrict(c, c.i, split.point).sets[0]));
      if (first) value = composite;
      else if (!(composite == value)) return;
      first = false;
    }
    f[s] = value;
    self(self, k + 1);
  };
  rec(rec, 0);
  return out;
}

}  // namespace

UniquenessReport check_uniqueness(int max_n) {
  UniquenessReport report;
  std::vector<CTilde> shapes;
  std::vector<std::vector<VertexFunctor>> candidates;
  for (int n = 0; n <= max_n; ++n) {
    shapes.emplace_back(n);
    candidates.push_back(enumerate_vertex_functors(shapes.back()));
    report.functors.push_back(candidates.back().size());
  }
  std::vector<const VertexFunctor*> chosen(max_n + 1, nullptr);
  std::vector<std::vector<VertexFunctor>> natural;
  auto commutes = [&](int p, int q) {
    for (const Monotone& alpha : all_monotone_maps(p, q))
      for (const CTilde::Slot& slot : shapes[p].slots()) {
        if (slot.chain.dim() != 0) continue;
        const Chain image = push_forward(alpha, slot.chain);
        const WbarArrow lhs = push_forward(alpha, q, (*chosen[p])[shapes[p].find(slot.chain)]);
        const WbarArrow rhs = vertex_value(shapes[q], *chosen[q], image.i, image.j, image.sets[0]);
        if (!(lhs == rhs)) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int n) -> void {
    if (n > max_n) {
      std::vector<VertexFunctor> family;
      for (const VertexFunctor* f : chosen) family.push_back(*f);
      natural.push_back(std::move(family));
      return;
    }
    for (const VertexFunctor& f : candidates[n]) {
      chosen[n] = &f;
      bool ok = true;
      for (int p = 0; p <= n && ok; ++p) ok = commutes(p, n) && commutes(n, p);
      if (ok) self(self, n + 1);
    }
    chosen[n] = nullptr;
  };
  rec(rec, 0);
  report.natural_families = natural.size();
  if (natural.size() == 1) {
    report.only_phi = true;
    for (int n = 0; n <= max_n; ++n) {
      const PhiComponent p = build_phi(shapes[n]);
      for (int s = 0; s < shapes[n].size(); ++s)
        if (shapes[n].slot(s).chain.dim() == 0 && !(natural[0][n][s] == p.values[s])) report.only_phi = false;
    }
  }
  return report;
}

SimplicialMap induced_map(const SimplicialGroupoid& g, std::shared_ptr<const WBarComplex> wbar,
                          std::shared_ptr<const NerveComplex> nerve) {
  const int cap = std::min(wbar->sset.dim_cap(), nerve->sset.dim_cap());
  SimplicialMap map;
  map.source = std::shared_ptr<const TruncatedSSet>(wbar, &wbar->sset);
  map.target = std::shared_ptr<const TruncatedSSet>(nerve, &nerve->sset);
  map.assignment.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    const CTilde& shape = nerve->shapes[n];
    const PhiComponent p = build_phi(shape);
    std::unordered_map<detail::Key, SimplexId, detail::KeyHash> index;
    for (SimplexId id = 0; id < static_cast<SimplexId>(nerve->simplices[n].size()); ++id) {
      const HCFunctor& f = nerve->simplices[n][id];
      detail::Key k = f.objects;
      k.insert(k.end(), f.values.begin(), f.values.end());
      index.emplace(std::move(k), id);
    }
    for (const WBarSimplex& x : wbar->simplices[n]) {
      const WbarFunctor f = functor_of(x);
      detail::Key k = f.objects;
      for (const WbarArrow& a : p.values) k.push_back(evaluate_functor(g, f, a));
      auto it = index.find(k);
      if (it == index.end()) throw BuildError("composite with phi is not a nerve simplex at level " + std::to_string(n));
      map.assignment[n].push_back(it->second);
    }
  }
  return map;
}

Comparison build_comparison(const SimplicialGroupoid& g, int dim_cap, const EnumerationOptions& options) {
  Comparison c;
  c.wbar = std::make_shared<const WBarComplex>(build_wbar_complex(g, dim_cap));
  c.nerve = std::make_shared<const NerveComplex>(build_nerve_complex(g, dim_cap, options));
  c.map = induced_map(g, c.wbar, c.nerve);
  return c;
}

bool is_levelwise_bijective(const SimplicialMap& f) {
  for (int n = 0; n <= f.top_level(); ++n) {
    if (f.source->count(n) != f.target->count(n)) return false;
    std::vector<char> hit(f.target->count(n), 0);
    for (SimplexId y : f.assignment[n]) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
  }
  return true;
}

namespace {

ArrowId to_degree_zero(const SimplicialGroupoid& g, int degree, ArrowId a) {
  for (int m = degree; m > 0; --m) a = g.face(m, 0, a);
  return a;
}

std::unordered_map<detail::Key, SimplexId, detail::KeyHash> classical_index(const ClassicalNerve& c, int n) {
  std::unordered_map<detail::Key, SimplexId, detail::KeyHash> index;
  for (SimplexId id = 0; id < static_cast<SimplexId>(c.keys[n].size()); ++id) index.emplace(c.keys[n][id], id);
  return index;
}

}  // namespace

std::vector<std::vector<SimplexId>> wbar_to_classical(const SimplicialGroupoid& g, const WBarComplex& wbar,
                                                      const ClassicalNerve& classical) {
  std::vector<std::vector<SimplexId>> out;
  for (int n = 0; n <= std::min(wbar.sset.dim_cap(), classical.sset.dim_cap()); ++n) {
    const auto index = classical_index(classical, n);
    out.emplace_back();
    for (const WBarSimplex& x : wbar.simplices[n]) {
      detail::Key k = x.objects;
      for (int a = 1; a <= n; ++a) k.push_back(to_degree_zero(g, n - a, x.arrows[n - a]));
      auto it = index.find(k);
      out.back().push_back(it == index.end() ? kNoSimplex : it->second);
    }
  }
  return out;
}

std::vector<std::vector<SimplexId>> nerve_to_classical(const SimplicialGroupoid& g, const NerveComplex& nerve,
                                                       const ClassicalNerve& classical) {
  (void)g;
  std::vector<std::vector<SimplexId>> out;
  for (int n = 0; n <= std::min(nerve.sset.dim_cap(), classical.sset.dim_cap()); ++n) {
    const auto index = classical_index(classical, n);
    const CTilde& shape = nerve.shapes[n];
    out.emplace_back();
    for (const HCFunctor& f : nerve.simplices[n]) {
      detail::Key k = f.objects;
      for (int a = 1; a <= n; ++a) k.push_back(f.values[shape.find(Chain{a - 1, a, {(3u << (a - 1))}})]);
      auto it = index.find(k);
      out.back().push_back(it == index.end() ? kNoSimplex : it->second);
    }
  }
  return out;
}

}  // namespace hcn
