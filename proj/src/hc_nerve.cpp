#include "hcnerve/hc_nerve.hpp"

#include <algorithm>
#include <unordered_map>

#include "hcnerve/detail/keyed_levels.hpp"
#include "hcnerve/errors.hpp"

namespace hcn {

namespace {

ArrowId complete(const SimplicialGroupoid& g, const std::vector<int>& objects, const std::vector<ArrowId>& values,
                 const ChainRef& ref) {
  ArrowId x = ref.slot < 0 ? g.identity(ref.base_dim(), objects[ref.i]) : values[ref.slot];
  int level = ref.base_dim();
  for (int t : ref.degens) x = g.degen(level++, t, x);
  return x;
}

detail::Key encode(const HCFunctor& f) {
  detail::Key k = f.objects;
  k.insert(k.end(), f.values.begin(), f.values.end());
  return k;
}

HCFunctor decode(int n, const detail::Key& k) {
  return {std::vector<int>(k.begin(), k.begin() + n + 1), std::vector<ArrowId>(k.begin() + n + 1, k.end())};
}

}  // namespace

ArrowId hc_value(const SimplicialGroupoid& g, const HCFunctor& f, const ChainRef& ref) {
  return complete(g, f.objects, f.values, ref);
}

std::vector<std::string> verify_hc_functor(const SimplicialGroupoid& g, const CTilde& shape, const HCFunctor& f) {
  std::vector<std::string> problems;
  if (static_cast<int>(f.objects.size()) != shape.n() + 1 || static_cast<int>(f.values.size()) != shape.size())
    return {"functor has the wrong shape"};
  for (int s = 0; s < shape.size(); ++s) {
    const CTilde::Slot& slot = shape.slot(s);
    const Chain& c = slot.chain;
    const int m = c.dim();
    const ArrowId v = f.values[s];
    const std::string where = "chain " + std::to_string(s) + " of hom(" + std::to_string(c.i) + "," +
                              std::to_string(c.j) + ")";
    if (v < 0 || v >= g.count(m) || g.source(m, v) != f.objects[c.i] || g.target(m, v) != f.objects[c.j]) {
      problems.push_back(where + ": value is not an arrow of the right degree and endpoints");
      continue;
    }
    for (int t = 0; t < static_cast<int>(slot.faces.size()); ++t)
      if (g.face(m, t, v) != f.values[slot.faces[t]])
        problems.push_back(where + ": d_" + std::to_string(t) + " does not commute");
    for (const CTilde::Split& split : slot.splits)
      if (g.compose(m, hc_value(g, f, split.right), hc_value(g, f, split.left)) != v)
        problems.push_back(where + ": composition through " + std::to_string(split.point) + " fails");
  }
  return problems;
}

std::vector<HCFunctor> enumerate_hc_functors(const SimplicialGroupoid& g, const CTilde& shape,
                                             const EnumerationOptions& options) {
  const int n = shape.n();
  if (n > g.dim_cap() + 1) throw TruncationError("nerve level needs groupoid degrees above the cap");
  // Arrows of degree m indexed by (source, target, d_0, ..., d_m).
  std::vector<std::unordered_map<detail::Key, std::vector<ArrowId>, detail::KeyHash>> by_boundary(std::max(n, 0));
  for (int m = 0; m < n; ++m)
    for (ArrowId a = 0; a < g.count(m); ++a) {
      detail::Key k{g.source(m, a), g.target(m, a)};
      if (m > 0)
        for (int t = 0; t <= m; ++t) k.push_back(g.face(m, t, a));
      by_boundary[m][std::move(k)].push_back(a);
    }
  static const std::vector<ArrowId> kNone;
  std::vector<HCFunctor> out;
  std::uint64_t spent = 0;
  HCFunctor f;
  f.objects.assign(n + 1, 0);
  f.values.assign(shape.size(), -1);

  auto fits_faces = [&](const CTilde::Slot& slot, ArrowId v) {
    const int m = slot.chain.dim();
    for (int t = 0; t < static_cast<int>(slot.faces.size()); ++t)
      if (g.face(m, t, v) != f.values[slot.faces[t]]) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int s) -> void {
    if (s == shape.size()) {
      out.push_back(f);
      return;
    }
    const CTilde::Slot& slot = shape.slot(s);
    const Chain& c = slot.chain;
    const int m = c.dim();
    if (slot.generator) {
      detail::Key k{f.objects[c.i], f.objects[c.j]};
      for (int face : slot.faces) k.push_back(f.values[face]);
      auto it = by_boundary[m].find(k);
      for (ArrowId v : it == by_boundary[m].end() ? kNone : it->second) {
        if (++spent > options.budget)
          throw BudgetExceeded("nerve level " + std::to_string(n) + " exceeded the budget of " +
                               std::to_string(options.budget) + " candidate assignments");
        f.values[s] = v;
        self(self, s + 1);
      }
      f.values[s] = -1;
      return;
    }
    const CTilde::Split& first = slot.splits.front();
    const ArrowId v = g.compose(m, complete(g, f.objects, f.values, first.right),
                                complete(g, f.objects, f.values, first.left));
    for (std::size_t k = 1; k < slot.splits.size(); ++k) {
      const CTilde::Split& other = slot.splits[k];
      if (g.compose(m, complete(g, f.objects, f.values, other.right), complete(g, f.objects, f.values, other.left)) != v)
        return;
    }
    if (!fits_faces(slot, v)) return;
    f.values[s] = v;
    self(self, s + 1);
    f.values[s] = -1;
  };

  auto objects = [&](auto&& self, int k) -> void {
    if (k > n) {
      dfs(dfs, 0);
      return;
    }
    for (int x = 0; x < g.objects(); ++x) {
      f.objects[k] = x;
      self(self, k + 1);
    }
  };
  objects(objects, 0);

  for (const HCFunctor& h : out)
    if (auto problems = verify_hc_functor(g, shape, h); !problems.empty())
      throw BuildError("enumerated nerve simplex fails verification: " + problems.front());
  return out;
}

NerveComplex build_nerve_complex(const SimplicialGroupoid& g, int dim_cap, const EnumerationOptions& options) {
  if (dim_cap < 0) throw InvalidArgument("negative dimension cap");
  if (g.dim_cap() < dim_cap - 1) throw TruncationError("the nerve needs the groupoid through degree cap - 1");
  NerveComplex out;
  detail::KeyedLevels levels(dim_cap);
  for (int n = 0; n <= dim_cap; ++n) {
    out.shapes.emplace_back(n);
    out.simplices.push_back(enumerate_hc_functors(g, out.shapes.back(), options));
    for (const HCFunctor& f : out.simplices.back()) levels.add(n, encode(f));
  }
  // Precomposition plans: for each slot of the smaller or larger shape, where
  // its image lands.
  std::vector<std::vector<std::vector<int>>> face_plan(dim_cap + 1);
  std::vector<std::vector<std::vector<ChainRef>>> degen_plan(dim_cap + 1);
  for (int n = 1; n <= dim_cap; ++n)
    for (int l = 0; l <= n; ++l) {
      std::vector<int> plan;
      const Monotone delta = coface_map(n, l);
      for (const CTilde::Slot& slot : out.shapes[n - 1].slots()) {
        const int target = out.shapes[n].find(push_forward(delta, slot.chain));
        if (target < 0) throw BuildError("coface image of a strict chain is not strict");
        plan.push_back(target);
      }
      face_plan[n].push_back(std::move(plan));
    }
  for (int n = 0; n < dim_cap; ++n)
    for (int l = 0; l <= n; ++l) {
      std::vector<ChainRef> plan;
      const Monotone sigma = codegeneracy_map(n, l);
      for (const CTilde::Slot& slot : out.shapes[n + 1].slots())
        plan.push_back(out.shapes[n].reference(push_forward(sigma, slot.chain)));
      degen_plan[n].push_back(std::move(plan));
    }
  out.sset = detail::assemble(
      levels,
      [&](int n, int l, const detail::Key& key) {
        const HCFunctor f = decode(n, key);
        HCFunctor d;
        d.objects = f.objects;
        d.objects.erase(d.objects.begin() + l);
        for (int target : face_plan[n][l]) d.values.push_back(f.values[target]);
        return encode(d);
      },
      [&](int n, int l, const detail::Key& key) {
        const HCFunctor f = decode(n, key);
        HCFunctor s;
        s.objects = f.objects;
        s.objects.insert(s.objects.begin() + l, f.objects[l]);
        for (const ChainRef& ref : degen_plan[n][l]) s.values.push_back(hc_value(g, f, ref));
        return encode(s);
      });
  return out;
}

TruncatedSSet build_nerve(const SimplicialGroupoid& g, int dim_cap, const EnumerationOptions& options) {
  return build_nerve_complex(g, dim_cap, options).sset;
}

ArrowId evaluate_functor(const SimplicialGroupoid& g, const WbarFunctor& f, const WbarArrow& a) {
  return evaluate(
      a, f.dim(), f.generators, [&](const Monotone& alpha, int s, ArrowId x) { return g.apply(alpha, s, x); },
      [&](ArrowId x, ArrowId y) { return g.compose(a.dim, x, y); },
      [&](int o, int dim) { return g.identity(dim, f.objects[o]); });
}

WbarFunctor functor_of(const WBarSimplex& x) {
  const int n = x.dim();
  WbarFunctor f{x.objects, std::vector<ArrowId>(n)};
  for (int k = 1; k <= n; ++k) f.generators[k - 1] = x.arrows[n - k];
  return f;
}

WBarSimplex tuple_of(const WbarFunctor& f) {
  const int n = f.dim();
  WBarSimplex x{f.objects, std::vector<ArrowId>(n)};
  for (int j = 0; j < n; ++j) x.arrows[j] = f.generators[n - j - 1];
  return x;
}

namespace {

detail::Key encode(const WbarFunctor& f) {
  detail::Key k = f.objects;
  k.insert(k.end(), f.generators.begin(), f.generators.end());
  return k;
}

WbarFunctor decode_functor(int n, const detail::Key& k) {
  return {std::vector<int>(k.begin(), k.begin() + n + 1), std::vector<ArrowId>(k.begin() + n + 1, k.end())};
}

}  // namespace

RepresentableWbar wbar_via_representable(const SimplicialGroupoid& g, int dim_cap) {
  if (dim_cap < 0) throw InvalidArgument("negative dimension cap");
  if (g.dim_cap() < dim_cap - 1) throw TruncationError("W-bar needs the groupoid through degree cap - 1");
  RepresentableWbar out;
  detail::KeyedLevels levels(dim_cap);
  out.simplices.resize(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    WbarFunctor f{std::vector<int>(n + 1, 0), std::vector<ArrowId>(n, -1)};
    // f_1, f_2, ... in turn; f_k : x_{k-1} -> x_k has degree n - k.
    auto rec = [&](auto&& self, int k) -> void {
      if (k > n) {
        levels.add(n, encode(f));
        out.simplices[n].push_back(f);
        return;
      }
      for (ArrowId a = 0; a < g.count(n - k); ++a) {
        if (g.source(n - k, a) != f.objects[k - 1]) continue;
        f.generators[k - 1] = a;
        f.objects[k] = g.target(n - k, a);
        self(self, k + 1);
      }
    };
    for (int x0 = 0; x0 < g.objects(); ++x0) {
      f.objects[0] = x0;
      rec(rec, 1);
    }
  }
  out.sset = detail::assemble(
      levels,
      [&](int n, int i, const detail::Key& key) {
        const WbarFunctor f = decode_functor(n, key);
        WbarFunctor d;
        d.objects = f.objects;
        d.objects.erase(d.objects.begin() + i);
        for (int j = 1; j <= n - 1; ++j) d.generators.push_back(evaluate_functor(g, f, coface_generator(n, i, j)));
        return encode(d);
      },
      [&](int n, int i, const detail::Key& key) {
        const WbarFunctor f = decode_functor(n, key);
        WbarFunctor s;
        s.objects = f.objects;
        s.objects.insert(s.objects.begin() + i, f.objects[i]);
        for (int j = 1; j <= n + 1; ++j) s.generators.push_back(evaluate_functor(g, f, codegeneracy_generator(n, i, j)));
        return encode(s);
      });

  const WBarComplex tuples = build_wbar_complex(g, dim_cap);
  out.bijection.resize(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    std::unordered_map<detail::Key, SimplexId, detail::KeyHash> index;
    for (SimplexId id = 0; id < static_cast<SimplexId>(tuples.simplices[n].size()); ++id) {
      const WBarSimplex& x = tuples.simplices[n][id];
      detail::Key k = x.objects;
      k.insert(k.end(), x.arrows.begin(), x.arrows.end());
      index.emplace(std::move(k), id);
    }
    for (const WbarFunctor& f : out.simplices[n]) {
      const WBarSimplex x = tuple_of(f);
      detail::Key k = x.objects;
      k.insert(k.end(), x.arrows.begin(), x.arrows.end());
      auto it = index.find(k);
      out.bijection[n].push_back(it == index.end() ? kNoSimplex : it->second);
    }
  }
  return out;
}

ClassicalNerve classical_nerve(const SimplicialGroupoid& g, int dim_cap) {
  detail::KeyedLevels levels(dim_cap);
  ClassicalNerve out;
  out.keys.resize(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    detail::Key k(2 * n + 1, 0);
    auto rec = [&](auto&& self, int a) -> void {
      if (a > n) {
        levels.add(n, k);
        out.keys[n].push_back(k);
        return;
      }
      for (ArrowId e = 0; e < g.count(0); ++e) {
        if (g.source(0, e) != k[a - 1]) continue;
        k[n + a] = e;
        k[a] = g.target(0, e);
        self(self, a + 1);
      }
    };
    for (int y0 = 0; y0 < g.objects(); ++y0) {
      k[0] = y0;
      rec(rec, 1);
    }
  }
  out.sset = detail::assemble(
      levels,
      [&](int n, int i, const detail::Key& key) {
        std::vector<int> ys(key.begin(), key.begin() + n + 1), as(key.begin() + n + 1, key.end());
        ys.erase(ys.begin() + i);
        if (i == 0) as.erase(as.begin());
        else if (i == n) as.pop_back();
        else {
          as[i - 1] = g.compose(0, as[i], as[i - 1]);
          as.erase(as.begin() + i);
        }
        ys.insert(ys.end(), as.begin(), as.end());
        return ys;
      },
      [&](int n, int i, const detail::Key& key) {
        std::vector<int> ys(key.begin(), key.begin() + n + 1), as(key.begin() + n + 1, key.end());
        as.insert(as.begin() + i, g.identity(0, ys[i]));
        ys.insert(ys.begin() + i, ys[i]);
        ys.insert(ys.end(), as.begin(), as.end());
        return ys;
      });
  return out;
}

}  // namespace hcn
