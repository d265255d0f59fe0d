#include "hcnerve/groupoid.hpp"

#include "hcnerve/errors.hpp"

namespace hcn {

SimplicialGroupoid::SimplicialGroupoid(int objects, int dim_cap, std::string name)
    : objects_(objects), dim_cap_(dim_cap), name_(std::move(name)), levels_(dim_cap + 1) {
  if (objects < 1) throw InvalidArgument("a groupoid needs at least one object");
  if (dim_cap < 0) throw InvalidArgument("negative dimension cap");
}

const GroupoidLevel& SimplicialGroupoid::level(int n) const {
  if (n < 0 || n > dim_cap_)
    throw TruncationError("groupoid level " + std::to_string(n) + " outside 0.." + std::to_string(dim_cap_));
  return levels_[n];
}

GroupoidLevel& SimplicialGroupoid::mutable_level(int n) {
  if (n < 0 || n > dim_cap_)
    throw TruncationError("groupoid level " + std::to_string(n) + " outside 0.." + std::to_string(dim_cap_));
  return levels_[n];
}

void SimplicialGroupoid::finalize() {
  homs_.assign(dim_cap_ + 1, std::vector<std::vector<ArrowId>>(objects_ * objects_));
  for (int n = 0; n <= dim_cap_; ++n) {
    const GroupoidLevel& lv = levels_[n];
    for (ArrowId g = 0; g < lv.count; ++g) homs_[n][lv.source[g] * objects_ + lv.target[g]].push_back(g);
  }
}

ArrowId SimplicialGroupoid::compose(int n, ArrowId g, ArrowId f) const {
  const GroupoidLevel& lv = levels_[n];
  const ArrowId out = lv.composition[static_cast<std::size_t>(g) * lv.count + f];
  if (out < 0)
    throw BuildError("arrows " + std::to_string(g) + " and " + std::to_string(f) + " at degree " +
                     std::to_string(n) + " are not composable");
  return out;
}

ArrowId SimplicialGroupoid::degen(int n, int i, ArrowId g) const {
  if (n >= dim_cap_)
    throw TruncationError("groupoid degeneracy out of degree " + std::to_string(n) + " exceeds cap " +
                          std::to_string(dim_cap_));
  return levels_[n].degens[i][g];
}

ArrowId SimplicialGroupoid::apply(const Monotone& alpha, int codomain, ArrowId g) const {
  return apply_operator(
      alpha, codomain, g, [this](int n, int i, int a) { return face(n, i, a); },
      [this](int n, int i, int a) { return degen(n, i, a); });
}

TruncatedSSet SimplicialGroupoid::arrows() const {
  TruncatedSSet out(dim_cap_);
  for (int n = 0; n <= dim_cap_; ++n) {
    out.reset_level(n, levels_[n].count);
    Level& lv = out.mutable_level(n);
    lv.faces = levels_[n].faces;
    lv.degens = levels_[n].degens;
  }
  return out;
}

TruncatedSSet SimplicialGroupoid::hom_sset(int x, int y) const {
  TruncatedSSet out(dim_cap_);
  std::vector<std::vector<SimplexId>> local(dim_cap_ + 1);
  for (int n = 0; n <= dim_cap_; ++n) {
    local[n].assign(levels_[n].count, kNoSimplex);
    const auto& h = hom(n, x, y);
    for (std::size_t t = 0; t < h.size(); ++t) local[n][h[t]] = static_cast<SimplexId>(t);
    out.reset_level(n, static_cast<std::int32_t>(h.size()));
  }
  for (int n = 0; n <= dim_cap_; ++n) {
    Level& lv = out.mutable_level(n);
    const auto& h = hom(n, x, y);
    for (std::size_t t = 0; t < h.size(); ++t) {
      for (std::size_t i = 0; i < lv.faces.size(); ++i) lv.faces[i][t] = local[n - 1][face(n, i, h[t])];
      for (std::size_t i = 0; i < lv.degens.size(); ++i) lv.degens[i][t] = local[n + 1][degen(n, i, h[t])];
    }
  }
  return out;
}

std::vector<std::string> validate_groupoid(const SimplicialGroupoid& g) {
  std::vector<std::string> out;
  const int obj = g.objects();
  auto at = [](int n, const std::string& what) { return "degree " + std::to_string(n) + ": " + what; };
  for (int n = 0; n <= g.dim_cap(); ++n) {
    const GroupoidLevel& lv = g.level(n);
    const std::size_t c = lv.count;
    if (lv.source.size() != c || lv.target.size() != c || lv.inverse.size() != c ||
        lv.identity.size() != static_cast<std::size_t>(obj) || lv.composition.size() != c * c) {
      out.push_back(at(n, "table shape"));
      return out;
    }
    for (ArrowId a = 0; a < lv.count; ++a)
      if (lv.source[a] < 0 || lv.source[a] >= obj || lv.target[a] < 0 || lv.target[a] >= obj ||
          lv.inverse[a] < 0 || lv.inverse[a] >= lv.count) {
        out.push_back(at(n, "arrow " + std::to_string(a) + " has out-of-range data"));
        return out;
      }
    for (int x = 0; x < obj; ++x) {
      const ArrowId e = lv.identity[x];
      if (e < 0 || e >= lv.count || lv.source[e] != x || lv.target[e] != x) {
        out.push_back(at(n, "identity of object " + std::to_string(x)));
        return out;
      }
    }
    for (ArrowId a = 0; a < lv.count; ++a)
      for (ArrowId b = 0; b < lv.count; ++b) {
        const ArrowId ab = lv.composition[static_cast<std::size_t>(a) * c + b];
        const bool composable = lv.target[b] == lv.source[a];
        if (composable != (ab >= 0) || ab >= lv.count) {
          out.push_back(at(n, "composition domain at (" + std::to_string(a) + "," + std::to_string(b) + ")"));
          return out;
        }
        if (composable && (lv.source[ab] != lv.source[b] || lv.target[ab] != lv.target[a]))
          out.push_back(at(n, "composite endpoints at (" + std::to_string(a) + "," + std::to_string(b) + ")"));
      }
    if (!out.empty()) return out;
    for (ArrowId a = 0; a < lv.count; ++a) {
      if (g.compose(n, a, lv.identity[lv.source[a]]) != a || g.compose(n, lv.identity[lv.target[a]], a) != a)
        out.push_back(at(n, "identity law for arrow " + std::to_string(a)));
      const ArrowId inv = lv.inverse[a];
      if (lv.source[inv] != lv.target[a] || lv.target[inv] != lv.source[a] ||
          g.compose(n, inv, a) != lv.identity[lv.source[a]] || g.compose(n, a, inv) != lv.identity[lv.target[a]])
        out.push_back(at(n, "inverse law for arrow " + std::to_string(a)));
    }
    for (ArrowId f = 0; f < lv.count; ++f)
      for (int y = 0; y < obj; ++y)
        for (ArrowId gg : g.hom(n, lv.target[f], y))
          for (int z = 0; z < obj; ++z)
            for (ArrowId h : g.hom(n, y, z))
              if (g.compose(n, h, g.compose(n, gg, f)) != g.compose(n, g.compose(n, h, gg), f)) {
                out.push_back(at(n, "associativity at (" + std::to_string(h) + "," + std::to_string(gg) + "," +
                                        std::to_string(f) + ")"));
                return out;
              }
    // faces and degeneracies are functors
    auto check_functor = [&](int from, int to, const std::vector<ArrowId>& map, const std::string& name) {
      const GroupoidLevel& tl = g.level(to);
      if (map.size() != c) {
        out.push_back(at(from, name + " table length"));
        return;
      }
      for (ArrowId a = 0; a < lv.count; ++a)
        if (map[a] < 0 || map[a] >= tl.count) {
          out.push_back(at(from, name + " out of range"));
          return;
        }
      for (int x = 0; x < obj; ++x)
        if (map[lv.identity[x]] != tl.identity[x]) out.push_back(at(from, name + " does not preserve identities"));
      for (ArrowId a = 0; a < lv.count; ++a) {
        if (tl.source[map[a]] != lv.source[a] || tl.target[map[a]] != lv.target[a])
          out.push_back(at(from, name + " moves endpoints of arrow " + std::to_string(a)));
        for (int y = 0; y < obj; ++y)
          for (ArrowId b : g.hom(from, y, lv.source[a]))
            if (map[g.compose(from, a, b)] != g.compose(to, map[a], map[b])) {
              out.push_back(at(from, name + " does not preserve composition"));
              return;
            }
      }
    };
    for (std::size_t i = 0; i < lv.faces.size(); ++i) check_functor(n, n - 1, lv.faces[i], "d_" + std::to_string(i));
    for (std::size_t i = 0; i < lv.degens.size(); ++i)
      check_functor(n, n + 1, lv.degens[i], "s_" + std::to_string(i));
    if (lv.faces.size() != static_cast<std::size_t>(n > 0 ? n + 1 : 0) ||
        lv.degens.size() != static_cast<std::size_t>(n < g.dim_cap() ? n + 1 : 0))
      out.push_back(at(n, "wrong number of structure maps"));
  }
  if (!out.empty()) return out;
  for (const auto& v : validate(g.arrows())) out.push_back("arrows: " + v.to_string());
  return out;
}

namespace {

void fill_identities_and_inverses(SimplicialGroupoid& g) {
  for (int n = 0; n <= g.dim_cap(); ++n) {
    GroupoidLevel& lv = g.mutable_level(n);
    lv.inverse.assign(lv.count, -1);
    for (ArrowId a = 0; a < lv.count; ++a) {
      const ArrowId e = lv.identity[lv.source[a]];
      for (ArrowId b = 0; b < lv.count; ++b)
        if (lv.target[a] == lv.source[b] && lv.composition[static_cast<std::size_t>(b) * lv.count + a] == e) {
          lv.inverse[a] = b;
          break;
        }
      if (lv.inverse[a] < 0) throw BuildError("arrow without inverse at degree " + std::to_string(n));
    }
  }
}

void check_level_size(long count) {
  if (count > kMaxTableSize)
    throw InvalidArgument("level of " + std::to_string(count) + " arrows exceeds size guard " +
                          std::to_string(kMaxTableSize));
}

}  // namespace

SimplicialGroupoid constant_simplicial(const FiniteGroup& h, int dim_cap) {
  SimplicialGroupoid g(1, dim_cap, "const(" + h.name() + ")");
  const int order = h.order();
  for (int n = 0; n <= dim_cap; ++n) {
    GroupoidLevel& lv = g.mutable_level(n);
    lv.count = order;
    lv.source.assign(order, 0);
    lv.target.assign(order, 0);
    lv.identity = {FiniteGroup::kIdentity};
    lv.composition.resize(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) lv.composition[static_cast<std::size_t>(a) * order + b] = h.mul(a, b);
    lv.inverse = h.inverses();
    std::vector<ArrowId> ident(order);
    for (int a = 0; a < order; ++a) ident[a] = a;
    lv.faces.assign(n > 0 ? n + 1 : 0, ident);
    lv.degens.assign(n < dim_cap ? n + 1 : 0, ident);
  }
  g.finalize();
  return g;
}

std::vector<std::string> CrossedModule::violations() const {
  std::vector<std::string> out;
  const int om = m.order();
  const int op = p.order();
  if (static_cast<int>(boundary.size()) != om) return {"boundary table has wrong length"};
  if (static_cast<int>(action.size()) != op) return {"action table has wrong shape"};
  for (const auto& row : action)
    if (static_cast<int>(row.size()) != om) return {"action table has wrong shape"};
  for (int a = 0; a < om; ++a)
    if (boundary[a] < 0 || boundary[a] >= op) return {"boundary value out of range"};
  for (int x = 0; x < op; ++x)
    for (int a = 0; a < om; ++a)
      if (action[x][a] < 0 || action[x][a] >= om) return {"action value out of range"};
  for (int a = 0; a < om; ++a)
    for (int b = 0; b < om; ++b)
      if (boundary[m.mul(a, b)] != p.mul(boundary[a], boundary[b])) {
        out.push_back("boundary is not a homomorphism");
        return out;
      }
  for (int a = 0; a < om; ++a)
    if (action[FiniteGroup::kIdentity][a] != a) out.push_back("identity does not act trivially");
  for (int x = 0; x < op; ++x)
    for (int y = 0; y < op; ++y)
      for (int a = 0; a < om; ++a)
        if (action[p.mul(x, y)][a] != action[x][action[y][a]]) {
          out.push_back("action is not a left action");
          return out;
        }
  for (int x = 0; x < op; ++x)
    for (int a = 0; a < om; ++a)
      for (int b = 0; b < om; ++b)
        if (action[x][m.mul(a, b)] != m.mul(action[x][a], action[x][b])) {
          out.push_back("action is not by automorphisms");
          return out;
        }
  for (int x = 0; x < op; ++x)
    for (int a = 0; a < om; ++a)
      if (boundary[action[x][a]] != p.mul(p.mul(x, boundary[a]), p.inv(x))) {
        out.push_back("boundary is not equivariant");
        return out;
      }
  for (int a = 0; a < om; ++a)
    for (int b = 0; b < om; ++b)
      if (action[boundary[a]][b] != m.mul(m.mul(a, b), m.inv(a))) {
        out.push_back("Peiffer identity fails");
        return out;
      }
  return out;
}

CrossedModule trivial_crossed_module(const FiniteGroup& m, const FiniteGroup& p) {
  CrossedModule xm{m, p, std::vector<int>(m.order(), FiniteGroup::kIdentity), {}};
  for (int x = 0; x < p.order(); ++x) {
    std::vector<int> row(m.order());
    for (int a = 0; a < m.order(); ++a) row[a] = a;
    xm.action.push_back(std::move(row));
  }
  return xm;
}

CrossedModule identity_crossed_module(const FiniteGroup& g) {
  CrossedModule xm{g, g, {}, {}};
  for (int a = 0; a < g.order(); ++a) xm.boundary.push_back(a);
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> row(g.order());
    for (int a = 0; a < g.order(); ++a) row[a] = g.mul(g.mul(x, a), g.inv(x));
    xm.action.push_back(std::move(row));
  }
  return xm;
}

ArrowId crossed_module_index(const CrossedModule& xm, const std::vector<int>& ms, int p) {
  long idx = 0;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) idx = idx * xm.m.order() + *it;
  return static_cast<ArrowId>(idx * xm.p.order() + p);
}

namespace {

struct XmString {
  std::vector<int> ms;  // m_1..m_n
  int p;
};

XmString decode_string(const CrossedModule& xm, int n, ArrowId idx) {
  XmString s{std::vector<int>(n), idx % xm.p.order()};
  long rest = idx / xm.p.order();
  for (int k = 0; k < n; ++k) {
    s.ms[k] = static_cast<int>(rest % xm.m.order());
    rest /= xm.m.order();
  }
  return s;
}

}  // namespace

SimplicialGroupoid crossed_module_simplicial(const CrossedModule& xm, int dim_cap) {
  auto problems = xm.violations();
  if (!problems.empty()) throw InvalidArgument("invalid crossed module: " + problems.front());
  const FiniteGroup& m = xm.m;
  const FiniteGroup& p = xm.p;
  SimplicialGroupoid g(1, dim_cap, "xmod(" + m.name() + "," + p.name() + ")");
  long size = p.order();
  for (int n = 0; n <= dim_cap; ++n) {
    if (n > 0) size *= m.order();
    check_level_size(size);
    const int count = static_cast<int>(size);
    GroupoidLevel& lv = g.mutable_level(n);
    lv.count = count;
    lv.source.assign(count, 0);
    lv.target.assign(count, 0);
    lv.identity = {0};
    lv.composition.resize(static_cast<std::size_t>(count) * count);
    std::vector<XmString> strings;
    for (ArrowId a = 0; a < count; ++a) strings.push_back(decode_string(xm, n, a));
    // componentwise product of the arrow strings in the group M x| P
    for (ArrowId a = 0; a < count; ++a)
      for (ArrowId b = 0; b < count; ++b) {
        const XmString& u = strings[a];
        const XmString& v = strings[b];
        std::vector<int> ms(n);
        int c = u.p;
        for (int k = 0; k < n; ++k) {
          ms[k] = m.mul(u.ms[k], xm.action[c][v.ms[k]]);
          c = p.mul(xm.boundary[u.ms[k]], c);
        }
        lv.composition[static_cast<std::size_t>(a) * count + b] = crossed_module_index(xm, ms, p.mul(u.p, v.p));
      }
    lv.faces.assign(n > 0 ? n + 1 : 0, std::vector<ArrowId>(count));
    lv.degens.assign(n < dim_cap ? n + 1 : 0, std::vector<ArrowId>(count));
    for (ArrowId a = 0; a < count; ++a) {
      const XmString& s = strings[a];
      if (n > 0) {
        // d_0 drops the first arrow, d_n the last, d_i composes arrows i and i+1
        lv.faces[0][a] = crossed_module_index(xm, {s.ms.begin() + 1, s.ms.end()}, p.mul(xm.boundary[s.ms[0]], s.p));
        for (int i = 1; i < n; ++i) {
          std::vector<int> ms = s.ms;
          ms[i - 1] = m.mul(s.ms[i], s.ms[i - 1]);
          ms.erase(ms.begin() + i);
          lv.faces[i][a] = crossed_module_index(xm, ms, s.p);
        }
        lv.faces[n][a] = crossed_module_index(xm, {s.ms.begin(), s.ms.end() - 1}, s.p);
      }
      if (n < dim_cap)
        for (int i = 0; i <= n; ++i) {
          std::vector<int> ms = s.ms;
          ms.insert(ms.begin() + i, FiniteGroup::kIdentity);
          lv.degens[i][a] = crossed_module_index(xm, ms, s.p);
        }
    }
  }
  fill_identities_and_inverses(g);
  g.finalize();
  return g;
}

SimplicialGroupoid two_object_groupoid(const FiniteGroup& h, int dim_cap) {
  SimplicialGroupoid g(2, dim_cap, "two-object(" + h.name() + ")");
  const int order = h.order();
  const int count = 4 * order;
  check_level_size(count);
  // arrow (x, y, a) : x -> y has index (2x + y) * |H| + a
  auto index = [order](int x, int y, int a) { return (2 * x + y) * order + a; };
  for (int n = 0; n <= dim_cap; ++n) {
    GroupoidLevel& lv = g.mutable_level(n);
    lv.count = count;
    lv.source.resize(count);
    lv.target.resize(count);
    lv.composition.assign(static_cast<std::size_t>(count) * count, -1);
    lv.identity = {index(0, 0, 0), index(1, 1, 0)};
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int a = 0; a < order; ++a) {
          lv.source[index(x, y, a)] = x;
          lv.target[index(x, y, a)] = y;
          for (int z = 0; z < 2; ++z)
            for (int b = 0; b < order; ++b)
              lv.composition[static_cast<std::size_t>(index(y, z, b)) * count + index(x, y, a)] =
                  index(x, z, h.mul(b, a));
        }
    std::vector<ArrowId> ident(count);
    for (int a = 0; a < count; ++a) ident[a] = a;
    lv.faces.assign(n > 0 ? n + 1 : 0, ident);
    lv.degens.assign(n < dim_cap ? n + 1 : 0, ident);
  }
  fill_identities_and_inverses(g);
  g.finalize();
  return g;
}

std::vector<std::string> check_groupoid_functor(const GroupoidFunctorData& f, const SimplicialGroupoid& from,
                                                const SimplicialGroupoid& to) {
  std::vector<std::string> out;
  const int top = std::min(from.dim_cap(), to.dim_cap());
  if (static_cast<int>(f.objects.size()) != from.objects()) return {"object map has wrong length"};
  for (int x : f.objects)
    if (x < 0 || x >= to.objects()) return {"object map out of range"};
  if (static_cast<int>(f.arrows.size()) < top + 1) return {"arrow maps missing levels"};
  for (int n = 0; n <= top; ++n) {
    const auto& map = f.arrows[n];
    if (static_cast<int>(map.size()) != from.count(n)) return {"arrow map has wrong length"};
    for (ArrowId a = 0; a < from.count(n); ++a) {
      if (map[a] < 0 || map[a] >= to.count(n)) return {"arrow map out of range"};
      if (to.source(n, map[a]) != f.objects[from.source(n, a)] || to.target(n, map[a]) != f.objects[from.target(n, a)])
        out.push_back("degree " + std::to_string(n) + ": endpoints of arrow " + std::to_string(a));
    }
    for (int x = 0; x < from.objects(); ++x)
      if (map[from.identity(n, x)] != to.identity(n, f.objects[x]))
        out.push_back("degree " + std::to_string(n) + ": identity of object " + std::to_string(x));
    for (ArrowId a = 0; a < from.count(n); ++a)
      for (int y = 0; y < from.objects(); ++y)
        for (ArrowId b : from.hom(n, y, from.source(n, a)))
          if (map[from.compose(n, a, b)] != to.compose(n, map[a], map[b])) {
            out.push_back("degree " + std::to_string(n) + ": composition");
            return out;
          }
    for (ArrowId a = 0; a < from.count(n); ++a) {
      if (n > 0)
        for (int i = 0; i <= n; ++i)
          if (f.arrows[n - 1][from.face(n, i, a)] != to.face(n, i, map[a]))
            out.push_back("degree " + std::to_string(n) + ": d_" + std::to_string(i));
      if (n < top)
        for (int i = 0; i <= n; ++i)
          if (f.arrows[n + 1][from.degen(n, i, a)] != to.degen(n, i, map[a]))
            out.push_back("degree " + std::to_string(n) + ": s_" + std::to_string(i));
    }
  }
  return out;
}

}  // namespace hcn
