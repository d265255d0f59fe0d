#include "hcnerve/wbar.hpp"

#include <algorithm>

#include "hcnerve/detail/keyed_levels.hpp"
#include "hcnerve/errors.hpp"
#include "hcnerve/homology.hpp"
#include "hcnerve/homotopy.hpp"
#include "hcnerve/kan.hpp"

namespace hcn {

namespace {

void check_simplex(const SimplicialGroupoid& g, const WBarSimplex& x, const char* what) {
  const int n = x.dim();
  if (n < 0 || static_cast<int>(x.arrows.size()) != n)
    throw BuildError(std::string(what) + ": simplex has mismatched object and arrow counts");
  for (int j = 0; j < n; ++j) {
    const ArrowId a = x.arrows[j];
    if (j > g.dim_cap() || a < 0 || a >= g.count(j))
      throw BuildError(std::string(what) + ": arrow at position " + std::to_string(j) + " has the wrong degree");
    if (g.source(j, a) != x.objects[n - j - 1] || g.target(j, a) != x.objects[n - j])
      throw BuildError(std::string(what) + ": arrow at position " + std::to_string(j) +
                       " does not join the expected objects");
  }
}

detail::Key encode(const WBarSimplex& x) {
  detail::Key key = x.objects;
  key.insert(key.end(), x.arrows.begin(), x.arrows.end());
  return key;
}

WBarSimplex decode(int n, const detail::Key& key) {
  WBarSimplex x;
  x.objects.assign(key.begin(), key.begin() + n + 1);
  x.arrows.assign(key.begin() + n + 1, key.end());
  return x;
}

std::string label(const WBarSimplex& x) {
  std::string s = "[";
  for (std::size_t k = 0; k < x.objects.size(); ++k) s += (k ? "," : "") + std::to_string(x.objects[k]);
  s += "|";
  for (std::size_t k = 0; k < x.arrows.size(); ++k) s += (k ? "," : "") + std::to_string(x.arrows[k]);
  return s + "]";
}

}  // namespace

WBarSimplex wbar_face(const SimplicialGroupoid& g, const WBarSimplex& x, int i) {
  check_simplex(g, x, "face input");
  const int n = x.dim();
  if (n < 1 || i < 0 || i > n) throw InvalidArgument("face index out of range");
  WBarSimplex y;
  y.objects = x.objects;
  y.objects.erase(y.objects.begin() + i);
  y.arrows.resize(n - 1);
  for (int j = 0; j <= n - 2; ++j) {
    if (i == 0) {
      y.arrows[j] = x.arrows[j];
    } else if (j < n - i - 1) {
      y.arrows[j] = x.arrows[j];
    } else if (j == n - i - 1) {
      y.arrows[j] = g.compose(j, x.arrows[j], g.face(j + 1, 0, x.arrows[j + 1]));
    } else {
      y.arrows[j] = g.face(j + 1, j - n + i + 1, x.arrows[j + 1]);
    }
  }
  check_simplex(g, y, "face output");
  return y;
}

WBarSimplex wbar_degeneracy(const SimplicialGroupoid& g, const WBarSimplex& x, int i) {
  check_simplex(g, x, "degeneracy input");
  const int n = x.dim();
  if (i < 0 || i > n) throw InvalidArgument("degeneracy index out of range");
  if (n + 1 > g.dim_cap() + 1) throw TruncationError("degeneracy needs arrows above the groupoid cap");
  WBarSimplex y;
  y.objects = x.objects;
  y.objects.insert(y.objects.begin() + i, x.objects[i]);
  y.arrows.resize(n + 1);
  for (int j = 0; j <= n; ++j) {
    if (j < n - i) y.arrows[j] = x.arrows[j];
    else if (j == n - i) y.arrows[j] = g.identity(j, x.objects[i]);
    else y.arrows[j] = g.degen(j - 1, j - n + i - 1, x.arrows[j - 1]);
  }
  check_simplex(g, y, "degeneracy output");
  return y;
}

WBarComplex build_wbar_complex(const SimplicialGroupoid& g, int dim_cap) {
  if (dim_cap < 0) throw InvalidArgument("negative dimension cap");
  if (g.dim_cap() < dim_cap - 1) throw TruncationError("W-bar needs the groupoid through degree cap - 1");
  // out[j][x]: j-arrows with source x, ascending.
  std::vector<std::vector<std::vector<ArrowId>>> out(std::max(dim_cap, 0));
  for (int j = 0; j < dim_cap; ++j) {
    out[j].resize(g.objects());
    for (ArrowId a = 0; a < g.count(j); ++a) out[j][g.source(j, a)].push_back(a);
  }
  detail::KeyedLevels levels(dim_cap);
  WBarComplex result;
  result.simplices.resize(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    WBarSimplex x;
    x.objects.assign(n + 1, 0);
    x.arrows.assign(n, 0);
    // Fill g_{n-1}, ..., g_0 in turn; g_j leaves x_{n-j-1}.
    auto dfs = [&](auto&& self, int j) -> void {
      if (j < 0) {
        levels.add(n, encode(x));
        result.simplices[n].push_back(x);
        return;
      }
      for (ArrowId a : out[j][x.objects[n - j - 1]]) {
        x.arrows[j] = a;
        x.objects[n - j] = g.target(j, a);
        self(self, j - 1);
      }
    };
    for (int x0 = 0; x0 < g.objects(); ++x0) {
      x.objects[0] = x0;
      dfs(dfs, n - 1);
    }
  }
  result.sset = detail::assemble(
      levels, [&](int n, int i, const detail::Key& k) { return encode(wbar_face(g, decode(n, k), i)); },
      [&](int n, int i, const detail::Key& k) { return encode(wbar_degeneracy(g, decode(n, k), i)); });
  for (int n = 0; n <= dim_cap; ++n) {
    auto& labels = result.sset.mutable_level(n).labels;
    for (const WBarSimplex& s : result.simplices[n]) labels.push_back(label(s));
  }
  return result;
}

TruncatedSSet build_wbar(const SimplicialGroupoid& g, int dim_cap) { return build_wbar_complex(g, dim_cap).sset; }

std::string to_string(TwistConvention c) {
  switch (c) {
    case TwistConvention::kFirstFaceLeft: return "first-face-left";
    case TwistConvention::kFirstFaceRight: return "first-face-right";
    case TwistConvention::kLastFaceLeft: return "last-face-left";
    case TwistConvention::kLastFaceRight: return "last-face-right";
  }
  return "unknown";
}

WTotal assemble_w_total(const SimplicialGroupoid& g, int dim_cap, TwistConvention convention) {
  if (g.objects() != 1) throw InvalidArgument("W is only built for simplicial groups");
  if (g.dim_cap() < dim_cap) throw TruncationError("W needs the group through the dimension cap");
  WBarComplex base = build_wbar_complex(g, dim_cap);
  WTotal w;
  w.convention = convention;
  w.group_orders.resize(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) w.group_orders[n] = g.count(n);

  auto total = std::make_shared<TruncatedSSet>(dim_cap);
  for (int n = 0; n <= dim_cap; ++n) total->reset_level(n, base.sset.count(n) * w.group_orders[n]);
  const bool first = convention == TwistConvention::kFirstFaceLeft || convention == TwistConvention::kFirstFaceRight;
  const bool left = convention == TwistConvention::kFirstFaceLeft || convention == TwistConvention::kLastFaceLeft;
  for (int n = 0; n <= dim_cap; ++n) {
    Level& lv = total->mutable_level(n);
    const int order = w.group_orders[n];
    for (SimplexId b = 0; b < base.sset.count(n); ++b)
      for (int h = 0; h < order; ++h) {
        const SimplexId id = b * order + h;
        if (n > 0) {
          const ArrowId tau = base.simplices[n][b].arrows[n - 1];
          const int twisted = first ? 0 : n;
          for (int i = 0; i <= n; ++i) {
            ArrowId dh = g.face(n, i, h);
            if (i == twisted) dh = left ? g.compose(n - 1, tau, dh) : g.compose(n - 1, dh, tau);
            lv.faces[i][id] = base.sset.face(n, i, b) * w.group_orders[n - 1] + dh;
          }
        }
        if (n < dim_cap)
          for (int i = 0; i <= n; ++i)
            lv.degens[i][id] = base.sset.degen(n, i, b) * w.group_orders[n + 1] + g.degen(n, i, h);
      }
  }

  w.action.resize(dim_cap + 1);
  SimplicialMap proj;
  proj.assignment.resize(dim_cap + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    const int order = w.group_orders[n];
    w.action[n].resize(static_cast<std::size_t>(total->count(n)) * order);
    proj.assignment[n].resize(total->count(n));
    for (SimplexId id = 0; id < total->count(n); ++id) {
      proj.assignment[n][id] = id / order;
      for (int x = 0; x < order; ++x)
        w.action[n][static_cast<std::size_t>(id) * order + x] = (id / order) * order + g.compose(n, id % order, x);
    }
  }
  w.base = std::make_shared<TruncatedSSet>(std::move(base.sset));
  w.total = total;
  proj.source = w.total;
  proj.target = w.base;
  w.projection = std::move(proj);
  return w;
}

std::vector<std::string> w_structural_problems(const WTotal& w, const SimplicialGroupoid& g) {
  std::vector<std::string> problems;
  for (const Violation& v : validate(*w.total)) {
    problems.push_back(v.to_string());
    if (problems.size() >= 8) return problems;
  }
  const TruncatedSSet& t = *w.total;
  for (int n = 0; n <= t.dim_cap(); ++n) {
    const int order = w.group_orders[n];
    for (SimplexId id = 0; id < t.count(n); ++id)
      for (int x = 0; x < order; ++x) {
        const SimplexId moved = w.action[n][static_cast<std::size_t>(id) * order + x];
        if (n > 0)
          for (int i = 0; i <= n; ++i) {
            const SimplexId lhs = t.face(n, i, moved);
            const SimplexId rhs = w.action[n - 1][static_cast<std::size_t>(t.face(n, i, id)) * w.group_orders[n - 1] +
                                                  g.face(n, i, x)];
            if (lhs != rhs) {
              problems.push_back("action does not commute with d_" + std::to_string(i) + " at level " +
                                 std::to_string(n));
              return problems;
            }
          }
        if (n < t.dim_cap())
          for (int i = 0; i <= n; ++i) {
            const SimplexId lhs = t.degen(n, i, moved);
            const SimplexId rhs = w.action[n + 1][static_cast<std::size_t>(t.degen(n, i, id)) * w.group_orders[n + 1] +
                                                  g.degen(n, i, x)];
            if (lhs != rhs) {
              problems.push_back("action does not commute with s_" + std::to_string(i) + " at level " +
                                 std::to_string(n));
              return problems;
            }
          }
      }
  }
  for (const Violation& v : check_simplicial_map(w.projection)) {
    problems.push_back("projection: " + v.to_string());
    break;
  }
  return problems;
}

WTotal build_w_total(const SimplicialGroupoid& g, int dim_cap, TwistConvention convention) {
  WTotal w = assemble_w_total(g, dim_cap, convention);
  if (auto problems = w_structural_problems(w, g); !problems.empty())
    throw BuildError("W with convention " + to_string(convention) + " is not simplicial: " + problems.front());
  return w;
}

std::vector<TwistConvention> passing_twist_conventions(const SimplicialGroupoid& g, int dim_cap) {
  std::vector<TwistConvention> out;
  for (TwistConvention c : {TwistConvention::kFirstFaceLeft, TwistConvention::kFirstFaceRight,
                            TwistConvention::kLastFaceLeft, TwistConvention::kLastFaceRight}) {
    const WTotal w = assemble_w_total(g, dim_cap, c);
    if (w_structural_problems(w, g).empty()) out.push_back(c);
  }
  return out;
}

PrincipalFibrationReport check_principal_fibration(const WTotal& w, const SimplicialGroupoid& g,
                                                   const FibrationOptions& options) {
  PrincipalFibrationReport report;
  const TruncatedSSet& total = *w.total;
  const TruncatedSSet& base = *w.base;
  const int cap = total.dim_cap();

  report.freeness.passed = true;
  for (int n = 0; n <= cap && report.freeness.passed; ++n) {
    const int order = w.group_orders[n];
    const ArrowId e = g.identity(n, 0);
    for (SimplexId id = 0; id < total.count(n) && report.freeness.passed; ++id)
      for (int x = 0; x < order; ++x) {
        const SimplexId moved = w.action[n][static_cast<std::size_t>(id) * order + x];
        if ((x == e) != (moved == id)) {
          report.freeness.passed = false;
          report.freeness.detail = "level " + std::to_string(n) + ": simplex " + std::to_string(id) +
                                   (x == e ? " is moved by the identity" : " has a nontrivial stabilizer");
          break;
        }
      }
  }
  if (report.freeness.passed) report.freeness.detail = "free through level " + std::to_string(cap);

  report.quotient.passed = true;
  if (auto v = check_simplicial_map(w.projection); !v.empty()) {
    report.quotient.passed = false;
    report.quotient.detail = "projection is not simplicial: " + v.front().to_string();
  }
  for (int n = 0; n <= cap && report.quotient.passed; ++n) {
    const int order = w.group_orders[n];
    std::vector<int> fibre(base.count(n), 0);
    for (SimplexId id = 0; id < total.count(n); ++id) {
      const SimplexId b = w.projection.assignment[n][id];
      ++fibre[b];
      // Orbits lie in fibres.
      for (int x = 0; x < order; ++x)
        if (w.projection.assignment[n][w.action[n][static_cast<std::size_t>(id) * order + x]] != b) {
          report.quotient.passed = false;
          report.quotient.detail = "level " + std::to_string(n) + ": orbit of " + std::to_string(id) +
                                   " leaves its fibre";
          break;
        }
      if (!report.quotient.passed) break;
    }
    if (!report.quotient.passed) break;
    // With a free action, fibres of size |G_n| are single orbits, so W_n / G_n -> W-bar_n is a bijection.
    for (SimplexId b = 0; b < base.count(n); ++b)
      if (fibre[b] != order) {
        report.quotient.passed = false;
        report.quotient.detail = "level " + std::to_string(n) + ": fibre over " + std::to_string(b) + " has " +
                                 std::to_string(fibre[b]) + " simplices, expected one orbit of " +
                                 std::to_string(order);
        break;
      }
  }
  if (report.quotient.passed && !report.freeness.passed) {
    report.quotient.passed = false;
    report.quotient.detail = "fibres are not orbits because the action is not free";
  }
  if (report.quotient.passed) report.quotient.detail = "orbits are exactly the fibres of the projection";

  const int lift = options.lift_up_to < 0 ? cap : options.lift_up_to;
  const LiftingReport lifting = has_horn_lifting(w.projection, lift, options.threads);
  report.lifting.passed = lifting.ok;
  report.lifting.detail = lifting.ok ? "checked " + std::to_string(lifting.problems_checked) +
                                           " lifting problems through dimension " + std::to_string(lift)
                                     : "no lift for horn " + lifting.failing->to_string() + " over base simplex " +
                                           std::to_string(lifting.failing_base);

  const int through = options.homology_through < 0 ? cap - 1 : options.homology_through;
  const Components c = pi0(total);
  if (c.count != 1) {
    report.contractible.detail = "pi_0 has " + std::to_string(c.count) + " elements";
  } else {
    Pi1Options po;
    po.threads = options.threads;
    const Pi1Table p = pi1(total, 0, po);
    if (!p.verified() || p.order() != 1) {
      report.contractible.detail = "pi_1 has order " + std::to_string(p.order());
    } else {
      const auto h = homology(total, through);
      report.contractible.passed = true;
      for (const HomologyGroup& group : h) {
        const bool expected = group.degree == 0 ? (group.rank == 1 && group.torsion.empty()) : group.is_zero();
        if (!expected) {
          report.contractible.passed = false;
          report.contractible.detail = "H_" + std::to_string(group.degree) + " = " + group.to_string();
          break;
        }
      }
      if (report.contractible.passed)
        report.contractible.detail = "pi_0 = pi_1 = 1, reduced homology vanishes through degree " +
                                     std::to_string(through);
    }
  }
  return report;
}

}  // namespace hcn
