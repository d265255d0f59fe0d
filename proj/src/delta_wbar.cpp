#include "hcnerve/delta_wbar.hpp"

namespace hcn {

std::string WbarArrow::to_string() const {
  std::string s = std::to_string(src) + "->" + std::to_string(tgt) + " dim " + std::to_string(dim) + " (";
  for (std::size_t t = 0; t < coords.size(); ++t) {
    s += t ? "; " : "";
    for (std::size_t v = 0; v < coords[t].size(); ++v) s += (v ? "," : "") + std::to_string(coords[t][v]);
  }
  return s + ")";
}

DeltaWbar::DeltaWbar(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("negative dimension");
}

std::vector<int> DeltaWbar::factor_dims(int i, int j) const {
  std::vector<int> out;
  for (int s = n_ - j; s < n_ - i; ++s) out.push_back(s);
  return out;
}

bool DeltaWbar::is_valid(const WbarArrow& a) const {
  if (a.src < 0 || a.tgt > n_ || a.src > a.tgt || a.dim < 0) return false;
  const std::vector<int> dims = factor_dims(a.src, a.tgt);
  if (a.coords.size() != dims.size()) return false;
  for (std::size_t t = 0; t < dims.size(); ++t)
    if (static_cast<int>(a.coords[t].size()) != a.dim + 1 || !is_monotone(a.coords[t], dims[t])) return false;
  return true;
}

WbarArrow DeltaWbar::generator(int k) const {
  if (k < 1 || k > n_) throw InvalidArgument("generator index out of range");
  return {k - 1, k, n_ - k, {identity_map(n_ - k)}};
}

WbarArrow DeltaWbar::identity(int object, int dim) const { return {object, object, dim, {}}; }

WbarArrow DeltaWbar::compose(const WbarArrow& g, const WbarArrow& f) const {
  if (g.src != f.tgt || g.dim != f.dim) throw InvalidArgument("arrows of Delta_Wbar are not composable");
  WbarArrow out{f.src, g.tgt, g.dim, g.coords};
  out.coords.insert(out.coords.end(), f.coords.begin(), f.coords.end());
  return out;
}

std::vector<WbarArrow> DeltaWbar::vertices(int i, int j) const {
  std::vector<WbarArrow> out;
  const std::vector<int> dims = factor_dims(i, j);
  WbarArrow a{i, j, 0, std::vector<Monotone>(dims.size(), Monotone{0})};
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == dims.size()) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= dims[t]; ++v) {
      a.coords[t][0] = v;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return out;
}

WbarArrow pull_back(const Monotone& alpha, const WbarArrow& a) {
  WbarArrow out{a.src, a.tgt, static_cast<int>(alpha.size()) - 1, {}};
  for (const Monotone& c : a.coords) out.coords.push_back(hcn::compose(c, alpha));
  return out;
}

WbarArrow coface_generator(int n, int i, int j) {
  if (n < 1 || i < 0 || i > n || j < 1 || j > n - 1) throw InvalidArgument("coface index out of range");
  if (j < i) return {j - 1, j, n - 1 - j, {coface_map(n - j, i - j)}};
  // The generator at the deleted object becomes g_{n,i+1} o d_0 g_{n,i}.
  if (j == i) return {i - 1, i + 1, n - 1 - i, {identity_map(n - i - 1), coface_map(n - i, 0)}};
  return {j, j + 1, n - 1 - j, {identity_map(n - 1 - j)}};
}

WbarArrow codegeneracy_generator(int n, int i, int j) {
  if (n < 0 || i < 0 || i > n || j < 1 || j > n + 1) throw InvalidArgument("codegeneracy index out of range");
  if (j <= i) return {j - 1, j, n + 1 - j, {codegeneracy_map(n - j, i - j)}};
  if (j == i + 1) return {i, i, n - i, {}};
  return {j - 2, j - 1, n + 1 - j, {identity_map(n + 1 - j)}};
}

namespace {

int coface_object(int i, int o) { return o < i ? o : o + 1; }
int codegeneracy_object(int i, int o) { return o <= i ? o : o - 1; }

template <class Gen, class Obj>
WbarArrow extend(int source_n, int target_n, const WbarArrow& a, Gen&& gen, Obj&& object) {
  const DeltaWbar target(target_n);
  std::vector<WbarArrow> gens;
  for (int k = 1; k <= source_n; ++k) gens.push_back(gen(k));
  WbarArrow out = evaluate(
      a, source_n, gens, [](const Monotone& alpha, int, const WbarArrow& x) { return pull_back(alpha, x); },
      [&](const WbarArrow& g, const WbarArrow& f) { return target.compose(g, f); },
      [&](int o, int dim) { return target.identity(object(o), dim); });
  return out;
}

}  // namespace

WbarArrow apply_coface(int n, int i, const WbarArrow& a) {
  return extend(
      n - 1, n, a, [&](int j) { return coface_generator(n, i, j); }, [&](int o) { return coface_object(i, o); });
}

WbarArrow apply_codegeneracy(int n, int i, const WbarArrow& a) {
  return extend(
      n + 1, n, a, [&](int j) { return codegeneracy_generator(n, i, j); },
      [&](int o) { return codegeneracy_object(i, o); });
}

WbarArrow push_forward(const Monotone& alpha, int q, const WbarArrow& a) {
  if (!is_monotone(alpha, q)) throw InvalidArgument("map is not monotone");
  std::vector<OperatorStep> steps = operator_steps(alpha, q);
  int level = static_cast<int>(alpha.size()) - 1;
  WbarArrow x = a;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->is_face) {
      x = apply_coface(level + 1, it->index, x);
      ++level;
    } else {
      x = apply_codegeneracy(level - 1, it->index, x);
      --level;
    }
  }
  return x;
}

std::vector<std::string> cosimplicial_identity_problems(int max_n) {
  std::vector<std::string> problems;
  auto expect = [&](const WbarArrow& lhs, const WbarArrow& rhs, const std::string& what) {
    if (!(lhs == rhs)) problems.push_back(what + ": " + lhs.to_string() + " vs " + rhs.to_string());
  };
  for (int n = 0; n <= max_n; ++n) {
    const DeltaWbar cat(n);
    for (int k = 1; k <= n; ++k) {
      const WbarArrow g = cat.generator(k);
      const std::string at = " on g_{" + std::to_string(n) + "," + std::to_string(k) + "}";
      // Into Delta^{n+2}: d^j d^i = d^i d^{j-1} for i < j.
      for (int j = 0; j <= n + 2; ++j)
        for (int i = 0; i < j; ++i)
          expect(apply_coface(n + 2, j, apply_coface(n + 1, i, g)), apply_coface(n + 2, i, apply_coface(n + 1, j - 1, g)),
                 "coface identity i=" + std::to_string(i) + " j=" + std::to_string(j) + at);
      // Into Delta^{n-2}: s^j s^i = s^i s^{j+1} for i <= j.
      if (n >= 2)
        for (int j = 0; j <= n - 2; ++j)
          for (int i = 0; i <= j; ++i)
            expect(apply_codegeneracy(n - 2, j, apply_codegeneracy(n - 1, i, g)),
                   apply_codegeneracy(n - 2, i, apply_codegeneracy(n - 1, j + 1, g)),
                   "codegeneracy identity i=" + std::to_string(i) + " j=" + std::to_string(j) + at);
      // Mixed: s^j d^i into Delta^n from Delta^n.
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          const WbarArrow lhs = apply_codegeneracy(n, j, apply_coface(n + 1, i, g));
          WbarArrow rhs;
          if (i < j) rhs = apply_coface(n, i, apply_codegeneracy(n - 1, j - 1, g));
          else if (i == j || i == j + 1) rhs = g;
          else rhs = apply_coface(n, i - 1, apply_codegeneracy(n - 1, j, g));
          expect(lhs, rhs, "mixed identity i=" + std::to_string(i) + " j=" + std::to_string(j) + at);
        }
    }
  }
  return problems;
}

}  // namespace hcn
