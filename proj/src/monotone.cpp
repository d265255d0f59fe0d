#include "hcnerve/monotone.hpp"

#include "hcnerve/errors.hpp"

namespace hcn {

bool is_monotone(const Monotone& alpha, int codomain) {
  if (alpha.empty()) return false;
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    if (alpha[t] < 0 || alpha[t] > codomain) return false;
    if (t > 0 && alpha[t] < alpha[t - 1]) return false;
  }
  return true;
}

Monotone identity_map(int m) {
  Monotone out(m + 1);
  for (int t = 0; t <= m; ++t) out[t] = t;
  return out;
}

Monotone coface_map(int s, int i) {
  if (s < 1 || i < 0 || i > s) throw InvalidArgument("coface index out of range");
  Monotone out(s);
  for (int t = 0; t < s; ++t) out[t] = t < i ? t : t + 1;
  return out;
}

Monotone codegeneracy_map(int s, int i) {
  if (s < 0 || i < 0 || i > s) throw InvalidArgument("codegeneracy index out of range");
  Monotone out(s + 2);
  for (int t = 0; t <= s + 1; ++t) out[t] = t <= i ? t : t - 1;
  return out;
}

Monotone compose(const Monotone& beta, const Monotone& alpha) {
  Monotone out(alpha.size());
  for (std::size_t t = 0; t < alpha.size(); ++t) out[t] = beta.at(alpha[t]);
  return out;
}

static void extend_monotone(int p, int q, Monotone& prefix, std::vector<Monotone>& out) {
  if (static_cast<int>(prefix.size()) == p + 1) {
    out.push_back(prefix);
    return;
  }
  int lo = prefix.empty() ? 0 : prefix.back();
  for (int v = lo; v <= q; ++v) {
    prefix.push_back(v);
    extend_monotone(p, q, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Monotone> all_monotone_maps(int p, int q) {
  std::vector<Monotone> out;
  Monotone prefix;
  extend_monotone(p, q, prefix, out);
  return out;
}

std::vector<OperatorStep> operator_steps(const Monotone& alpha, int codomain) {
  if (!is_monotone(alpha, codomain)) throw InvalidArgument("map is not monotone");
  std::vector<bool> hit(codomain + 1, false);
  for (int v : alpha) hit[v] = true;
  std::vector<OperatorStep> steps;
  for (int j = codomain; j >= 0; --j)
    if (!hit[j]) steps.push_back({true, j});
  for (std::size_t t = 0; t + 1 < alpha.size(); ++t)
    if (alpha[t] == alpha[t + 1]) steps.push_back({false, static_cast<int>(t)});
  return steps;
}

}  // namespace hcn
