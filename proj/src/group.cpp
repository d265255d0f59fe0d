#include "hcnerve/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hcnerve/errors.hpp"

namespace hcn {

std::vector<std::string> group_law_violations(const std::vector<std::vector<int>>& mul) {
  std::vector<std::string> out;
  const int n = static_cast<int>(mul.size());
  if (n == 0) return {"empty table"};
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) return {"table row " + std::to_string(a) + " has wrong length"};
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n) return {"entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range"};
  }
  for (int a = 0; a < n; ++a)
    if (mul[0][a] != a || mul[a][0] != a) out.push_back("0 is not an identity for " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          out.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
          return out;
        }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = mul[a][b] == 0 && mul[b][a] == 0;
    if (!found) out.push_back("no inverse for " + std::to_string(a));
  }
  return out;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul, std::string name) {
  if (mul.size() > static_cast<std::size_t>(kMaxTableSize))
    throw InvalidArgument("group order " + std::to_string(mul.size()) + " exceeds size guard");
  auto problems = group_law_violations(mul);
  if (!problems.empty()) throw InvalidArgument("not a group: " + problems.front());
  FiniteGroup g;
  const int n = static_cast<int>(mul.size());
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a][b] == 0) g.inv_[a] = b;
  g.mul_ = std::move(mul);
  g.name_ = std::move(name);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

FiniteGroup cyclic(int m) {
  if (m < 1) throw InvalidArgument("cyclic group needs order >= 1");
  if (m > kMaxTableSize) throw InvalidArgument("cyclic group order exceeds size guard");
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
  return FiniteGroup::from_table(std::move(mul), "C" + std::to_string(m));
}

namespace {

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<int> permutation_of(int m, int index) { return all_permutations(m).at(index); }

FiniteGroup symmetric(int m) {
  if (m < 1 || m > 5) throw InvalidArgument("symmetric group degree must be in 1..5");
  const auto perms = all_permutations(m);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> c(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < m; ++x) c[x] = perms[a][perms[b][x]];
      mul[a][b] = index.at(c);
    }
  return FiniteGroup::from_table(std::move(mul), "S" + std::to_string(m));
}

FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
  const long total = static_cast<long>(g.order()) * h.order();
  if (total > kMaxTableSize) throw InvalidArgument("product group order exceeds size guard");
  const int n = static_cast<int>(total);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a][b] = g.mul(a / h.order(), b / h.order()) * h.order() + h.mul(a % h.order(), b % h.order());
  return FiniteGroup::from_table(std::move(mul), g.name() + "x" + h.name());
}

}  // namespace hcn
