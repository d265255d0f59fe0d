#include "hcnerve/homotopy.hpp"

#include <algorithm>
#include <numeric>

#include "hcnerve/errors.hpp"
#include "hcnerve/kan.hpp"

namespace hcn {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Components pi0(const TruncatedSSet& sset) {
  const int vertices = sset.count(0);
  UnionFind uf(vertices);
  if (sset.dim_cap() >= 1)
    for (SimplexId e = 0; e < sset.count(1); ++e) uf.unite(sset.face(1, 0, e), sset.face(1, 1, e));
  Components out;
  out.component_of.assign(vertices, -1);
  std::vector<int> label(vertices, -1);
  for (int v = 0; v < vertices; ++v) {
    const int root = uf.find(v);
    if (label[root] < 0) {
      label[root] = out.count++;
      out.representatives.push_back(v);
    }
    out.component_of[v] = label[root];
  }
  return out;
}

bool Pi1Table::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

Pi1Table pi1(const TruncatedSSet& sset, SimplexId base, const Pi1Options& options) {
  if (sset.dim_cap() < 2) throw InvalidArgument("pi1 needs the 2-skeleton");
  if (base < 0 || base >= sset.count(0)) throw InvalidArgument("base vertex out of range");
  if (options.require_kan) {
    const KanReport kan = is_kan(sset, std::min(3, sset.dim_cap()), options.threads);
    if (!kan.ok) throw InvalidArgument("pi1 needs a Kan complex; unfillable horn " + kan.failing->to_string());
  }
  const SimplexId trivial = sset.degen(0, 0, base);
  std::vector<SimplexId> loops;
  std::vector<int> loop_index(sset.count(1), -1);
  for (SimplexId e = 0; e < sset.count(1); ++e)
    if (sset.face(1, 0, e) == base && sset.face(1, 1, e) == base) {
      loop_index[e] = static_cast<int>(loops.size());
      loops.push_back(e);
    }
  auto is_loop = [&](SimplexId e) { return loop_index[e] >= 0; };

  UnionFind uf(static_cast<int>(loops.size()));
  for (SimplexId t = 0; t < sset.count(2); ++t) {
    const SimplexId a = sset.face(2, 2, t), b = sset.face(2, 1, t);
    if (sset.face(2, 0, t) == trivial && is_loop(a) && is_loop(b)) uf.unite(loop_index[a], loop_index[b]);
  }

  Pi1Table out;
  out.base = base;
  std::vector<int> label(loops.size(), -1);
  for (std::size_t k = 0; k < loops.size(); ++k) {
    const int root = uf.find(static_cast<int>(k));
    if (label[root] < 0) {
      label[root] = out.order();
      out.representatives.push_back(loops[k]);
    }
    out.class_of[loops[k]] = label[root];
  }
  const int order = out.order();
  out.identity = out.class_of.at(trivial);
  out.mul.assign(order, std::vector<int>(order, -1));
  for (SimplexId t = 0; t < sset.count(2); ++t) {
    const SimplexId a = sset.face(2, 2, t), b = sset.face(2, 0, t), c = sset.face(2, 1, t);
    if (!is_loop(a) || !is_loop(b) || !is_loop(c)) continue;
    int& slot = out.mul[out.class_of[a]][out.class_of[b]];
    const int value = out.class_of[c];
    if (slot < 0) slot = value;
    else if (slot != value)
      out.problems.push_back("product of classes " + std::to_string(out.class_of[a]) + " and " +
                             std::to_string(out.class_of[b]) + " is not well defined");
  }
  if (!out.problems.empty()) return out;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (out.mul[a][b] < 0)
        out.problems.push_back("no 2-simplex composes classes " + std::to_string(a) + " and " + std::to_string(b));
  if (!out.problems.empty()) return out;
  for (int a = 0; a < order; ++a) {
    if (out.mul[a][out.identity] != a || out.mul[out.identity][a] != a)
      out.problems.push_back("class of the constant loop is not an identity");
    bool has_inverse = false;
    for (int b = 0; b < order && !has_inverse; ++b)
      has_inverse = out.mul[a][b] == out.identity && out.mul[b][a] == out.identity;
    if (!has_inverse) out.problems.push_back("class " + std::to_string(a) + " has no inverse");
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (out.mul[out.mul[a][b]][c] != out.mul[a][out.mul[b][c]])
          out.problems.push_back("associativity fails at " + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c));
  }
  return out;
}

}  // namespace hcn
