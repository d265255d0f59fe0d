#include "hcnerve/homology.hpp"

#include "hcnerve/errors.hpp"

namespace hcn {

std::string HomologyGroup::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (rank == 1) append("Z");
  if (rank > 1) append("Z^" + std::to_string(rank));
  for (const Integer& t : torsion) append("Z/" + t.str());
  return out.empty() ? "0" : out;
}

NormalizedChains normalized_chains(const TruncatedSSet& sset, int top_degree) {
  if (top_degree > sset.dim_cap())
    throw TruncationError("chains above the dimension cap requested");
  NormalizedChains out;
  out.basis.resize(top_degree + 1);
  out.position.resize(top_degree + 1);
  out.complex.ranks.resize(top_degree + 1);
  out.complex.boundary.resize(top_degree + 1);
  for (int n = 0; n <= top_degree; ++n) {
    out.basis[n] = nondegenerate(sset, n);
    out.position[n].assign(sset.count(n), -1);
    for (std::size_t k = 0; k < out.basis[n].size(); ++k) out.position[n][out.basis[n][k]] = static_cast<int>(k);
    out.complex.ranks[n] = static_cast<long>(out.basis[n].size());
  }
  out.complex.boundary[0] = SparseIntMatrix(0, static_cast<int>(out.complex.ranks[0]));
  for (int n = 1; n <= top_degree; ++n) {
    SparseIntMatrix d(static_cast<int>(out.complex.ranks[n - 1]), static_cast<int>(out.complex.ranks[n]));
    for (std::size_t k = 0; k < out.basis[n].size(); ++k)
      for (int i = 0; i <= n; ++i) {
        const int row = out.position[n - 1][sset.face(n, i, out.basis[n][k])];
        if (row >= 0) d.add(row, static_cast<int>(k), Integer(i % 2 == 0 ? 1 : -1));
      }
    out.complex.boundary[n] = std::move(d);
  }
  return out;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int k = 2; k <= c.top(); ++k) {
    const SparseIntMatrix& outer = c.boundary[k - 1];
    const SparseIntMatrix& inner = c.boundary[k];
    for (const auto& col : inner.columns) {
      SparseIntMatrix acc(outer.rows, 1);
      for (const auto& [mid, v] : col)
        for (const auto& [row, w] : outer.columns[mid]) acc.add(row, 0, v * w);
      if (!acc.columns[0].empty()) return false;
    }
  }
  return true;
}

std::vector<HomologyGroup> homology(const ChainComplex& c, int through) {
  if (through + 1 > c.top()) throw InvalidArgument("homology needs the boundary one degree above");
  std::vector<std::vector<Integer>> factors(through + 2);
  for (int k = 1; k <= through + 1; ++k) factors[k] = smith_invariants(c.boundary[k]);
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= through; ++k) {
    HomologyGroup h;
    h.degree = k;
    const long rk_in = k == 0 ? 0 : static_cast<long>(factors[k].size());
    const long rk_out = static_cast<long>(factors[k + 1].size());
    h.rank = c.ranks[k] - rk_in - rk_out;
    for (const Integer& f : factors[k + 1])
      if (f > 1) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologyGroup> homology(const TruncatedSSet& sset, int through) {
  if (through < 0) throw InvalidArgument("negative homology degree");
  if (through > sset.dim_cap() - 1)
    throw TruncationError("homology in degree " + std::to_string(through) + " needs simplices above the cap " +
                          std::to_string(sset.dim_cap()));
  if (auto v = validate(sset); !v.empty()) throw InvalidArgument("not a simplicial set: " + v.front().to_string());
  return homology(normalized_chains(sset, through + 1).complex, through);
}

ChainComplex mapping_cone(const SimplicialMap& f, int top_degree) {
  if (f.top_level() < top_degree - 1) throw InvalidArgument("map not defined through the cone degree");
  const NormalizedChains x = normalized_chains(*f.source, std::max(top_degree - 1, 0));
  const NormalizedChains y = normalized_chains(*f.target, top_degree);
  auto rx = [&](int k) -> long { return (k < 0 || k > top_degree - 1) ? 0 : x.complex.ranks[k]; };
  ChainComplex cone;
  cone.ranks.resize(top_degree + 1);
  for (int k = 0; k <= top_degree; ++k) cone.ranks[k] = rx(k - 1) + y.complex.ranks[k];
  cone.boundary.resize(top_degree + 1);
  cone.boundary[0] = SparseIntMatrix(0, static_cast<int>(cone.ranks[0]));
  for (int k = 1; k <= top_degree; ++k) {
    SparseIntMatrix d(static_cast<int>(cone.ranks[k - 1]), static_cast<int>(cone.ranks[k]));
    const int offset = static_cast<int>(rx(k - 2));
    for (long j = 0; j < rx(k - 1); ++j) {
      if (k - 1 >= 1)
        for (const auto& [row, v] : x.complex.boundary[k - 1].columns[j]) d.add(row, static_cast<int>(j), -v);
      const SimplexId image = f.assignment[k - 1][x.basis[k - 1][j]];
      const int pos = y.position[k - 1][image];
      if (pos >= 0) d.add(offset + pos, static_cast<int>(j), Integer(1));
    }
    for (long j = 0; j < y.complex.ranks[k]; ++j)
      for (const auto& [row, v] : y.complex.boundary[k].columns[j])
        d.add(offset + row, static_cast<int>(rx(k - 1) + j), v);
    cone.boundary[k] = std::move(d);
  }
  return cone;
}

}  // namespace hcn
