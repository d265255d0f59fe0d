#pragma once

#include <string>
#include <vector>

#include "hcnerve/smith.hpp"
#include "hcnerve/sset.hpp"

namespace hcn {

struct HomologyGroup {
  int degree = 0;
  long rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "Z^2 + Z/2 + Z/4", "0"
  bool operator==(const HomologyGroup&) const = default;
};

// Free chain groups C_k of the given ranks with boundary[k] : C_k -> C_{k-1}
// (boundary[0] has zero rows).
struct ChainComplex {
  std::vector<long> ranks;
  std::vector<SparseIntMatrix> boundary;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
};

// Normalized chains: generators are the nondegenerate simplices, degenerate
// faces contribute nothing.
struct NormalizedChains {
  ChainComplex complex;
  std::vector<std::vector<SimplexId>> basis;   // nondegenerate simplices per degree
  std::vector<std::vector<int>> position;      // position[n][x] in basis, or -1
};

NormalizedChains normalized_chains(const TruncatedSSet& sset, int top_degree);

bool boundary_squares_to_zero(const ChainComplex& c);

// H_0..H_through; needs boundary matrices up to degree through + 1.
std::vector<HomologyGroup> homology(const ChainComplex& c, int through);

// Integral homology through degree `through` <= dim_cap - 1. The input must
// validate; higher degrees are refused as truncation-polluted.
std::vector<HomologyGroup> homology(const TruncatedSSet& sset, int through);

// Mapping cone of the normalized chain map of f, degrees 0..top_degree:
// Cone_k = C_{k-1}(X) + C_k(Y), d(x, y) = (-dx, f x + dy).
ChainComplex mapping_cone(const SimplicialMap& f, int top_degree);

}  // namespace hcn
