#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hcnerve/sset.hpp"

namespace hcn {

struct Components {
  int count = 0;
  std::vector<int> component_of;             // per vertex; labels in order of first vertex
  std::vector<SimplexId> representatives;    // smallest vertex of each component
};

// Path components via edges.
Components pi0(const TruncatedSSet& sset);

// The fundamental group at a vertex of a Kan complex, as a multiplication
// table on homotopy classes of loops. Two loops a, b are equivalent when some
// 2-simplex has faces (d_0, d_1, d_2) = (s_0 base, b, a); the product [a][b]
// is [d_1 x] for any 2-simplex x with d_2 x = a and d_0 x = b.
struct Pi1Table {
  SimplexId base = kNoSimplex;
  std::vector<SimplexId> representatives;                // one loop per class
  std::unordered_map<SimplexId, int> class_of;           // loop -> class
  std::vector<std::vector<int>> mul;                     // mul[a][b] = [a][b]
  int identity = 0;                                      // class of s_0 base
  std::vector<std::string> problems;                     // empty iff all group laws verified

  int order() const { return static_cast<int>(representatives.size()); }
  bool verified() const { return problems.empty(); }
  bool is_abelian() const;
};

struct Pi1Options {
  bool require_kan = true;  // refuse input that is not Kan up to min(3, dim_cap)
  int threads = 1;
};

Pi1Table pi1(const TruncatedSSet& sset, SimplexId base, const Pi1Options& options = {});

}  // namespace hcn
