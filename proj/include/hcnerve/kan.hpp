#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcnerve/sset.hpp"

namespace hcn {

// A horn Lambda^n_k in a truncated simplicial set: the faces d_i for i != k,
// mutually compatible. Compatibility is checked when the horn is made.
class Horn {
 public:
  // faces lists d_i for i = 0..n with i != k, in increasing i.
  static Horn make(const TruncatedSSet& ambient, int n, int k, std::vector<SimplexId> faces);

  const TruncatedSSet& ambient() const { return *ambient_; }
  int n() const { return n_; }
  int k() const { return k_; }
  // d_i of the horn for i != k.
  SimplexId face(int i) const { return faces_[i]; }
  // n entries, the missing index skipped.
  std::vector<SimplexId> faces() const;

 private:
  Horn(const TruncatedSSet* ambient, int n, int k, std::vector<SimplexId> faces)
      : ambient_(ambient), n_(n), k_(k), faces_(std::move(faces)) {}

  const TruncatedSSet* ambient_;
  int n_;
  int k_;
  std::vector<SimplexId> faces_;  // size n+1, faces_[k] == kNoSimplex
};

// Exhaustive scan of level n for a simplex whose faces match the horn.
std::optional<SimplexId> find_filler(const Horn& horn);

struct HornWitness {
  int n = 0;
  int k = 0;
  std::vector<SimplexId> faces;  // n entries, d_k omitted
  std::string to_string() const;
};

struct KanReport {
  bool ok = true;
  std::optional<HornWitness> failing;  // first failure in canonical order
  std::size_t horns_checked = 0;
};

// Every horn Lambda^n_k with 1 <= n <= up_to has a filler. Requires
// up_to <= dim_cap. Horns are scanned in a canonical order; `threads` only
// splits the scan, the reported witness does not depend on it.
KanReport is_kan(const TruncatedSSet& sset, int up_to, int threads = 1);

struct LiftingReport {
  bool ok = true;
  std::optional<HornWitness> failing;  // horn in the total space
  SimplexId failing_base = kNoSimplex;  // simplex of the base with no lift
  std::size_t problems_checked = 0;
};

// Right lifting property of p : E -> B against Lambda^n_k -> Delta^n for
// 1 <= n <= up_to: every horn in E together with a filler of its image in B
// lifts to a filler in E over that simplex.
LiftingReport has_horn_lifting(const SimplicialMap& p, int up_to, int threads = 1);

}  // namespace hcn
