#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hcnerve/monotone.hpp"

namespace hcn {

using SimplexId = std::int32_t;
inline constexpr SimplexId kNoSimplex = -1;

// One level X_n of a truncated simplicial set. faces has n+1 tables for n>0
// and none at n=0; degens has n+1 tables below the cap and none at the cap.
struct Level {
  std::int32_t count = 0;
  std::vector<std::vector<SimplexId>> faces;
  std::vector<std::vector<SimplexId>> degens;
  std::vector<std::string> labels;  // empty, or one per simplex

  bool operator==(const Level&) const = default;
};

// A simplicial set stored levelwise up to a dimension cap N. Degeneracies
// are stored out of levels 0..N-1 only; anything that would need level N+1
// throws TruncationError.
class TruncatedSSet {
 public:
  TruncatedSSet() = default;
  explicit TruncatedSSet(int dim_cap);

  int dim_cap() const { return dim_cap_; }
  std::int32_t count(int n) const { return level(n).count; }

  SimplexId face(int n, int i, SimplexId x) const { return levels_[n].faces[i][x]; }
  SimplexId degen(int n, int i, SimplexId x) const;

  const Level& level(int n) const;
  // Builders fill levels through this; finished complexes are used read-only.
  Level& mutable_level(int n);
  // Allocates count and empty face/degeneracy tables of the right shape.
  void reset_level(int n, std::int32_t count);

  // alpha^* x for x in X_codomain.
  SimplexId apply(const Monotone& alpha, int codomain, SimplexId x) const;

  bool operator==(const TruncatedSSet&) const = default;

 private:
  int dim_cap_ = 0;
  std::vector<Level> levels_;
};

struct Violation {
  std::string relation;
  int level;
  SimplexId simplex;

  std::string to_string() const;
  bool operator==(const Violation&) const = default;
};

// Table totality plus every simplicial identity that fits inside the cap.
// Empty iff the tables describe a truncated simplicial set.
std::vector<Violation> validate(const TruncatedSSet& sset);

bool is_degenerate(const TruncatedSSet& sset, int n, SimplexId x);

// x = s_{i_1} ... s_{i_k} base with i_1 > ... > i_k; word lists i_1..i_k.
struct EzDecomposition {
  std::vector<int> word;
  int base_level = 0;
  SimplexId base = kNoSimplex;
};

EzDecomposition ez_decompose(const TruncatedSSet& sset, int n, SimplexId x);
// Inverse of ez_decompose: applies s_{i_k} first.
SimplexId apply_degeneracy_word(const TruncatedSSet& sset, int base_level, SimplexId base,
                                const std::vector<int>& word);

std::vector<SimplexId> nondegenerate(const TruncatedSSet& sset, int n);

struct SimplicialMap {
  std::shared_ptr<const TruncatedSSet> source;
  std::shared_ptr<const TruncatedSSet> target;
  std::vector<std::vector<SimplexId>> assignment;  // per level

  int top_level() const { return static_cast<int>(assignment.size()) - 1; }
};

// Range checks plus commutation with every face and degeneracy in range.
std::vector<Violation> check_simplicial_map(const SimplicialMap& map);

// True iff bijection[n] is a bijection X_n -> Y_n for every level and
// carries the face and degeneracy tables of x onto those of y. Mismatches
// are appended to `problems` when it is non-null.
bool check_isomorphism(const TruncatedSSet& x, const TruncatedSSet& y,
                       const std::vector<std::vector<SimplexId>>& bijection,
                       std::vector<Violation>* problems = nullptr);

// Relabels simplex ids level by level: new id of old x at level n is perm[n][x].
TruncatedSSet permute(const TruncatedSSet& sset, const std::vector<std::vector<SimplexId>>& perm);

// The standard n-simplex truncated at dim_cap; m-simplices are monotone maps
// [m] -> [n] in lexicographic order.
TruncatedSSet standard_simplex(int n, int dim_cap);

// Nerve of a finite poset given by its order relation leq[a][b] (a <= b).
TruncatedSSet poset_nerve(const std::vector<std::vector<bool>>& leq, int dim_cap);

}  // namespace hcn
