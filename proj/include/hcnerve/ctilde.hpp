#pragma once

#include <cstdint>
#include <vector>

#include "hcnerve/detail/keyed_levels.hpp"
#include "hcnerve/monotone.hpp"

namespace hcn {

// Subsets of [0, n] as bitmasks; bit u stands for the element u.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxCTildeDim = 12;

// An m-simplex of hom(i, j) in C~[Delta^n]: a chain I_0 >= I_1 >= ... >= I_m of
// subsets of [i, j] that all contain i and j. Identity homs (i == j) consist
// of the constant chains on {i}.
struct Chain {
  int i = 0;
  int j = 0;
  std::vector<SubsetMask> sets;

  int dim() const { return static_cast<int>(sets.size()) - 1; }
  bool operator==(const Chain&) const = default;
};

bool is_valid_chain(const Chain& c);
bool is_strict(const Chain& c);

// Possibly degenerate chain in Eilenberg-Zilber form: s_{t_k} ... s_{t_1} of
// the strict chain in `slot`, with t_1 < ... < t_k applied in listed order.
// slot is -1 for the identity hom (i == j).
struct ChainRef {
  int i = 0;
  int j = 0;
  int dim = 0;
  int slot = -1;
  std::vector<int> degens;
  int base_dim() const { return dim - static_cast<int>(degens.size()); }
};

// Image under alpha : [p] -> [q], I |-> alpha(I).
Chain push_forward(const Monotone& alpha, const Chain& c);

// I |-> I intersected with [lo, hi], as a chain of hom(lo, hi).
Chain restrict(const Chain& c, int lo, int hi);

// Levelwise union of outer in hom(j, k) and inner in hom(i, j).
Chain union_compose(const Chain& outer, const Chain& inner);

// The nondegenerate chains of all homs of C~[Delta^n] (i < j).
class CTilde {
 public:
  struct Split {
    int point = 0;  // interior element u of the last set
    ChainRef left;  // restriction to [i, u]
    ChainRef right; // restriction to [u, j]
  };

  struct Slot {
    Chain chain;
    bool generator = false;   // last set is {i, j}
    std::vector<int> faces;   // slot of d_t, t = 0..dim
    std::vector<Split> splits;  // one per interior point of the last set, ascending
  };

  explicit CTilde(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(slots_.size()); }
  const Slot& slot(int s) const { return slots_[s]; }
  const std::vector<Slot>& slots() const { return slots_; }

  // Slot of a strict chain, or -1.
  int find(const Chain& c) const;
  // Eilenberg-Zilber form of any valid chain; throws InvalidArgument otherwise.
  ChainRef reference(const Chain& c) const;

 private:
  int n_;
  std::vector<Slot> slots_;
  std::unordered_map<detail::Key, int, detail::KeyHash> index_;
};

}  // namespace hcn
