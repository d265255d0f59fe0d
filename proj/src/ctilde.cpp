#include "hcnerve/ctilde.hpp"

#include <algorithm>

#include "hcnerve/errors.hpp"

namespace hcn {

namespace {

SubsetMask interval_mask(int lo, int hi) {
  return static_cast<SubsetMask>(((std::uint64_t{1} << (hi + 1)) - 1) & ~((std::uint64_t{1} << lo) - 1));
}

SubsetMask endpoints(int i, int j) { return (SubsetMask{1} << i) | (SubsetMask{1} << j); }

detail::Key key_of(const Chain& c) {
  detail::Key k{c.i, c.j};
  for (SubsetMask m : c.sets) k.push_back(static_cast<int>(m));
  return k;
}

}  // namespace

bool is_valid_chain(const Chain& c) {
  if (c.i < 0 || c.j < c.i || c.j >= 31 || c.sets.empty()) return false;
  const SubsetMask ends = endpoints(c.i, c.j), range = interval_mask(c.i, c.j);
  for (std::size_t t = 0; t < c.sets.size(); ++t) {
    const SubsetMask s = c.sets[t];
    if ((s & ends) != ends || (s & ~range) != 0) return false;
    if (t > 0 && (s & ~c.sets[t - 1]) != 0) return false;
  }
  return true;
}

bool is_strict(const Chain& c) {
  for (std::size_t t = 1; t < c.sets.size(); ++t)
    if (c.sets[t] == c.sets[t - 1]) return false;
  return true;
}

Chain push_forward(const Monotone& alpha, const Chain& c) {
  Chain out;
  out.i = alpha.at(c.i);
  out.j = alpha.at(c.j);
  for (SubsetMask s : c.sets) {
    SubsetMask image = 0;
    for (int u = c.i; u <= c.j; ++u)
      if (s >> u & 1) image |= SubsetMask{1} << alpha[u];
    out.sets.push_back(image);
  }
  return out;
}

Chain restrict(const Chain& c, int lo, int hi) {
  Chain out{lo, hi, {}};
  const SubsetMask range = interval_mask(lo, hi);
  for (SubsetMask s : c.sets) out.sets.push_back(s & range);
  return out;
}

Chain union_compose(const Chain& outer, const Chain& inner) {
  if (outer.i != inner.j || outer.sets.size() != inner.sets.size())
    throw InvalidArgument("chains are not composable");
  Chain out{inner.i, outer.j, {}};
  for (std::size_t t = 0; t < outer.sets.size(); ++t) out.sets.push_back(outer.sets[t] | inner.sets[t]);
  return out;
}

CTilde::CTilde(int n) : n_(n) {
  if (n < 0 || n > kMaxCTildeDim) throw InvalidArgument("C~[Delta^n] supported for 0 <= n <= 12");
  for (int len = 1; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      const SubsetMask ends = endpoints(i, j);
      const SubsetMask interior = interval_mask(i, j) & ~ends;
      // All subsets of the interior, ascending as masks.
      std::vector<SubsetMask> vertices;
      for (SubsetMask s = interior;; s = (s - 1) & interior) {
        vertices.push_back(s | ends);
        if (s == 0) break;
      }
      std::sort(vertices.begin(), vertices.end());
      for (int dim = 0; dim < len; ++dim) {
        Chain c{i, j, std::vector<SubsetMask>(dim + 1)};
        auto dfs = [&](auto&& self, int t) -> void {
          if (t > dim) {
            Slot slot;
            slot.chain = c;
            index_.emplace(key_of(c), static_cast<int>(slots_.size()));
            slots_.push_back(std::move(slot));
            return;
          }
          for (SubsetMask v : vertices)
            if (t == 0 || (v != c.sets[t - 1] && (v & ~c.sets[t - 1]) == 0)) {
              c.sets[t] = v;
              self(self, t + 1);
            }
        };
        dfs(dfs, 0);
      }
    }
  for (Slot& slot : slots_) {
    const Chain& c = slot.chain;
    slot.generator = c.sets.back() == endpoints(c.i, c.j);
    if (c.dim() > 0)
      for (int t = 0; t <= c.dim(); ++t) {
        Chain f = c;
        f.sets.erase(f.sets.begin() + t);
        slot.faces.push_back(find(f));
      }
    const SubsetMask last = c.sets.back();
    for (int u = c.i + 1; u < c.j; ++u)
      if (last >> u & 1) slot.splits.push_back({u, reference(restrict(c, c.i, u)), reference(restrict(c, u, c.j))});
  }
}

int CTilde::find(const Chain& c) const {
  auto it = index_.find(key_of(c));
  return it == index_.end() ? -1 : it->second;
}

ChainRef CTilde::reference(const Chain& c) const {
  if (!is_valid_chain(c) || c.j > n_) throw InvalidArgument("not a chain of C~[Delta^" + std::to_string(n_) + "]");
  ChainRef ref{c.i, c.j, c.dim(), -1, {}};
  Chain base{c.i, c.j, {c.sets[0]}};
  for (std::size_t t = 1; t < c.sets.size(); ++t) {
    if (c.sets[t] == c.sets[t - 1]) ref.degens.push_back(static_cast<int>(t) - 1);
    else base.sets.push_back(c.sets[t]);
  }
  if (c.i != c.j) {
    ref.slot = find(base);
    if (ref.slot < 0) throw BuildError("strict chain missing from the slot table");
  }
  return ref;
}

}  // namespace hcn
