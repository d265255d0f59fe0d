#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcnerve/errors.hpp"
#include "hcnerve/sset.hpp"

namespace hcn::detail {

using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : key) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Simplices named by integer keys, numbered densely per level in insertion
// order. Builders enumerate keys canonically, then assemble() looks up the
// keys of faces and degeneracies.
class KeyedLevels {
 public:
  explicit KeyedLevels(int dim_cap) : keys_(dim_cap + 1), index_(dim_cap + 1) {}

  int dim_cap() const { return static_cast<int>(keys_.size()) - 1; }

  SimplexId add(int n, Key key) {
    auto [it, inserted] = index_[n].emplace(key, static_cast<SimplexId>(keys_[n].size()));
    if (!inserted) throw BuildError("duplicate simplex at level " + std::to_string(n));
    keys_[n].push_back(std::move(key));
    return it->second;
  }

  SimplexId find(int n, const Key& key) const {
    auto it = index_[n].find(key);
    if (it == index_[n].end())
      throw BuildError("simplex missing from level " + std::to_string(n) + " during lookup");
    return it->second;
  }

  const std::vector<Key>& keys(int n) const { return keys_[n]; }
  const Key& key(int n, SimplexId x) const { return keys_[n][x]; }
  std::int32_t count(int n) const { return static_cast<std::int32_t>(keys_[n].size()); }

 private:
  std::vector<std::vector<Key>> keys_;
  std::vector<std::unordered_map<Key, SimplexId, KeyHash>> index_;
};

// face_key(n, i, key) and degen_key(n, i, key) return the key of d_i / s_i.
template <class FaceKey, class DegenKey>
TruncatedSSet assemble(const KeyedLevels& levels, FaceKey&& face_key, DegenKey&& degen_key) {
  const int cap = levels.dim_cap();
  TruncatedSSet out(cap);
  for (int n = 0; n <= cap; ++n) out.reset_level(n, levels.count(n));
  for (int n = 0; n <= cap; ++n) {
    Level& level = out.mutable_level(n);
    for (SimplexId x = 0; x < level.count; ++x) {
      const Key& key = levels.key(n, x);
      if (n > 0)
        for (int i = 0; i <= n; ++i) level.faces[i][x] = levels.find(n - 1, face_key(n, i, key));
      if (n < cap)
        for (int i = 0; i <= n; ++i) level.degens[i][x] = levels.find(n + 1, degen_key(n, i, key));
    }
  }
  return out;
}

}  // namespace hcn::detail
