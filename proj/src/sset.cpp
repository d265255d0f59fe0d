#include "hcnerve/sset.hpp"

#include <algorithm>
#include <numeric>

#include "hcnerve/detail/keyed_levels.hpp"
#include "hcnerve/errors.hpp"

namespace hcn {

TruncatedSSet::TruncatedSSet(int dim_cap) : dim_cap_(dim_cap), levels_(dim_cap + 1) {
  if (dim_cap < 0) throw InvalidArgument("negative dimension cap");
}

SimplexId TruncatedSSet::degen(int n, int i, SimplexId x) const {
  if (n >= dim_cap_)
    throw TruncationError("degeneracy out of level " + std::to_string(n) + " exceeds cap " +
                          std::to_string(dim_cap_));
  return levels_[n].degens[i][x];
}

const Level& TruncatedSSet::level(int n) const {
  if (n < 0 || n > dim_cap_)
    throw TruncationError("level " + std::to_string(n) + " outside 0.." + std::to_string(dim_cap_));
  return levels_[n];
}

Level& TruncatedSSet::mutable_level(int n) {
  if (n < 0 || n > dim_cap_)
    throw TruncationError("level " + std::to_string(n) + " outside 0.." + std::to_string(dim_cap_));
  return levels_[n];
}

void TruncatedSSet::reset_level(int n, std::int32_t count) {
  Level& level = mutable_level(n);
  level.count = count;
  level.faces.assign(n > 0 ? n + 1 : 0, std::vector<SimplexId>(count, kNoSimplex));
  level.degens.assign(n < dim_cap_ ? n + 1 : 0, std::vector<SimplexId>(count, kNoSimplex));
  level.labels.clear();
}

SimplexId TruncatedSSet::apply(const Monotone& alpha, int codomain, SimplexId x) const {
  return apply_operator(
      alpha, codomain, x, [this](int n, int i, int y) { return face(n, i, y); },
      [this](int n, int i, int y) { return degen(n, i, y); });
}

std::string Violation::to_string() const {
  return relation + " at level " + std::to_string(level) + ", simplex " + std::to_string(simplex);
}

namespace {

bool table_shape_ok(const TruncatedSSet& s, std::vector<Violation>& out) {
  bool ok = true;
  const int cap = s.dim_cap();
  for (int n = 0; n <= cap; ++n) {
    const Level& lv = s.level(n);
    const std::size_t nf = n > 0 ? n + 1 : 0;
    const std::size_t nd = n < cap ? n + 1 : 0;
    if (lv.count < 0 || lv.faces.size() != nf || lv.degens.size() != nd ||
        (!lv.labels.empty() && lv.labels.size() != static_cast<std::size_t>(lv.count))) {
      out.push_back({"table shape", n, kNoSimplex});
      ok = false;
      continue;
    }
    for (std::size_t i = 0; i < nf; ++i) {
      if (lv.faces[i].size() != static_cast<std::size_t>(lv.count)) {
        out.push_back({"d_" + std::to_string(i) + " table length", n, kNoSimplex});
        ok = false;
        continue;
      }
      const std::int32_t below = s.level(n - 1).count;
      for (SimplexId x = 0; x < lv.count; ++x)
        if (lv.faces[i][x] < 0 || lv.faces[i][x] >= below) {
          out.push_back({"d_" + std::to_string(i) + " out of range", n, x});
          ok = false;
        }
    }
    for (std::size_t i = 0; i < nd; ++i) {
      if (lv.degens[i].size() != static_cast<std::size_t>(lv.count)) {
        out.push_back({"s_" + std::to_string(i) + " table length", n, kNoSimplex});
        ok = false;
        continue;
      }
      const std::int32_t above = s.level(n + 1).count;
      for (SimplexId x = 0; x < lv.count; ++x)
        if (lv.degens[i][x] < 0 || lv.degens[i][x] >= above) {
          out.push_back({"s_" + std::to_string(i) + " out of range", n, x});
          ok = false;
        }
    }
  }
  return ok;
}


}  // namespace

std::vector<Violation> validate(const TruncatedSSet& s) {
  std::vector<Violation> out;
  if (!table_shape_ok(s, out)) return out;
  const int cap = s.dim_cap();
  for (int n = 0; n <= cap; ++n) {
    const std::int32_t count = s.count(n);
    for (SimplexId x = 0; x < count; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (s.face(n - 1, i, s.face(n, j, x)) != s.face(n - 1, j - 1, s.face(n, i, x)))
              out.push_back({"d_" + std::to_string(i) + " d_" + std::to_string(j) + " = d_" +
                                 std::to_string(j - 1) + " d_" + std::to_string(i),
                             n, x});
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= cap)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (s.degen(n + 1, i, s.degen(n, j, x)) != s.degen(n + 1, j + 1, s.degen(n, i, x)))
              out.push_back({"s_" + std::to_string(i) + " s_" + std::to_string(j) + " = s_" +
                                 std::to_string(j + 1) + " s_" + std::to_string(i),
                             n, x});
      // mixed relations for d_i s_j on X_n
      if (n + 1 <= cap)
        for (int j = 0; j <= n; ++j) {
          const SimplexId sx = s.degen(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            const SimplexId lhs = s.face(n + 1, i, sx);
            SimplexId rhs;
            if (i < j)
              rhs = s.degen(n - 1, j - 1, s.face(n, i, x));
            else if (i == j || i == j + 1)
              rhs = x;
            else
              rhs = s.degen(n - 1, j, s.face(n, i - 1, x));
            if (lhs != rhs)
              out.push_back({"d_" + std::to_string(i) + " s_" + std::to_string(j), n, x});
          }
        }
    }
  }
  return out;
}

bool is_degenerate(const TruncatedSSet& s, int n, SimplexId x) {
  for (int i = 0; i < n; ++i)
    if (s.degen(n - 1, i, s.face(n, i, x)) == x) return true;
  return false;
}

EzDecomposition ez_decompose(const TruncatedSSet& s, int n, SimplexId x) {
  EzDecomposition out;
  int level = n;
  SimplexId cur = x;
  for (;;) {
    int found = -1;
    for (int i = level - 1; i >= 0; --i)
      if (s.degen(level - 1, i, s.face(level, i, cur)) == cur) {
        found = i;
        break;
      }
    if (found < 0) break;
    out.word.push_back(found);
    cur = s.face(level, found, cur);
    --level;
  }
  out.base_level = level;
  out.base = cur;
  return out;
}

SimplexId apply_degeneracy_word(const TruncatedSSet& s, int base_level, SimplexId base,
                                const std::vector<int>& word) {
  SimplexId cur = base;
  int level = base_level;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > level) throw InvalidArgument("degeneracy index out of range");
    cur = s.degen(level, *it, cur);
    ++level;
  }
  return cur;
}

std::vector<SimplexId> nondegenerate(const TruncatedSSet& s, int n) {
  std::vector<SimplexId> out;
  for (SimplexId x = 0; x < s.count(n); ++x)
    if (!is_degenerate(s, n, x)) out.push_back(x);
  return out;
}

std::vector<Violation> check_simplicial_map(const SimplicialMap& map) {
  std::vector<Violation> out;
  if (!map.source || !map.target) {
    out.push_back({"missing source or target", 0, kNoSimplex});
    return out;
  }
  const TruncatedSSet& x = *map.source;
  const TruncatedSSet& y = *map.target;
  const int top = map.top_level();
  if (top < 0 || top > std::min(x.dim_cap(), y.dim_cap())) {
    out.push_back({"assignment levels exceed a dimension cap", top, kNoSimplex});
    return out;
  }
  for (int n = 0; n <= top; ++n) {
    const auto& f = map.assignment[n];
    if (f.size() != static_cast<std::size_t>(x.count(n))) {
      out.push_back({"assignment length", n, kNoSimplex});
      return out;
    }
    for (SimplexId a = 0; a < x.count(n); ++a)
      if (f[a] < 0 || f[a] >= y.count(n)) out.push_back({"assignment out of range", n, a});
  }
  if (!out.empty()) return out;
  for (int n = 0; n <= top; ++n) {
    const auto& f = map.assignment[n];
    for (SimplexId a = 0; a < x.count(n); ++a) {
      if (n > 0)
        for (int i = 0; i <= n; ++i)
          if (map.assignment[n - 1][x.face(n, i, a)] != y.face(n, i, f[a]))
            out.push_back({"f d_" + std::to_string(i) + " = d_" + std::to_string(i) + " f", n, a});
      if (n < top)
        for (int i = 0; i <= n; ++i)
          if (map.assignment[n + 1][x.degen(n, i, a)] != y.degen(n, i, f[a]))
            out.push_back({"f s_" + std::to_string(i) + " = s_" + std::to_string(i) + " f", n, a});
    }
  }
  return out;
}

bool check_isomorphism(const TruncatedSSet& x, const TruncatedSSet& y,
                       const std::vector<std::vector<SimplexId>>& bijection,
                       std::vector<Violation>* problems) {
  std::vector<Violation> local;
  auto& out = problems ? *problems : local;
  const std::size_t before = out.size();
  if (x.dim_cap() != y.dim_cap() || bijection.size() != static_cast<std::size_t>(x.dim_cap() + 1)) {
    out.push_back({"dimension caps differ", 0, kNoSimplex});
    return false;
  }
  for (int n = 0; n <= x.dim_cap(); ++n) {
    if (x.count(n) != y.count(n) || bijection[n].size() != static_cast<std::size_t>(x.count(n))) {
      out.push_back({"level sizes differ", n, kNoSimplex});
      return false;
    }
    std::vector<bool> seen(y.count(n), false);
    for (SimplexId a = 0; a < x.count(n); ++a) {
      const SimplexId b = bijection[n][a];
      if (b < 0 || b >= y.count(n) || seen[b]) {
        out.push_back({"not a bijection", n, a});
        return false;
      }
      seen[b] = true;
    }
  }
  for (int n = 0; n <= x.dim_cap(); ++n)
    for (SimplexId a = 0; a < x.count(n); ++a) {
      const SimplexId b = bijection[n][a];
      if (n > 0)
        for (int i = 0; i <= n; ++i)
          if (bijection[n - 1][x.face(n, i, a)] != y.face(n, i, b))
            out.push_back({"d_" + std::to_string(i) + " differs", n, a});
      if (n < x.dim_cap())
        for (int i = 0; i <= n; ++i)
          if (bijection[n + 1][x.degen(n, i, a)] != y.degen(n, i, b))
            out.push_back({"s_" + std::to_string(i) + " differs", n, a});
    }
  return out.size() == before;
}

TruncatedSSet permute(const TruncatedSSet& s, const std::vector<std::vector<SimplexId>>& perm) {
  const int cap = s.dim_cap();
  TruncatedSSet out(cap);
  for (int n = 0; n <= cap; ++n) out.reset_level(n, s.count(n));
  for (int n = 0; n <= cap; ++n) {
    const Level& src = s.level(n);
    Level& dst = out.mutable_level(n);
    for (SimplexId x = 0; x < src.count; ++x) {
      const SimplexId nx = perm[n][x];
      for (std::size_t i = 0; i < src.faces.size(); ++i) dst.faces[i][nx] = perm[n - 1][src.faces[i][x]];
      for (std::size_t i = 0; i < src.degens.size(); ++i)
        dst.degens[i][nx] = perm[n + 1][src.degens[i][x]];
    }
    if (!src.labels.empty()) {
      dst.labels.resize(src.count);
      for (SimplexId x = 0; x < src.count; ++x) dst.labels[perm[n][x]] = src.labels[x];
    }
  }
  return out;
}

namespace {

std::string sequence_label(const std::vector<int>& key) {
  std::string out = "(";
  for (std::size_t t = 0; t < key.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(key[t]);
  }
  return out + ")";
}

// Nerve of a finite poset: m-simplices are weakly increasing chains of length m+1.
TruncatedSSet chain_nerve(int elements, const std::vector<std::vector<bool>>& leq, int dim_cap) {
  detail::KeyedLevels levels(dim_cap);
  std::vector<detail::Key> frontier;
  for (int a = 0; a < elements; ++a) frontier.push_back({a});
  for (int n = 0; n <= dim_cap; ++n) {
    std::sort(frontier.begin(), frontier.end());
    for (const auto& key : frontier) levels.add(n, key);
    std::vector<detail::Key> next;
    for (const auto& key : frontier)
      for (int b = 0; b < elements; ++b)
        if (leq[key.back()][b]) {
          auto k = key;
          k.push_back(b);
          next.push_back(std::move(k));
        }
    frontier = std::move(next);
  }
  auto out = detail::assemble(
      levels,
      [](int, int i, const detail::Key& k) {
        auto r = k;
        r.erase(r.begin() + i);
        return r;
      },
      [](int, int i, const detail::Key& k) {
        auto r = k;
        r.insert(r.begin() + i, k[i]);
        return r;
      });
  for (int n = 0; n <= dim_cap; ++n) {
    Level& lv = out.mutable_level(n);
    for (const auto& key : levels.keys(n)) lv.labels.push_back(sequence_label(key));
  }
  return out;
}

}  // namespace

TruncatedSSet standard_simplex(int n, int dim_cap) {
  if (n < 0) throw InvalidArgument("negative simplex dimension");
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) leq[a][b] = a <= b;
  return chain_nerve(n + 1, leq, dim_cap);
}

TruncatedSSet poset_nerve(const std::vector<std::vector<bool>>& leq, int dim_cap) {
  const int size = static_cast<int>(leq.size());
  for (int a = 0; a < size; ++a) {
    if (leq[a].size() != leq.size()) throw InvalidArgument("order relation is not square");
    if (!leq[a][a]) throw InvalidArgument("order relation is not reflexive");
    for (int b = 0; b < size; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) throw InvalidArgument("order relation is not antisymmetric");
      for (int c = 0; c < size; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw InvalidArgument("order relation is not transitive");
    }
  }
  return chain_nerve(size, leq, dim_cap);
}

}  // namespace hcn
