#include "hcnerve/smith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

namespace hcn {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  const int r = static_cast<int>(dense.size());
  const int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
  SparseIntMatrix m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i)
      if (dense[i][j] != 0) m.columns[j].emplace_back(i, dense[i][j]);
  return m;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows, std::vector<Integer>(cols));
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) d[i][j] = v;
  return d;
}

void SparseIntMatrix::add(int r, int c, const Integer& v) {
  auto& col = columns[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else if (v != 0) {
    col.insert(it, {r, v});
  }
}

std::vector<Integer> normalize_invariant_factors(std::vector<Integer> d) {
  for (auto& x : d)
    if (x < 0) x = -x;
  d.erase(std::remove(d.begin(), d.end(), Integer(0)), d.end());
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = boost::multiprecision::gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

std::vector<Integer> smith_invariants_dense(std::vector<std::vector<Integer>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<Integer> diagonal;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return normalize_invariant_factors(std::move(diagonal));
      std::swap(a[t], a[pr]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
      const Integer p = a[t][t];
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / p;
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / p;
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diagonal.push_back(a[t][t]);
  }
  return normalize_invariant_factors(std::move(diagonal));
}

namespace {

struct Overflow {};

inline long long checked_axpy(long long a, long long f, long long b) {
  long long prod, sum;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &sum)) throw Overflow{};
  return sum;
}
inline Integer checked_axpy(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

template <class T>
T narrow(const Integer& v);
template <>
long long narrow<long long>(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) throw Overflow{};
  return static_cast<long long>(v);
}
template <>
Integer narrow<Integer>(const Integer& v) {
  return v;
}

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

// Eliminates unit pivots with column and row operations. Returns the number
// of unit pivots and leaves the untouched remainder as a dense matrix.
template <class T>
int eliminate_units(const SparseIntMatrix& m, std::vector<std::vector<Integer>>& rest) {
  using Entry = std::pair<int, T>;
  std::vector<std::vector<Entry>> cols(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.columns[j]) cols[j].emplace_back(i, narrow<T>(v));
  std::vector<std::vector<int>> row_index(m.rows);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& e : cols[j]) row_index[e.first].push_back(j);
  std::vector<char> col_alive(m.cols, 1), row_alive(m.rows, 1);

  auto find = [&](int j, int r) -> const T* {
    auto& col = cols[j];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, int row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? &it->second : nullptr;
  };

  int units = 0;
  bool progress = true;
  std::vector<Entry> merged;
  while (progress) {
    progress = false;
    std::vector<int> order;
    for (int j = 0; j < m.cols; ++j)
      if (col_alive[j] && !cols[j].empty()) order.push_back(j);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cols[a].size() < cols[b].size(); });
    for (int c : order) {
      if (!col_alive[c] || cols[c].empty()) continue;
      int pivot_row = -1;
      std::size_t best = 0;
      for (const auto& [r, v] : cols[c])
        if (is_unit(v) && (pivot_row < 0 || row_index[r].size() < best)) {
          pivot_row = r;
          best = row_index[r].size();
        }
      if (pivot_row < 0) continue;
      const T pv = *find(c, pivot_row);
      std::vector<int> touched = std::move(row_index[pivot_row]);
      row_index[pivot_row].clear();
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int c2 : touched) {
        if (c2 == c || !col_alive[c2]) continue;
        const T* hit = find(c2, pivot_row);
        if (!hit) continue;
        const T f = *hit * pv;  // pv = +-1, so this is hit / pv
        merged.clear();
        auto a = cols[c2].begin(), ae = cols[c2].end();
        auto b = cols[c].begin(), be = cols[c].end();
        while (a != ae || b != be) {
          if (b == be || (a != ae && a->first < b->first)) {
            merged.push_back(*a++);
          } else if (a == ae || b->first < a->first) {
            T v = checked_axpy(T(0), f, b->second);
            if (v != 0) {
              merged.emplace_back(b->first, v);
              row_index[b->first].push_back(c2);
            }
            ++b;
          } else {
            T v = checked_axpy(a->second, f, b->second);
            if (v != 0) merged.emplace_back(a->first, v);
            ++a;
            ++b;
          }
        }
        cols[c2].swap(merged);
      }
      col_alive[c] = 0;
      row_alive[pivot_row] = 0;
      cols[c].clear();
      ++units;
      progress = true;
    }
  }

  std::vector<int> live_rows(m.rows, -1);
  int nr = 0;
  for (int i = 0; i < m.rows; ++i)
    if (row_alive[i]) live_rows[i] = nr++;
  rest.clear();
  std::vector<int> live_cols;
  for (int j = 0; j < m.cols; ++j)
    if (col_alive[j] && !cols[j].empty()) live_cols.push_back(j);
  rest.assign(nr, std::vector<Integer>(live_cols.size()));
  for (std::size_t k = 0; k < live_cols.size(); ++k)
    for (const auto& [r, v] : cols[live_cols[k]]) rest[live_rows[r]][k] = Integer(v);
  // Rows that ended up empty carry no information.
  rest.erase(std::remove_if(rest.begin(), rest.end(),
                            [](const auto& row) { return std::all_of(row.begin(), row.end(), [](const Integer& v) { return v == 0; }); }),
             rest.end());
  return units;
}

}  // namespace

std::vector<Integer> smith_invariants(const SparseIntMatrix& m) {
  std::vector<std::vector<Integer>> rest;
  int units;
  try {
    units = eliminate_units<long long>(m, rest);
  } catch (const Overflow&) {
    units = eliminate_units<Integer>(m, rest);
  }
  std::vector<Integer> core = smith_invariants_dense(std::move(rest));
  std::vector<Integer> out(units, Integer(1));
  out.insert(out.end(), core.begin(), core.end());
  return normalize_invariant_factors(std::move(out));
}

}  // namespace hcn
