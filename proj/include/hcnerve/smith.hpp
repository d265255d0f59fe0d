#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

namespace hcn {

using Integer = boost::multiprecision::cpp_int;

// Column-major sparse integer matrix; each column holds its nonzero entries
// sorted by row.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Integer>>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
  std::vector<std::vector<Integer>> to_dense() const;
  // Adds v at (r, c), keeping the column sorted and dropping zeros.
  void add(int r, int c, const Integer& v);
};

// Nonzero invariant factors d_1 | d_2 | ... (all positive), exact.
// Unit pivots are eliminated sparsely first; the remaining core goes through
// a dense Smith reduction.
std::vector<Integer> smith_invariants(const SparseIntMatrix& m);

// Dense Smith reduction on its own.
std::vector<Integer> smith_invariants_dense(std::vector<std::vector<Integer>> m);

// The sorted list turned into a divisibility chain by gcd/lcm exchange.
std::vector<Integer> normalize_invariant_factors(std::vector<Integer> diagonal);

}  // namespace hcn
