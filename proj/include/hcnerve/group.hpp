#pragma once

#include <string>
#include <vector>

namespace hcn {

// Largest group or groupoid level the builders will tabulate.
inline constexpr int kMaxTableSize = 2048;

// A finite group as an explicit multiplication table on {0..order-1}.
// Element 0 is always the identity.
class FiniteGroup {
 public:
  static constexpr int kIdentity = 0;

  // Throws InvalidArgument unless the table is a group with identity 0.
  static FiniteGroup from_table(std::vector<std::vector<int>> mul, std::string name = "");

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }
  const std::vector<int>& inverses() const { return inv_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const;

  bool operator==(const FiniteGroup& other) const { return mul_ == other.mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::string name_;
};

// Law violations of a raw table (closure, identity 0, associativity, inverses).
std::vector<std::string> group_law_violations(const std::vector<std::vector<int>>& mul);

FiniteGroup cyclic(int m);
// Permutations of {0..m-1} in lexicographic order, (a*b)(x) = a(b(x)); m <= 5.
FiniteGroup symmetric(int m);
// Componentwise product; (g, h) is element g * |H| + h.
FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

// Permutation of element index in symmetric(m).
std::vector<int> permutation_of(int m, int index);

}  // namespace hcn
