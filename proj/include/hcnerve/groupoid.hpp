#pragma once

#include <string>
#include <vector>

#include "hcnerve/group.hpp"
#include "hcnerve/monotone.hpp"
#include "hcnerve/sset.hpp"

namespace hcn {

using ArrowId = std::int32_t;

// The n-arrows of a simplicial groupoid: an ordinary finite groupoid plus the
// face and degeneracy tables into the neighbouring levels.
struct GroupoidLevel {
  std::int32_t count = 0;
  std::vector<int> source, target;       // per arrow
  std::vector<ArrowId> identity;         // per object
  std::vector<ArrowId> inverse;          // per arrow
  std::vector<ArrowId> composition;      // count*count, [g*count+f] = g o f, -1 if not composable
  std::vector<std::vector<ArrowId>> faces;   // as in Level
  std::vector<std::vector<ArrowId>> degens;

  bool operator==(const GroupoidLevel&) const = default;
};

// A simplicial groupoid with finitely many objects and finite levels 0..dim_cap.
// A simplicial group is the one-object case.
class SimplicialGroupoid {
 public:
  SimplicialGroupoid() = default;
  SimplicialGroupoid(int objects, int dim_cap, std::string name = "");

  int objects() const { return objects_; }
  int dim_cap() const { return dim_cap_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const GroupoidLevel& level(int n) const;
  GroupoidLevel& mutable_level(int n);
  // Rebuilds the per-level hom index after the tables are filled.
  void finalize();

  std::int32_t count(int n) const { return level(n).count; }
  int source(int n, ArrowId g) const { return levels_[n].source[g]; }
  int target(int n, ArrowId g) const { return levels_[n].target[g]; }
  ArrowId identity(int n, int x) const { return level(n).identity[x]; }
  ArrowId inverse(int n, ArrowId g) const { return levels_[n].inverse[g]; }
  // g o f; throws BuildError if target(f) != source(g).
  ArrowId compose(int n, ArrowId g, ArrowId f) const;
  ArrowId face(int n, int i, ArrowId g) const { return levels_[n].faces[i][g]; }
  ArrowId degen(int n, int i, ArrowId g) const;
  // alpha^* g for g an arrow of degree `codomain`.
  ArrowId apply(const Monotone& alpha, int codomain, ArrowId g) const;

  // n-arrows x -> y in increasing id order.
  const std::vector<ArrowId>& hom(int n, int x, int y) const { return homs_[n][x * objects_ + y]; }

  // All arrows as one truncated simplicial set (faces/degeneracies only).
  TruncatedSSet arrows() const;
  // The hom simplicial set G(x, y).
  TruncatedSSet hom_sset(int x, int y) const;

  bool operator==(const SimplicialGroupoid& o) const {
    return objects_ == o.objects_ && dim_cap_ == o.dim_cap_ && levels_ == o.levels_;
  }

 private:
  int objects_ = 0;
  int dim_cap_ = 0;
  std::string name_;
  std::vector<GroupoidLevel> levels_;
  std::vector<std::vector<std::vector<ArrowId>>> homs_;
};

// Groupoid laws per level, functoriality of faces and degeneracies, and the
// simplicial identities on arrows. Empty iff valid.
std::vector<std::string> validate_groupoid(const SimplicialGroupoid& g);

// The constant simplicial group on H: one object, every level H, all
// structure maps identities.
SimplicialGroupoid constant_simplicial(const FiniteGroup& h, int dim_cap);

// A crossed module boundary : M -> P with P acting on M from the left.
struct CrossedModule {
  FiniteGroup m;
  FiniteGroup p;
  std::vector<int> boundary;              // per element of M
  std::vector<std::vector<int>> action;   // action[p][m] = p . m

  // Homomorphism, action, equivariance and Peiffer violations.
  std::vector<std::string> violations() const;
};

// boundary trivial, action trivial (Peiffer needs M abelian).
CrossedModule trivial_crossed_module(const FiniteGroup& m, const FiniteGroup& p);
// M = P, boundary the identity, action by conjugation.
CrossedModule identity_crossed_module(const FiniteGroup& g);

// Nerve of the strict 2-group of a crossed module, as a simplicial group:
// G_n = M^n x| P, an element (m_1..m_n; p) being the string of arrows
// p -> d(m_1)p -> d(m_2)d(m_1)p -> ... in the groupoid M x| P => P.
SimplicialGroupoid crossed_module_simplicial(const CrossedModule& xm, int dim_cap);

// Objects {0, 1}, each hom set a copy of H with composition the group
// multiplication, constant simplicial structure.
SimplicialGroupoid two_object_groupoid(const FiniteGroup& h, int dim_cap);

// Arrow index of (m_1..m_n; p) in crossed_module_simplicial.
ArrowId crossed_module_index(const CrossedModule& xm, const std::vector<int>& ms, int p);

// A map of simplicial groupoids given by its object map and one arrow map per level.
struct GroupoidFunctorData {
  std::vector<int> objects;
  std::vector<std::vector<ArrowId>> arrows;
};

std::vector<std::string> check_groupoid_functor(const GroupoidFunctorData& f, const SimplicialGroupoid& from,
                                                const SimplicialGroupoid& to);

}  // namespace hcn
