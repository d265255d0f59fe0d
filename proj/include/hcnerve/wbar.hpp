#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hcnerve/groupoid.hpp"
#include "hcnerve/sset.hpp"

namespace hcn {

// An n-simplex of W-bar: objects x_0..x_n and arrows g_0..g_{n-1} where g_j
// is a j-arrow x_{n-j-1} -> x_{n-j}.
struct WBarSimplex {
  std::vector<int> objects;
  std::vector<ArrowId> arrows;

  int dim() const { return static_cast<int>(objects.size()) - 1; }
  bool operator==(const WBarSimplex&) const = default;
};

// Tuple formulas for the structure maps. Both check degree and endpoint
// bookkeeping and throw BuildError on a mismatch.
WBarSimplex wbar_face(const SimplicialGroupoid& g, const WBarSimplex& x, int i);
WBarSimplex wbar_degeneracy(const SimplicialGroupoid& g, const WBarSimplex& x, int i);

struct WBarComplex {
  TruncatedSSet sset;
  std::vector<std::vector<WBarSimplex>> simplices;  // simplices[n][id]
};

// Levels 0..dim_cap, enumerated lexicographically in (x_0, g_{n-1}, ..., g_0).
// Needs the groupoid through degree dim_cap - 1.
WBarComplex build_wbar_complex(const SimplicialGroupoid& g, int dim_cap);
TruncatedSSet build_wbar(const SimplicialGroupoid& g, int dim_cap);

// How the total space W G = G x W-bar G twists one face by the arrow
// tau(b) = g_{n-1} of the base simplex (the arrow out of x_0).
enum class TwistConvention {
  kFirstFaceLeft,   // d_0(h, b) = (tau(b) . d_0 h, d_0 b)
  kFirstFaceRight,  // d_0(h, b) = (d_0 h . tau(b), d_0 b)
  kLastFaceLeft,    // d_n(h, b) = (tau(b) . d_n h, d_n b)
  kLastFaceRight,   // d_n(h, b) = (d_n h . tau(b), d_n b)
};

// The convention used for W. It is the one under which the right action
// h . g is simplicial and W -> W-bar is a principal fibration for the face
// formulas of build_wbar; it makes W G the shift of W-bar G, with
// (h, (g_0..g_{n-1})) the (n+1)-simplex (g_0..g_{n-1}, h) and the
// projection its d_0.
inline constexpr TwistConvention kWTwist = TwistConvention::kFirstFaceLeft;

std::string to_string(TwistConvention c);

struct WTotal {
  TwistConvention convention = kWTwist;
  std::shared_ptr<const TruncatedSSet> base;   // W-bar G
  std::shared_ptr<const TruncatedSSet> total;  // W G; simplex (b, h) has id b * |G_n| + h
  SimplicialMap projection;                    // total -> base
  std::vector<int> group_orders;               // |G_n|
  std::vector<std::vector<SimplexId>> action;  // action[n][w * |G_n| + g] = w . g
};

// Simplicial group case only (one object); needs the group through degree
// dim_cap. Builds with `convention` and throws BuildError naming the broken
// identity if the result is not a simplicial set with a simplicial action.
WTotal build_w_total(const SimplicialGroupoid& g, int dim_cap, TwistConvention convention = kWTwist);
// Same construction without the structural check.
WTotal assemble_w_total(const SimplicialGroupoid& g, int dim_cap, TwistConvention convention);

// Simplicial identities of W plus equivariance of the action tables.
std::vector<std::string> w_structural_problems(const WTotal& w, const SimplicialGroupoid& g);

// Every convention for which w_structural_problems comes back empty.
std::vector<TwistConvention> passing_twist_conventions(const SimplicialGroupoid& g, int dim_cap);

struct ClauseResult {
  bool passed = false;
  std::string detail;
};

struct PrincipalFibrationReport {
  ClauseResult freeness;       // (a) levelwise free right action
  ClauseResult quotient;       // (b) W / G = W-bar G via the projection
  ClauseResult lifting;        // (c) horn lifting for the projection
  ClauseResult contractible;   // (d) pi_0 = 1, pi_1 = 1, reduced homology 0

  bool ok() const { return freeness.passed && quotient.passed && lifting.passed && contractible.passed; }
};

struct FibrationOptions {
  int lift_up_to = -1;        // default: dim cap
  int homology_through = -1;  // default: dim cap - 1
  int threads = 1;
};

PrincipalFibrationReport check_principal_fibration(const WTotal& w, const SimplicialGroupoid& g,
                                                   const FibrationOptions& options = {});

}  // namespace hcn
