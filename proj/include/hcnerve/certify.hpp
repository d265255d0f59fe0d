#pragma once

#include <string>
#include <vector>

#include "hcnerve/homology.hpp"
#include "hcnerve/sset.hpp"

namespace hcn {

struct Pi0Check {
  bool bijection = false;
  int source_components = 0;
  int target_components = 0;
  std::string detail;
};

// pi_1 at the smallest vertex of one source component against pi_1 at its
// image, compared through the induced map on loop classes.
struct Pi1Check {
  SimplexId source_base = kNoSimplex;
  SimplexId target_base = kNoSimplex;
  int source_order = 0;
  int target_order = 0;
  bool iso = false;
  std::string detail;
};

// H_k(f) is an isomorphism when the mapping cone is acyclic in degree k, the
// groups agree abstractly, and degree k-1 already passed: surjectivity comes
// from the cone and injectivity from finitely generated abelian groups being
// Hopfian.
struct HomologyCheck {
  int k = 0;
  HomologyGroup source;
  HomologyGroup target;
  HomologyGroup cone;
  bool iso = false;
};

struct CertifyReport {
  int through = 0;
  Pi0Check pi0;
  std::vector<Pi1Check> pi1;
  std::vector<HomologyCheck> homology;
  int first_failing_degree = -1;

  bool pi1_iso() const;
  bool homology_iso() const { return first_failing_degree < 0; }
  bool ok() const { return pi0.bijection && pi1_iso() && homology_iso(); }
};

struct CertifyOptions {
  int threads = 1;
};

// Requires f to be simplicial, both sides Kan up to min(3, cap) and
// through <= cap - 1 on both sides; throws InvalidArgument or
// TruncationError naming the failed precondition.
CertifyReport certify_equivalence(const SimplicialMap& f, int through, const CertifyOptions& options = {});

}  // namespace hcn
