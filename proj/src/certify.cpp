#include "hcnerve/certify.hpp"

#include <algorithm>

#include "hcnerve/errors.hpp"
#include "hcnerve/homotopy.hpp"
#include "hcnerve/kan.hpp"

namespace hcn {

bool CertifyReport::pi1_iso() const {
  return !pi1.empty() && std::all_of(pi1.begin(), pi1.end(), [](const Pi1Check& c) { return c.iso; });
}

namespace {

Pi1Check compare_pi1(const SimplicialMap& f, SimplexId base) {
  Pi1Check check;
  check.source_base = base;
  check.target_base = f.assignment[0][base];
  const Pi1Table src = pi1(*f.source, base, {false, 1});
  const Pi1Table tgt = pi1(*f.target, check.target_base, {false, 1});
  check.source_order = src.order();
  check.target_order = tgt.order();
  if (!src.verified() || !tgt.verified()) {
    check.detail = "group laws fail: " + (src.verified() ? tgt.problems.front() : src.problems.front());
    return check;
  }
  std::vector<int> image(src.order(), -1);
  for (const auto& [loop, cls] : src.class_of) {
    const int target_class = tgt.class_of.at(f.assignment[1][loop]);
    if (image[cls] < 0) image[cls] = target_class;
    else if (image[cls] != target_class) {
      check.detail = "induced map is not well defined on class " + std::to_string(cls);
      return check;
    }
  }
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (image[src.mul[a][b]] != tgt.mul[image[a]][image[b]]) {
        check.detail = "induced map is not a homomorphism";
        return check;
      }
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (src.order() != tgt.order() || std::unique(sorted.begin(), sorted.end()) != sorted.end()) {
    check.detail = "induced map is not bijective (orders " + std::to_string(src.order()) + " and " +
                   std::to_string(tgt.order()) + ")";
    return check;
  }
  check.iso = true;
  check.detail = "isomorphism of groups of order " + std::to_string(src.order());
  return check;
}

}  // namespace

CertifyReport certify_equivalence(const SimplicialMap& f, int through, const CertifyOptions& options) {
  if (!f.source || !f.target) throw InvalidArgument("map without source or target");
  if (auto v = check_simplicial_map(f); !v.empty())
    throw InvalidArgument("map is not simplicial: " + v.front().to_string());
  const int cap = std::min({f.source->dim_cap(), f.target->dim_cap(), f.top_level()});
  if (through < 0) throw InvalidArgument("negative homology degree");
  if (through > cap - 1) throw TruncationError("certification through degree " + std::to_string(through) +
                                               " needs the cap to be at least " + std::to_string(through + 1));
  const int kan_depth = std::min(3, cap);
  for (const auto& [side, sset] : {std::pair{"source", f.source}, std::pair{"target", f.target}}) {
    const KanReport kan = is_kan(*sset, std::min(kan_depth, sset->dim_cap()), options.threads);
    if (!kan.ok) throw InvalidArgument(std::string(side) + " is not Kan: horn " + kan.failing->to_string());
  }

  CertifyReport report;
  report.through = through;

  const Components cs = pi0(*f.source), ct = pi0(*f.target);
  report.pi0.source_components = cs.count;
  report.pi0.target_components = ct.count;
  std::vector<int> image(cs.count, -1);
  for (SimplexId v = 0; v < f.source->count(0); ++v) image[cs.component_of[v]] = ct.component_of[f.assignment[0][v]];
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  report.pi0.bijection = cs.count == ct.count && std::unique(sorted.begin(), sorted.end()) == sorted.end();
  report.pi0.detail = report.pi0.bijection ? std::to_string(cs.count) + " component(s) matched"
                                           : "components " + std::to_string(cs.count) + " vs " +
                                                 std::to_string(ct.count) + " are not in bijection";

  for (SimplexId base : cs.representatives) report.pi1.push_back(compare_pi1(f, base));

  const auto hs = homology(*f.source, through);
  const auto ht = homology(*f.target, through);
  const auto hc = homology(mapping_cone(f, through + 1), through);
  bool previous = true;
  for (int k = 0; k <= through; ++k) {
    HomologyCheck c{k, hs[k], ht[k], hc[k], false};
    c.iso = previous && hc[k].is_zero() && hs[k] == ht[k];
    previous = c.iso;
    if (!c.iso && report.first_failing_degree < 0) report.first_failing_degree = k;
    report.homology.push_back(std::move(c));
  }
  return report;
}

}  // namespace hcn
