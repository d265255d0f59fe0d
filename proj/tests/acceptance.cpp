// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to hcnerve executable> [criterion number]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "hcnerve/certify.hpp"
#include "hcnerve/comparison.hpp"
#include "hcnerve/homotopy.hpp"
#include "hcnerve/kan.hpp"
#include "hcnerve/pipeline.hpp"
#include "hcnerve/wbar.hpp"
#include "oracles.hpp"

using namespace hcn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Case {
  std::string spec;
  int dim;
  std::string name;
};

const std::vector<Case> kCases = {
    {"cyclic:2", 4, "C2"},
    {"cyclic:3", 4, "C3"},
    {"sym:3", 3, "S3"},
    {"xmod:c2,c2,trivial", 4, "xmod(C2,C2)"},
    {"two-object:cyclic:2", 3, "two-object C2"},
};

// Everything built once per instance.
struct Built {
  Case c;
  Instance inst;
  Comparison cmp;
  std::optional<WTotal> w;
  double build_seconds = 0;
};

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (failures_.size() < 5) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool report(bool print, int number) const {
    if (!print) return passed_;
    std::ostringstream line;
    line << "criterion " << number << " " << (passed_ ? "PASS" : "FAIL") << ": " << title_;
    for (const auto& n : notes_) line << "; " << n;
    for (const auto& f : failures_) line << "; FAILED " << f;
    std::cout << line.str() << std::endl;
    return passed_;
  }

 private:
  std::string title_;
  bool passed_ = true;
  std::vector<std::string> notes_, failures_;
};

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

int run_cli(const std::string& cli, const std::string& args) {
  const int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <hcnerve executable> [criterion]\n";
    return 64;
  }
  const std::string cli = argv[1];
  const int only = argc > 2 ? std::atoi(argv[2]) : 0;
  if (only < 0 || only > 8) {
    std::cerr << "criterion must be between 1 and 8\n";
    return 64;
  }
  std::vector<Built> built;
  std::vector<std::function<bool(bool)>> criteria;
  criteria.push_back([&](bool print) {
    Criterion c("structural soundness of W-bar, W and N");
    for (const Case& k : kCases) {
      const auto start = Clock::now();
      Built b{k, parse_instance(k.spec, k.dim), build_comparison(parse_instance(k.spec, k.dim).groupoid, k.dim), {}};
      if (b.inst.groupoid.objects() == 1) b.w = build_w_total(b.inst.groupoid, k.dim);
      c.require(validate(b.cmp.wbar->sset).empty(), k.name + " W-bar");
      c.require(validate(b.cmp.nerve->sset).empty(), k.name + " N");
      if (b.w) c.require(validate(*b.w->total).empty(), k.name + " W");
      b.build_seconds = seconds_since(start);
      c.require(b.build_seconds < 120, k.name + " took " + fmt(b.build_seconds));
      c.note(k.name + " N=" + std::to_string(k.dim) + " in " + fmt(b.build_seconds));
      built.push_back(std::move(b));
    }
    return c.report(print, 1);
  });
  criteria.push_back([&](bool print) {
    Criterion c("tuple and representable W-bar agree");
    for (const Built& b : built) {
      const RepresentableWbar rep = wbar_via_representable(b.inst.groupoid, b.c.dim);
      c.require(check_isomorphism(rep.sset, b.cmp.wbar->sset, rep.bijection), b.c.name);
    }
    c.note(std::to_string(built.size()) + " instances, all levels");
    return c.report(print, 2);
  });
  criteria.push_back([&](bool print) {
    Criterion c("phi: phi_1 = id, iota vertices, naturality, uniqueness");
    c.require(build_phi(CTilde(1)).values.front() == DeltaWbar(1).generator(1), "phi_1 is not the identity");
    for (int n = 0; n <= 4; ++n) c.require(phi_functor_problems(CTilde(n)).empty(), "phi_" + std::to_string(n));
    const auto iota = iota_lemma_problems(4);
    c.require(iota.empty(), iota.empty() ? "" : iota.front());
    const auto nat = naturality_problems(3);
    c.require(nat.empty(), nat.empty() ? "" : nat.front());
    const UniquenessReport u = check_uniqueness(3);
    c.require(u.only_phi, "uniqueness: " + std::to_string(u.natural_families) + " natural families");
    std::string counts;
    for (std::size_t f : u.functors) counts += (counts.empty() ? "" : ",") + std::to_string(f);
    c.note("identity-on-objects functors per n: " + counts + "; natural families: " +
           std::to_string(u.natural_families));
    return c.report(print, 3);
  });
  criteria.push_back([&](bool print) {
    Criterion c("Kan through dimension 3 and horn lifting for W -> W-bar");
    std::size_t horns = 0, lifts = 0;
    for (const Built& b : built) {
      const KanReport kw = is_kan(b.cmp.wbar->sset, 3), kn = is_kan(b.cmp.nerve->sset, 3);
      c.require(kw.ok, b.c.name + " W-bar " + (kw.ok ? "" : kw.failing->to_string()));
      c.require(kn.ok, b.c.name + " N " + (kn.ok ? "" : kn.failing->to_string()));
      horns += kw.horns_checked + kn.horns_checked;
      if (b.w) {
        const LiftingReport l = has_horn_lifting(b.w->projection, 3);
        c.require(l.ok, b.c.name + " lifting");
        lifts += l.problems_checked;
      }
    }
    c.note(std::to_string(horns) + " horns filled, " + std::to_string(lifts) + " lifting problems solved");
    return c.report(print, 4);
  });
  criteria.push_back([&](bool print) {
    Criterion c("W is a principal fibration over W-bar with contractible total space");
    for (const Built& b : built) {
      if (!b.w) continue;
      FibrationOptions opts;
      opts.lift_up_to = 3;
      opts.homology_through = 2;
      const PrincipalFibrationReport r = check_principal_fibration(*b.w, b.inst.groupoid, opts);
      c.require(r.freeness.passed, b.c.name + " freeness: " + r.freeness.detail);
      c.require(r.quotient.passed, b.c.name + " quotient: " + r.quotient.detail);
      c.require(r.contractible.passed, b.c.name + " contractible: " + r.contractible.detail);
      c.note(b.c.name + " ok");
    }
    return c.report(print, 5);
  });
  criteria.push_back([&](bool print) {
    Criterion c("certify_equivalence on W-bar -> N");
    const std::map<std::string, int> orders{{"C2", 2}, {"C3", 3}, {"S3", 6}};
    for (const Built& b : built) {
      const int through = std::min(3, b.c.dim - 1);
      const CertifyReport r = certify_equivalence(b.cmp.map, through);
      c.require(r.ok(), b.c.name + " at degree " + std::to_string(r.first_failing_degree));
      if (auto it = orders.find(b.c.name); it != orders.end())
        c.require(!r.pi1.empty() && r.pi1.front().source_order == it->second &&
                      r.pi1.front().target_order == it->second,
                  b.c.name + " pi1 order");
      std::string hs;
      for (const auto& h : r.homology) hs += (hs.empty() ? "" : ",") + h.source.to_string();
      c.note(b.c.name + " pi1 order " + std::to_string(r.pi1.empty() ? 0 : r.pi1.front().source_order) + ", H = " +
             hs);
      if (b.c.name == "C2") {
        const auto oracle = oracle::bar_homology(cyclic(2), 3);
        c.require(homology(b.cmp.wbar->sset, 3) == oracle, "C2 W-bar homology vs bar resolution");
        c.require(homology(b.cmp.nerve->sset, 3) == oracle, "C2 N homology vs bar resolution");
      }
    }
    return c.report(print, 6);
  });
  criteria.push_back([&](bool print) {
    Criterion c("constant groups: bijection onto the classical nerve, |level n| = |H|^n");
    for (const Built& b : built) {
      if (!b.inst.constant || b.inst.groupoid.objects() != 1) continue;
      const SimplicialGroupoid& g = b.inst.groupoid;
      c.require(is_levelwise_bijective(b.cmp.map), b.c.name + " bijective");
      const ClassicalNerve cl = classical_nerve(g, b.c.dim);
      c.require(check_isomorphism(b.cmp.wbar->sset, cl.sset, wbar_to_classical(g, *b.cmp.wbar, cl)),
                b.c.name + " W-bar vs classical");
      c.require(check_isomorphism(b.cmp.nerve->sset, cl.sset, nerve_to_classical(g, *b.cmp.nerve, cl)),
                b.c.name + " N vs classical");
      long expected = 1;
      for (int n = 0; n <= b.c.dim; ++n, expected *= g.count(0))
        c.require(b.cmp.nerve->sset.count(n) == expected && b.cmp.wbar->sset.count(n) == expected,
                  b.c.name + " count at level " + std::to_string(n));
      c.note(b.c.name + " ok");
    }
    return c.report(print, 7);
  });
  criteria.push_back([&](bool print) {
    Criterion c("verify-theorem exits 0 on every instance");
    for (const Case& k : kCases) {
      const auto start = Clock::now();
      const bool groupoid = k.spec.rfind("two-object:", 0) == 0;
      const std::string args = std::string("verify-theorem ") + (groupoid ? "--groupoid " : "--group ") + k.spec +
                               " --dim " + std::to_string(k.dim) + " --through " + std::to_string(k.dim - 1);
      const int code = run_cli(cli, args);
      const double t = seconds_since(start);
      c.require(code == 0, k.name + " exit " + std::to_string(code));
      c.require(t < 600, k.name + " took " + fmt(t));
      c.note(k.name + " " + fmt(t));
    }
    return c.report(print, 8);
  });

  bool all = true;
  for (int k = 1; k <= 8; ++k) {
    // criterion 1 builds the instances every other criterion reads
    if (only == 0 || k == only || k == 1) {
      const bool ok = criteria[k - 1](only == 0 || k == only);
      if (only == 0 || k == only) all &= ok;
    }
  }
  if (only == 0) std::cout << (all ? "acceptance: all criteria passed" : "acceptance: some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
