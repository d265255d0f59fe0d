#include "hcnerve/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "hcnerve/certify.hpp"
#include "hcnerve/comparison.hpp"
#include "hcnerve/errors.hpp"
#include "hcnerve/homotopy.hpp"
#include "hcnerve/kan.hpp"
#include "hcnerve/wbar.hpp"

namespace hcn {

namespace {

int parse_size(const std::string& text, const std::string& spec) {
  if (text.empty() || text.size() > 4 || !std::all_of(text.begin(), text.end(), ::isdigit))
    throw InvalidArgument("bad size in '" + spec + "'");
  return std::stoi(text);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

}  // namespace

FiniteGroup parse_group(const std::string& spec) {
  if (spec == "trivial") return cyclic(1);
  if (starts_with(spec, "product:")) {
    const std::string rest = spec.substr(8);
    const auto star = rest.find('*');
    if (star == std::string::npos) throw InvalidArgument("product needs A*B in '" + spec + "'");
    return product(parse_group(rest.substr(0, star)), parse_group(rest.substr(star + 1)));
  }
  if (starts_with(spec, "cyclic:")) return cyclic(parse_size(spec.substr(7), spec));
  if (starts_with(spec, "sym:")) return symmetric(parse_size(spec.substr(4), spec));
  if (spec.size() > 1 && (spec[0] == 'c' || spec[0] == 'C')) return cyclic(parse_size(spec.substr(1), spec));
  if (spec.size() > 1 && (spec[0] == 's' || spec[0] == 'S')) return symmetric(parse_size(spec.substr(1), spec));
  throw InvalidArgument("unknown group '" + spec + "'");
}

Instance parse_instance(const std::string& spec, int dim_cap) {
  if (dim_cap < 0) throw InvalidArgument("negative dimension cap");
  Instance out;
  out.label = spec;
  if (starts_with(spec, "two-object:")) {
    out.groupoid = two_object_groupoid(parse_group(spec.substr(11)), dim_cap);
    out.constant = true;
  } else if (starts_with(spec, "xmod:")) {
    const auto parts = split(spec.substr(5), ',');
    if (parts.size() != 3) throw InvalidArgument("xmod needs M,P,trivial|id in '" + spec + "'");
    const FiniteGroup m = parse_group(parts[0]), p = parse_group(parts[1]);
    CrossedModule xm;
    if (parts[2] == "trivial") {
      if (!m.is_abelian()) throw InvalidArgument("a trivial crossed module needs M abelian");
      xm = trivial_crossed_module(m, p);
    } else if (parts[2] == "id") {
      if (!(m == p)) throw InvalidArgument("the identity crossed module needs M = P");
      xm = identity_crossed_module(p);
    } else {
      throw InvalidArgument("unknown crossed module kind '" + parts[2] + "'");
    }
    if (auto v = xm.violations(); !v.empty()) throw InvalidArgument("not a crossed module: " + v.front());
    out.groupoid = crossed_module_simplicial(xm, dim_cap);
  } else {
    const std::string group = starts_with(spec, "constant:") ? spec.substr(9) : spec;
    out.groupoid = constant_simplicial(parse_group(group), dim_cap);
    out.constant = true;
  }
  out.groupoid.set_name(spec);
  return out;
}

std::string to_string(Check c) {
  switch (c) {
    case Check::kIdentities: return "identities";
    case Check::kRestriction: return "restriction";
    case Check::kKan: return "kan";
    case Check::kFibration: return "fibration";
    case Check::kNaturality: return "naturality";
    case Check::kEquivalence: return "equivalence";
  }
  return "unknown";
}

std::vector<Check> all_checks() {
  return {Check::kIdentities, Check::kRestriction, Check::kKan,
          Check::kFibration,  Check::kNaturality,  Check::kEquivalence};
}

Check parse_check(const std::string& name) {
  for (Check c : all_checks())
    if (to_string(c) == name) return c;
  throw InvalidArgument("unknown check '" + name + "'");
}

std::vector<std::string> RunConfig::problems() const {
  std::vector<std::string> out;
  if (instance.empty()) out.push_back("no instance given");
  if (dim < 1) out.push_back("dimension cap must be at least 1");
  if (through < 0 || through > dim - 1) out.push_back("homology depth must satisfy 0 <= D <= N - 1");
  if (budget == 0) out.push_back("budget must be positive");
  if (threads < 1) out.push_back("thread count must be positive");
  return out;
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  try {
    c.instance = j.at("instance").get<std::string>();
    c.dim = j.value("dim", c.dim);
    c.through = j.value("through", c.through);
    c.budget = j.value("budget", c.budget);
    c.threads = j.value("threads", c.threads);
    if (j.contains("checks")) {
      c.checks.clear();
      for (const auto& name : j.at("checks")) c.checks.push_back(parse_check(name.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad run configuration: ") + e.what());
  }
  return c;
}

Json to_json(const RunConfig& c) {
  Json checks = Json::array();
  for (Check k : c.checks) checks.push_back(to_string(k));
  return {{"instance", c.instance}, {"dim", c.dim}, {"through", c.through}, {"checks", checks}, {"budget", c.budget}};
}

Json TheoremReport::to_json() const {
  Json checks = Json::array();
  for (const CheckResult& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  Json out = {{"schema", kSchemaVersion}, {"kind", "theorem-report"}, {"config", hcn::to_json(config)},
              {"checks", checks},        {"details", details},       {"exit_code", exit_code}};
  if (!error.empty()) out["error"] = error;
  return out;
}

std::string TheoremReport::summary() const {
  std::string out = "instance " + config.instance + ", N = " + std::to_string(config.dim) +
                    ", D = " + std::to_string(config.through) + "\n";
  for (const CheckResult& r : results) out += (r.passed ? "  PASS " : "  FAIL ") + r.name + ": " + r.detail + "\n";
  if (!error.empty()) out += "  ERROR " + error + "\n";
  out += exit_code == kExitPass ? "all checks passed\n" : "exit code " + std::to_string(exit_code) + "\n";
  return out;
}

namespace {

std::string first_or(const std::vector<std::string>& v, const std::string& fallback) {
  return v.empty() ? fallback : v.front();
}

std::string first_violation(const std::vector<Violation>& v, const std::string& fallback) {
  return v.empty() ? fallback : v.front().to_string();
}

// |X_n| = sum_k C(n, k) |NX_{n-k}| for every level.
bool ez_counts_match(const TruncatedSSet& s) {
  std::vector<long long> nondeg(s.dim_cap() + 1);
  for (int n = 0; n <= s.dim_cap(); ++n) nondeg[n] = static_cast<long long>(nondegenerate(s, n).size());
  for (int n = 0; n <= s.dim_cap(); ++n) {
    long long total = 0, binom = 1;
    for (int k = 0; k <= n; ++k) {
      total += binom * nondeg[n - k];
      binom = binom * (n - k) / (k + 1);
    }
    if (total != s.count(n)) return false;
  }
  return true;
}

class Runner {
 public:
  Runner(const RunConfig& c, TheoremReport& r) : config_(c), report_(r) {}

  void record(const std::string& name, bool passed, const std::string& detail) {
    report_.results.push_back({name, passed, detail});
  }

  void run() {
    const int n = config_.dim;
    const Instance inst = parse_instance(config_.instance, n);
    const SimplicialGroupoid& g = inst.groupoid;
    const bool group = g.objects() == 1;
    const int kan_depth = std::min(3, n);
    auto enabled = [&](Check c) {
      return std::find(config_.checks.begin(), config_.checks.end(), c) != config_.checks.end();
    };
    EnumerationOptions opts;
    opts.budget = config_.budget;
    const Comparison cmp = build_comparison(g, n, opts);
    const TruncatedSSet& wbar = cmp.wbar->sset;
    const TruncatedSSet& nerve = cmp.nerve->sset;
    Json sizes = {{"wbar", Json::array()}, {"nerve", Json::array()}};
    for (int k = 0; k <= n; ++k) {
      sizes["wbar"].push_back(wbar.count(k));
      sizes["nerve"].push_back(nerve.count(k));
    }
    report_.details["sizes"] = sizes;

    std::optional<WTotal> w;
    if (group && (enabled(Check::kIdentities) || enabled(Check::kKan) || enabled(Check::kFibration)))
      w = build_w_total(g, n);

    if (enabled(Check::kIdentities)) {
      const auto gv = validate_groupoid(g);
      record("groupoid-laws", gv.empty(), first_or(gv, "all groupoid and simplicial laws hold"));
      for (const auto& [name, s] : std::vector<std::pair<std::string, const TruncatedSSet*>>{
               {"wbar", &wbar}, {"nerve", &nerve}, {"w", w ? w->total.get() : nullptr}}) {
        if (!s) continue;
        const auto v = validate(*s);
        record("identities-" + name, v.empty() && ez_counts_match(*s),
               v.empty() ? (ez_counts_match(*s) ? "simplicial identities and Eilenberg-Zilber counts hold"
                                                : "Eilenberg-Zilber counts do not add up")
                         : v.front().to_string());
      }
      const auto cv = cosimplicial_identity_problems(n);
      record("cosimplicial-identities", cv.empty(), first_or(cv, "Delta_Wbar cosimplicial identities hold"));
    }

    if (enabled(Check::kRestriction)) {
      const RepresentableWbar rep = wbar_via_representable(g, n);
      std::vector<Violation> problems;
      const bool iso = check_isomorphism(rep.sset, wbar, rep.bijection, &problems);
      record("restriction", iso, iso ? "representable and tuple W-bar agree on every structure map"
                                     : first_violation(problems, "bijection missing"));
    }

    if (enabled(Check::kKan)) {
      for (const auto& [name, s] : std::vector<std::pair<std::string, const TruncatedSSet*>>{{"wbar", &wbar},
                                                                                         {"nerve", &nerve}}) {
        const KanReport k = is_kan(*s, kan_depth, config_.threads);
        record("kan-" + name, k.ok,
               k.ok ? std::to_string(k.horns_checked) + " horns filled through dimension " + std::to_string(kan_depth)
                    : "no filler for " + k.failing->to_string());
      }
      for (int x = 0; x < g.objects(); ++x) {
        const TruncatedSSet hom = g.hom_sset(x, x);
        const int depth = std::max(1, std::min(3, n - 1));
        const KanReport k = is_kan(hom, std::min(depth, hom.dim_cap()), config_.threads);
        record("kan-hom-" + std::to_string(x), k.ok,
               k.ok ? "G(x,x) is Kan through dimension " + std::to_string(depth) : k.failing->to_string());
      }
      if (w) {
        const LiftingReport l = has_horn_lifting(w->projection, kan_depth, config_.threads);
        record("lifting-w", l.ok,
               l.ok ? std::to_string(l.problems_checked) + " lifting problems solved"
                    : "no lift for " + l.failing->to_string());
      }
    }

    if (enabled(Check::kFibration) && w) {
      FibrationOptions fo;
      fo.lift_up_to = kan_depth;
      fo.homology_through = std::min(2, n - 1);
      fo.threads = config_.threads;
      const PrincipalFibrationReport f = check_principal_fibration(*w, g, fo);
      report_.details["fibration"] = hcn::to_json(f);
      record("fibration-free", f.freeness.passed, f.freeness.detail);
      record("fibration-quotient", f.quotient.passed, f.quotient.detail);
      record("fibration-lifting", f.lifting.passed, f.lifting.detail);
      record("fibration-contractible", f.contractible.passed, f.contractible.detail);
      const auto conventions = passing_twist_conventions(g, std::min(n, 3));
      const bool pinned = std::find(conventions.begin(), conventions.end(), kWTwist) != conventions.end();
      record("twist-convention", pinned,
             to_string(kWTwist) + (pinned ? " yields a simplicial W" : " fails") + " (" +
                 std::to_string(conventions.size()) + " of 4 conventions pass)");
    }

    if (enabled(Check::kNaturality)) {
      std::vector<std::string> phi_problems;
      for (int k = 0; k <= std::min(n, 4); ++k) {
        auto p = phi_functor_problems(CTilde(k));
        phi_problems.insert(phi_problems.end(), p.begin(), p.end());
      }
      record("phi-functor", phi_problems.empty(), first_or(phi_problems, "phi is a functor for n <= " + std::to_string(std::min(n, 4))));
      const CTilde one(1);
      const bool phi1 = build_phi(one).values.front() == DeltaWbar(1).generator(1);
      record("phi-1-identity", phi1, phi1 ? "phi_1 is the identity" : "phi_1 moves the generator");
      const auto iota = iota_lemma_problems(std::min(n, 4));
      record("iota-lemma", iota.empty(), first_or(iota, "iota vertices are (0, 1, ..., j-i-1)"));
      const auto nat = naturality_problems(std::min(n, 3));
      record("naturality", nat.empty(), first_or(nat, "every naturality square commutes"));
      const UniquenessReport u = check_uniqueness(std::min(n, 3));
      record("uniqueness", u.only_phi,
             std::to_string(u.natural_families) + " natural famil" + (u.natural_families == 1 ? "y" : "ies") +
                 (u.only_phi ? ", equal to phi" : ""));
    }

    if (enabled(Check::kEquivalence)) {
      const auto mv = check_simplicial_map(cmp.map);
      record("induced-map", mv.empty(), first_violation(mv, "W-bar -> N commutes with all structure maps"));
      CertifyOptions co;
      co.threads = config_.threads;
      const CertifyReport cr = certify_equivalence(cmp.map, config_.through, co);
      report_.details["certify"] = hcn::to_json(cr);
      record("pi0", cr.pi0.bijection, cr.pi0.detail);
      std::string pi1_detail;
      for (const Pi1Check& c : cr.pi1) pi1_detail += (pi1_detail.empty() ? "" : "; ") + c.detail;
      record("pi1", cr.pi1_iso(), pi1_detail);
      std::string hdetail;
      for (const HomologyCheck& c : cr.homology)
        hdetail += (hdetail.empty() ? "" : ", ") + ("H_" + std::to_string(c.k) + " = " + c.source.to_string());
      record("homology", cr.homology_iso(),
             cr.homology_iso() ? hdetail : "fails at degree " + std::to_string(cr.first_failing_degree));
      if (inst.constant) {
        const bool bij = is_levelwise_bijective(cmp.map);
        const ClassicalNerve classical = classical_nerve(g, n);
        const bool wc = check_isomorphism(wbar, classical.sset, wbar_to_classical(g, *cmp.wbar, classical));
        const bool nc = check_isomorphism(nerve, classical.sset, nerve_to_classical(g, *cmp.nerve, classical));
        record("constant-degeneration", bij && wc && nc,
               std::string(bij ? "induced map is a levelwise bijection" : "induced map is not bijective") +
                   (wc && nc ? "; both sides are the classical nerve" : "; classical nerve comparison fails"));
      }
    }
  }

 private:
  const RunConfig& config_;
  TheoremReport& report_;
};

}  // namespace

TheoremReport verify_theorem(const RunConfig& config) {
  TheoremReport report;
  report.config = config;
  report.details = Json::object();
  if (auto p = config.problems(); !p.empty()) {
    report.error = p.front();
    report.exit_code = kExitUsage;
    return report;
  }
  try {
    Runner(config, report).run();
    const bool all = std::all_of(report.results.begin(), report.results.end(),
                                 [](const CheckResult& r) { return r.passed; });
    report.exit_code = all ? kExitPass : kExitCheckFailed;
  } catch (const BudgetExceeded& e) {
    report.error = e.what();
    report.exit_code = kExitBudget;
  } catch (const Error& e) {
    report.error = e.what();
    report.exit_code = kExitBuildError;
  }
  return report;
}

}  // namespace hcn
