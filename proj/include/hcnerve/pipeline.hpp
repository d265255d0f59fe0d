#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcnerve/group.hpp"
#include "hcnerve/groupoid.hpp"
#include "hcnerve/hc_nerve.hpp"
#include "hcnerve/json_io.hpp"

namespace hcn {

// Exit codes shared by the pipeline and the command line.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitBuildError = 2,
  kExitBudget = 3,
  kExitUsage = 64,
};

// Group grammar: cyclic:M | cM | sym:M | sM | product:A*B | trivial.
FiniteGroup parse_group(const std::string& spec);

struct Instance {
  SimplicialGroupoid groupoid;
  bool constant = false;  // constant simplicial group or groupoid
  std::string label;
};

// Instance grammar: a group (constant simplicial group), constant:<group>,
// xmod:<M>,<P>,trivial|id, or two-object:<group>. Throws InvalidArgument.
Instance parse_instance(const std::string& spec, int dim_cap);

enum class Check { kIdentities, kRestriction, kKan, kFibration, kNaturality, kEquivalence };
std::string to_string(Check c);
Check parse_check(const std::string& name);
std::vector<Check> all_checks();

struct RunConfig {
  std::string instance;
  int dim = 4;
  int through = 3;
  std::vector<Check> checks = all_checks();
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;

  // D <= N - 1, budget > 0, N >= 1; the message names the violation.
  std::vector<std::string> problems() const;
};

RunConfig config_from_json(const Json& j);
Json to_json(const RunConfig& c);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremReport {
  RunConfig config;
  std::vector<CheckResult> results;
  Json details;
  int exit_code = kExitPass;
  std::string error;  // set when the run stopped before finishing

  Json to_json() const;
  std::string summary() const;
};

// Builds W-bar, N and the comparison map for the instance and runs the
// selected checks. Build, input and budget failures are caught and mapped to
// their exit codes.
TheoremReport verify_theorem(const RunConfig& config);

}  // namespace hcn
