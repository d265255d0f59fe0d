#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hcnerve/hcnerve.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kPass = 0, kCheckFailed = 1, kBuildError = 2, kBudget = 3, kUsage = 64;

// Raised to abort a subcommand with a given exit code after printing a message.
struct Exit {
  int code;
};

int status_exit(hcn_status s) {
  switch (s) {
    case HCN_OK: return kPass;
    case HCN_ERR_BUDGET: return kBudget;
    default: return kBuildError;
  }
}

void check(hcn_status s, const std::string& context) {
  if (s == HCN_OK) return;
  std::cerr << "hcnerve: " << context << ": " << hcn_last_error() << "\n";
  throw Exit{status_exit(s)};
}

struct CString {
  char* p = nullptr;
  ~CString() { hcn_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using Groupoid = Handle<hcn_groupoid, hcn_groupoid_free>;
using SSet = Handle<hcn_sset, hcn_sset_free>;
using Map = Handle<hcn_map, hcn_map_free>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hcnerve: cannot read " << path << "\n";
    throw Exit{kBuildError};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "hcnerve: cannot write " << path << "\n";
    throw Exit{kBuildError};
  }
}

int thread_count() {
  const char* env = std::getenv("HCNERVE_THREADS");
  if (!env) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

struct Options {
  std::string group, groupoid, out, in, map, report, engine = "tuple", checks;
  int dim = 4, through = 3;
  std::uint64_t budget = 1'000'000;
};

std::string instance_spec(const Options& o) {
  if (o.group.empty() == o.groupoid.empty()) {
    std::cerr << "hcnerve: give exactly one of --group or --groupoid\n";
    throw Exit{kUsage};
  }
  return o.group.empty() ? o.groupoid : o.group;
}

// A spec ending in .json names a groupoid file; anything else is builder syntax.
void load_groupoid(const Options& o, Groupoid& g) {
  const std::string spec = instance_spec(o);
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    check(hcn_groupoid_from_json(read_file(spec).c_str(), &g.p), "loading " + spec);
  else
    check(hcn_groupoid_from_spec(spec.c_str(), o.dim, &g.p), "building " + spec);
}

std::string level_counts(const hcn_sset* s) {
  std::string out;
  for (int n = 0; n <= hcn_sset_dim_cap(s); ++n) out += (n ? " " : "") + std::to_string(hcn_sset_count(s, n));
  return out;
}

void note(const Options& o, const std::string& message) {
  if (!o.out.empty() && o.out != "-") std::cerr << message << "\n";
}

int build_wbar(const Options& o) {
  Groupoid g;
  load_groupoid(o, g);
  hcn_wbar_engine engine = o.engine == "representable" ? HCN_ENGINE_REPRESENTABLE : HCN_ENGINE_TUPLE;
  SSet s;
  check(hcn_build_wbar(g.p, o.dim, engine, &s.p), "build-wbar");
  CString text;
  check(hcn_sset_to_json(s.p, &text.p), "export");
  emit(text.str(), o.out);
  note(o, "W-bar level sizes: " + level_counts(s.p));
  return kPass;
}

int build_w(const Options& o) {
  Groupoid g;
  load_groupoid(o, g);
  CString text;
  check(hcn_build_w_json(g.p, o.dim, &text.p), "build-w");
  emit(text.str(), o.out);
  return kPass;
}

int build_nerve(const Options& o) {
  Groupoid g;
  load_groupoid(o, g);
  SSet s;
  check(hcn_build_nerve(g.p, o.dim, o.budget, &s.p), "build-nerve");
  CString text;
  check(hcn_sset_to_json(s.p, &text.p), "export");
  emit(text.str(), o.out);
  note(o, "nerve level sizes: " + level_counts(s.p));
  return kPass;
}

int compare(const Options& o) {
  Groupoid g;
  load_groupoid(o, g);
  Map m;
  CString report, map_text;
  check(hcn_compare(g.p, o.dim, o.budget, &m.p, &report.p), "compare");
  check(hcn_map_to_json(m.p, &map_text.p), "export");
  const json r = json::parse(report.str());
  const json doc = {{"schema", 1}, {"kind", "comparison"}, {"map", json::parse(map_text.str())}, {"report", r}};
  emit(doc.dump(2) + "\n", o.out);
  std::cerr << "simplicial: " << r["simplicial"] << ", naturality: " << r["naturality"]
            << ", levelwise bijective: " << r["bijective"] << "\n";
  return r["simplicial"] && r["naturality"] ? kPass : kCheckFailed;
}

int homology(const Options& o) {
  SSet s;
  check(hcn_sset_from_json(read_file(o.in).c_str(), &s.p), "loading " + o.in);
  CString text;
  check(hcn_homology(s.p, o.through, &text.p), "homology");
  if (!o.out.empty()) emit(text.str(), o.out);
  for (const json& h : json::parse(text.str())) std::cout << "H_" << h["k"] << " = " << h["text"].get<std::string>() << "\n";
  return kPass;
}

int certify(const Options& o) {
  Map m;
  check(hcn_map_from_json(read_file(o.map).c_str(), &m.p), "loading " + o.map);
  int ok = 0;
  CString text;
  check(hcn_certify(m.p, o.through, thread_count(), &ok, &text.p), "certify");
  if (!o.report.empty()) emit(text.str(), o.report);
  const json r = json::parse(text.str());
  std::cout << "pi0: " << (r["pi0"]["bijection"].get<bool>() ? "bijection" : "FAIL") << "\n";
  std::cout << "pi1: order " << r["pi1"]["order"] << (r["pi1"]["iso"].get<bool>() ? ", iso" : ", FAIL") << "\n";
  for (const json& h : r["homology"])
    std::cout << "H_" << h["k"] << ": " << (h["iso"].get<bool>() ? "iso" : "FAIL") << "\n";
  std::cout << (ok ? "equivalence certified" : "equivalence NOT certified") << " through degree " << o.through
            << "\n";
  return ok ? kPass : kCheckFailed;
}

int verify_theorem(const Options& o) {
  json config = {{"instance", instance_spec(o)}, {"dim", o.dim}, {"through", o.through},
                 {"budget", o.budget},           {"threads", thread_count()}};
  if (!o.checks.empty()) {
    json list = json::array();
    std::stringstream in(o.checks);
    for (std::string c; std::getline(in, c, ',');) list.push_back(c);
    config["checks"] = list;
  }
  int code = kPass;
  CString report, summary;
  check(hcn_verify_theorem(config.dump().c_str(), &code, &report.p, &summary.p), "verify-theorem");
  if (!o.report.empty()) emit(report.str(), o.report);
  std::cout << summary.str();
  return code;
}

int validate(const Options& o) {
  const std::string text = read_file(o.in);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    std::cerr << "hcnerve: " << o.in << " is not JSON: " << e.what() << "\n";
    return kBuildError;
  }
  const std::string kind = doc.is_object() ? doc.value("kind", "") : "";
  hcn_status s = HCN_OK;
  if (kind == "sset") {
    SSet x;
    s = hcn_sset_from_json(text.c_str(), &x.p);
    if (s == HCN_OK) std::cout << "valid simplicial set, level sizes " << level_counts(x.p) << "\n";
  } else if (kind == "map" || kind == "comparison") {
    Map x;
    s = hcn_map_from_json(text.c_str(), &x.p);
    if (s == HCN_OK) std::cout << "valid simplicial map\n";
  } else if (kind == "groupoid") {
    Groupoid x;
    s = hcn_groupoid_from_json(text.c_str(), &x.p);
    if (s == HCN_OK) std::cout << "valid simplicial groupoid\n";
  } else {
    std::cerr << "hcnerve: unknown document kind '" << kind << "'\n";
    return kBuildError;
  }
  if (s != HCN_OK) {
    std::cout << "invalid: " << hcn_last_error() << "\n";
    return kCheckFailed;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifying spaces and homotopy coherent nerves of finite simplicial groupoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hcn_version()));
  Options o;

  auto instance_flags = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "group spec, e.g. cyclic:2, sym:3, xmod:c2,c2,trivial");
    sub->add_option("--groupoid", o.groupoid, "groupoid spec (two-object:cyclic:2) or JSON file");
    sub->add_option("--dim", o.dim, "dimension cap N")->check(CLI::Range(0, 12));
  };
  auto* wbar = app.add_subcommand("build-wbar", "build W-bar and write it as JSON");
  instance_flags(wbar);
  wbar->add_option("--engine", o.engine, "tuple or representable")->check(CLI::IsMember({"tuple", "representable"}));
  wbar->add_option("--out", o.out, "output file (default stdout)");

  auto* w = app.add_subcommand("build-w", "build the total space W with projection and action");
  instance_flags(w);
  w->add_option("--out", o.out, "output file (default stdout)");

  auto* nerve = app.add_subcommand("build-nerve", "build the homotopy coherent nerve");
  instance_flags(nerve);
  nerve->add_option("--budget", o.budget, "candidate budget per level")->check(CLI::PositiveNumber);
  nerve->add_option("--out", o.out, "output file (default stdout)");

  auto* cmp = app.add_subcommand("compare", "build the map W-bar -> N with its verification report");
  instance_flags(cmp);
  cmp->add_option("--budget", o.budget, "candidate budget per level")->check(CLI::PositiveNumber);
  cmp->add_option("--out", o.out, "output file (default stdout)");

  auto* hom = app.add_subcommand("homology", "integral homology of a simplicial set");
  hom->add_option("--in", o.in, "simplicial set JSON")->required();
  hom->add_option("--through", o.through, "top degree");
  hom->add_option("--out", o.out, "write the groups as JSON");

  auto* cert = app.add_subcommand("certify", "certify a map as a weak equivalence through a degree");
  cert->add_option("--map", o.map, "map JSON (or compare output)")->required();
  cert->add_option("--through", o.through, "top homology degree");
  cert->add_option("--report", o.report, "report JSON file");

  auto* thm = app.add_subcommand("verify-theorem", "run every check on one instance");
  instance_flags(thm);
  thm->add_option("--through", o.through, "homology depth D (at most N - 1)");
  thm->add_option("--checks", o.checks,
                  "comma list of identities,restriction,kan,fibration,naturality,equivalence");
  thm->add_option("--budget", o.budget, "candidate budget per level")->check(CLI::PositiveNumber);
  thm->add_option("--report", o.report, "report JSON file");

  auto* val = app.add_subcommand("validate", "import a JSON document and check its identities");
  val->add_option("--in", o.in, "sset, map or groupoid JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    if (*wbar) return build_wbar(o);
    if (*w) return build_w(o);
    if (*nerve) return build_nerve(o);
    if (*cmp) return compare(o);
    if (*hom) return homology(o);
    if (*cert) return certify(o);
    if (*thm) return verify_theorem(o);
    if (*val) return validate(o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "hcnerve: " << e.what() << "\n";
    return kBuildError;
  }
  return kUsage;
}
