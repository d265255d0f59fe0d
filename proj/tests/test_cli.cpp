#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hcnerve/comparison.hpp"
#include "hcnerve/errors.hpp"
#include "hcnerve/hcnerve.h"
#include "hcnerve/json_io.hpp"
#include "hcnerve/pipeline.hpp"
#include "hcnerve/wbar.hpp"

using namespace hcn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string output;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(HCNERVE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("hcnerve-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("simplicial sets round-trip through JSON") {
  const TruncatedSSet w = build_wbar(constant_simplicial(cyclic(2), 4), 4);
  const std::string text = dump(to_json(w));
  const TruncatedSSet back = sset_from_json(parse_json(text));
  CHECK(back == w);
  CHECK(dump(to_json(back)) == text);
  const WBarComplex labelled = build_wbar_complex(constant_simplicial(cyclic(3), 3), 3);
  CHECK(sset_from_json(to_json(labelled.sset)) == labelled.sset);
}

TEST_CASE("a broken face table is reported with level and index") {
  Json j = to_json(build_wbar(constant_simplicial(cyclic(2), 3), 3));
  j["levels"][2]["faces"][0][1] = 0;
  try {
    sset_from_json(j);
    FAIL("import accepted a broken table");
  } catch (const SchemaError& e) {
    const std::string what = e.what();
    CHECK(what.find("level 2") != std::string::npos);
    CHECK(what.find("index 1") != std::string::npos);
  }
  j["levels"][2]["faces"][0][1] = 99;
  CHECK_THROWS_AS(sset_from_json(j), SchemaError);
}

TEST_CASE("schema header is enforced") {
  Json j = to_json(standard_simplex(1, 2));
  j["schema"] = 2;
  CHECK_THROWS_AS(sset_from_json(j), SchemaError);
  j["schema"] = kSchemaVersion;
  j["kind"] = "map";
  CHECK_THROWS_AS(sset_from_json(j), SchemaError);
  CHECK_THROWS_AS(sset_from_json(Json::array()), SchemaError);
}

TEST_CASE("groups, groupoids and maps round-trip") {
  const FiniteGroup s3 = symmetric(3);
  CHECK(group_from_json(to_json(s3)) == s3);
  for (const SimplicialGroupoid& g : {crossed_module_simplicial(trivial_crossed_module(cyclic(2), cyclic(2)), 3),
                                      two_object_groupoid(cyclic(3), 2)})
    CHECK(groupoid_from_json(to_json(g)) == g);
  Json broken = to_json(constant_simplicial(cyclic(2), 2));
  broken["levels"][1]["composition"][0] = 1;
  CHECK_THROWS(groupoid_from_json(broken));

  const Comparison c = build_comparison(constant_simplicial(cyclic(2), 3), 3);
  const SimplicialMap back = map_from_json(to_json(c.map));
  CHECK(back.assignment == c.map.assignment);
  CHECK(*back.source == *c.map.source);
  CHECK(*back.target == *c.map.target);
}

TEST_CASE("instance grammar") {
  CHECK(parse_group("cyclic:4").order() == 4);
  CHECK(parse_group("c3").order() == 3);
  CHECK(parse_group("sym:3").order() == 6);
  CHECK(parse_group("S3") == symmetric(3));
  CHECK(parse_group("product:c2*c3").order() == 6);
  CHECK(parse_group("trivial").order() == 1);
  CHECK_THROWS_AS(parse_group("dihedral:4"), InvalidArgument);
  CHECK_THROWS_AS(parse_group("cyclic:x"), InvalidArgument);

  const Instance x = parse_instance("xmod:c2,c2,trivial", 3);
  CHECK_FALSE(x.constant);
  CHECK(x.groupoid.count(2) == 8);
  CHECK(parse_instance("xmod:s3,s3,id", 2).groupoid.count(1) == 36);
  CHECK_THROWS_AS(parse_instance("xmod:s3,c2,trivial", 2), InvalidArgument);
  CHECK_THROWS_AS(parse_instance("xmod:c2,c3,id", 2), InvalidArgument);
  const Instance t = parse_instance("two-object:cyclic:2", 3);
  CHECK(t.constant);
  CHECK(t.groupoid.objects() == 2);
  CHECK(parse_instance("constant:sym:3", 2).groupoid.count(2) == 6);
}

TEST_CASE("run configuration") {
  RunConfig c;
  c.instance = "cyclic:2";
  CHECK(c.problems().empty());
  c.through = 4;
  CHECK_FALSE(c.problems().empty());
  c.through = 3;
  c.budget = 0;
  CHECK_FALSE(c.problems().empty());
  const RunConfig parsed = config_from_json(Json{{"instance", "sym:3"}, {"dim", 3}, {"through", 2},
                                                 {"checks", {"kan", "equivalence"}}});
  CHECK(parsed.dim == 3);
  CHECK(parsed.checks == std::vector<Check>{Check::kKan, Check::kEquivalence});
  CHECK_THROWS_AS(config_from_json(Json{{"instance", "c2"}, {"checks", {"everything"}}}), InvalidArgument);
  CHECK_THROWS_AS(config_from_json(Json{{"dim", 3}}), InvalidArgument);
}

TEST_CASE("verify_theorem exit codes and determinism") {
  RunConfig c;
  c.instance = "cyclic:2";
  c.dim = 3;
  c.through = 2;
  const TheoremReport a = verify_theorem(c), b = verify_theorem(c);
  CHECK(a.exit_code == kExitPass);
  CHECK(dump(a.to_json()) == dump(b.to_json()));
  CHECK(a.summary().find("all checks passed") != std::string::npos);

  c.budget = 3;
  CHECK(verify_theorem(c).exit_code == kExitBudget);
  c.budget = kDefaultBudget;
  c.instance = "nonsense";
  CHECK(verify_theorem(c).exit_code == kExitBuildError);
  c.instance = "cyclic:2";
  c.through = 3;
  CHECK(verify_theorem(c).exit_code == kExitUsage);
}

TEST_CASE("C interface") {
  hcn_groupoid* g = nullptr;
  REQUIRE(hcn_groupoid_from_spec("cyclic:2", 3, &g) == HCN_OK);
  CHECK(hcn_groupoid_objects(g) == 1);
  hcn_sset* tuple = nullptr;
  hcn_sset* rep = nullptr;
  REQUIRE(hcn_build_wbar(g, 3, HCN_ENGINE_TUPLE, &tuple) == HCN_OK);
  REQUIRE(hcn_build_wbar(g, 3, HCN_ENGINE_REPRESENTABLE, &rep) == HCN_OK);
  CHECK(hcn_sset_count(tuple, 3) == 8);
  CHECK(hcn_sset_count(rep, 3) == 8);
  CHECK(hcn_sset_count(tuple, 9) == -1);

  char* text = nullptr;
  REQUIRE(hcn_sset_to_json(tuple, &text) == HCN_OK);
  hcn_sset* back = nullptr;
  REQUIRE(hcn_sset_from_json(text, &back) == HCN_OK);
  int valid = 0;
  char* problems = nullptr;
  REQUIRE(hcn_sset_validate(back, &valid, &problems) == HCN_OK);
  CHECK(valid == 1);
  CHECK(std::string(problems) == "[]\n");
  hcn_string_free(problems);
  hcn_string_free(text);

  char* h = nullptr;
  REQUIRE(hcn_homology(back, 2, &h) == HCN_OK);
  CHECK(Json::parse(h)[1]["text"] == "Z/2");
  hcn_string_free(h);
  CHECK(hcn_homology(back, 3, &h) == HCN_ERR_TRUNCATION);
  CHECK(std::string(hcn_last_error()).size() > 0);

  hcn_map* m = nullptr;
  char* report = nullptr;
  REQUIRE(hcn_compare(g, 3, 1000000, &m, &report) == HCN_OK);
  CHECK(Json::parse(report)["bijective"] == true);
  hcn_string_free(report);
  int ok = 0;
  REQUIRE(hcn_certify(m, 2, 1, &ok, nullptr) == HCN_OK);
  CHECK(ok == 1);

  hcn_sset* nerve = nullptr;
  CHECK(hcn_build_nerve(g, 3, 2, &nerve) == HCN_ERR_BUDGET);
  CHECK(nerve == nullptr);
  hcn_groupoid* bad = nullptr;
  CHECK(hcn_groupoid_from_spec("cyclic:0", 3, &bad) == HCN_ERR_INVALID_ARGUMENT);
  CHECK(hcn_sset_from_json("{\"schema\": 1}", &back) == HCN_ERR_SCHEMA);
  CHECK(hcn_sset_from_json("not json", &back) == HCN_ERR_SCHEMA);
  CHECK(hcn_build_wbar(nullptr, 3, HCN_ENGINE_TUPLE, &tuple) == HCN_ERR_INVALID_ARGUMENT);

  int exit_code = -1;
  char* summary = nullptr;
  REQUIRE(hcn_verify_theorem(R"({"instance": "cyclic:2", "dim": 2, "through": 1})", &exit_code, nullptr, &summary) ==
          HCN_OK);
  CHECK(exit_code == 0);
  hcn_string_free(summary);

  hcn_map_free(m);
  hcn_sset_free(back);
  hcn_sset_free(rep);
  hcn_sset_free(tuple);
  hcn_groupoid_free(g);
}

TEST_CASE("command line") {
  const fs::path dir = scratch();
  const std::string wbar = (dir / "wbar.json").string(), map = (dir / "map.json").string(),
                    report = (dir / "report.json").string();

  SUBCASE("build, validate, homology") {
    CHECK(run("build-wbar --group cyclic:2 --dim 4 --out " + wbar).code == 0);
    Run r = run("validate --in " + wbar);
    CHECK(r.code == 0);
    r = run("homology --in " + wbar + " --through 3");
    CHECK(r.code == 0);
    CHECK(r.output.find("H_3 = Z/2") != std::string::npos);
    CHECK(run("build-wbar --group cyclic:2 --dim 3 --engine representable --out " + wbar).code == 0);
    CHECK(run("build-nerve --group xmod:c2,c2,trivial --dim 3 --out " + wbar).code == 0);
    CHECK(run("validate --in " + wbar).output.find("1 2 8 64") != std::string::npos);
  }
  SUBCASE("a corrupted file fails validation") {
    Json j = to_json(build_wbar(constant_simplicial(cyclic(2), 3), 3));
    j["levels"][3]["faces"][1][5] = 0;
    write_text_file(wbar, dump(j));
    const Run r = run("validate --in " + wbar);
    CHECK(r.code == 1);
    CHECK(r.output.find("level 3") != std::string::npos);
    CHECK(r.output.find("index 5") != std::string::npos);
  }
  SUBCASE("total space") {
    CHECK(run("build-w --group sym:3 --dim 2 --out " + wbar).code == 0);
    const Json w = parse_json(slurp(wbar));
    CHECK(w.contains("total"));
    CHECK(w.contains("projection"));
    CHECK(w.contains("action"));
    CHECK(run("build-w --groupoid two-object:cyclic:2 --dim 2").code == 2);
  }
  SUBCASE("compare then certify") {
    CHECK(run("compare --group cyclic:3 --dim 4 --out " + map).code == 0);
    const Run r = run("certify --map " + map + " --through 3 --report " + report);
    CHECK(r.code == 0);
    const Json j = parse_json(slurp(report));
    CHECK(j["pi1"]["order"] == 3);
    CHECK(j["pi1"]["iso"] == true);
    CHECK(j["homology"].size() == 4);
    for (const auto& h : j["homology"]) CHECK(h["iso"] == true);
  }
  SUBCASE("certify rejects a collapse map") {
    auto w = std::make_shared<const TruncatedSSet>(build_wbar(constant_simplicial(cyclic(2), 3), 3));
    SimplicialMap collapse{w, std::make_shared<const TruncatedSSet>(standard_simplex(0, 3)), {}};
    for (int n = 0; n <= 3; ++n) collapse.assignment.emplace_back(w->count(n), 0);
    write_text_file(map, dump(to_json(collapse)));
    const Run r = run("certify --map " + map + " --through 2");
    CHECK(r.code == 1);
    CHECK(r.output.find("NOT certified") != std::string::npos);
  }
  SUBCASE("verify-theorem and its report") {
    Run r = run("verify-theorem --group cyclic:2 --dim 3 --through 2 --report " + report);
    CHECK(r.code == 0);
    const std::string first = slurp(report);
    CHECK(run("verify-theorem --group cyclic:2 --dim 3 --through 2 --report " + report).code == 0);
    CHECK(slurp(report) == first);
    CHECK(parse_json(first)["exit_code"] == 0);
    r = run("verify-theorem --group cyclic:2 --dim 3 --through 2 --checks kan,naturality");
    CHECK(r.code == 0);
    CHECK(r.output.find("homology") == std::string::npos);
  }
  SUBCASE("exit codes") {
    CHECK(run("verify-theorem --group cyclic:2 --dim 3 --through 3").code == 64);
    CHECK(run("verify-theorem --group cyclic:3 --dim 3 --through 2 --budget 5").code == 3);
    CHECK(run("build-nerve --group cyclic:3 --dim 3 --budget 5").code == 3);
    CHECK(run("build-wbar --group quaternion --dim 2").code == 2);
    CHECK(run("build-wbar --group c2 --groupoid two-object:c2").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("validate --in " + (dir / "missing.json").string()).code == 2);
    CHECK(run("--help").code == 0);
  }
  fs::remove_all(dir);
}
