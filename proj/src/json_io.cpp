#include "hcnerve/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hcnerve/errors.hpp"

namespace hcn {

namespace {

void expect_header(const Json& j, const char* kind) {
  if (!j.is_object()) throw SchemaError("document is not a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchemaVersion)
    throw SchemaError("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  if (!j.contains("kind") || j["kind"] != kind) throw SchemaError(std::string("document kind is not '") + kind + "'");
}

template <class T>
T field(const Json& j, const char* name, const std::string& where) {
  if (!j.contains(name)) throw SchemaError(where + ": missing field '" + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(where + ": field '" + name + "' has the wrong type");
  }
}

std::string at_level(int n) { return "level " + std::to_string(n); }

void check_table(const std::vector<std::vector<SimplexId>>& tables, std::size_t expected_tables, std::int32_t count,
                 std::int32_t range, const std::string& where, const char* name) {
  if (tables.size() != expected_tables)
    throw SchemaError(where + ": expected " + std::to_string(expected_tables) + " " + name + " tables");
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (static_cast<std::int32_t>(tables[i].size()) != count)
      throw SchemaError(where + ": " + name + "[" + std::to_string(i) + "] has the wrong length");
    for (std::size_t x = 0; x < tables[i].size(); ++x)
      if (tables[i][x] < 0 || tables[i][x] >= range)
        throw SchemaError(where + " index " + std::to_string(x) + ": " + name + "[" + std::to_string(i) +
                          "] points outside the neighbouring level");
  }
}

// Names the table entry behind a violation. A failed d_i s_j identity at
// (n, x) is a bad face entry of the degenerate simplex s_j x one level up.
std::string locate(const TruncatedSSet& s, const Violation& v) {
  int i = 0, j = 0, used = 0;
  if (std::sscanf(v.relation.c_str(), "d_%d s_%d%n", &i, &j, &used) == 2 &&
      used == static_cast<int>(v.relation.size())) {
    const SimplexId y = s.degen(v.level, j, v.simplex);
    return "level " + std::to_string(v.level + 1) + " index " + std::to_string(y) + ": d_" + std::to_string(i) +
           " of s_" + std::to_string(j) + " (level " + std::to_string(v.level) + " index " +
           std::to_string(v.simplex) + ") breaks d_" + std::to_string(i) + " s_" + std::to_string(j);
  }
  return "level " + std::to_string(v.level) + " index " + std::to_string(v.simplex) + " violates " + v.relation;
}

}  // namespace

Json to_json(const TruncatedSSet& s) {
  Json levels = Json::array();
  for (int n = 0; n <= s.dim_cap(); ++n) {
    const Level& lv = s.level(n);
    Json l = {{"n", n}, {"count", lv.count}, {"faces", lv.faces}, {"degens", lv.degens}};
    if (!lv.labels.empty()) l["labels"] = lv.labels;
    levels.push_back(std::move(l));
  }
  return {{"schema", kSchemaVersion}, {"kind", "sset"}, {"dim_cap", s.dim_cap()}, {"levels", std::move(levels)}};
}

TruncatedSSet sset_from_json(const Json& j) {
  expect_header(j, "sset");
  const int cap = field<int>(j, "dim_cap", "sset");
  if (cap < 0) throw SchemaError("sset: negative dim_cap");
  const Json& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != cap + 1)
    throw SchemaError("sset: expected " + std::to_string(cap + 1) + " levels");
  TruncatedSSet s(cap);
  std::vector<std::int32_t> counts(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    if (field<int>(levels[n], "n", at_level(n)) != n) throw SchemaError(at_level(n) + ": levels out of order");
    counts[n] = field<std::int32_t>(levels[n], "count", at_level(n));
    if (counts[n] < 0) throw SchemaError(at_level(n) + ": negative count");
  }
  for (int n = 0; n <= cap; ++n) {
    const Json& l = levels[n];
    s.reset_level(n, counts[n]);
    Level& lv = s.mutable_level(n);
    lv.faces = field<std::vector<std::vector<SimplexId>>>(l, "faces", at_level(n));
    lv.degens = field<std::vector<std::vector<SimplexId>>>(l, "degens", at_level(n));
    check_table(lv.faces, n == 0 ? 0 : n + 1, counts[n], n == 0 ? 0 : counts[n - 1], at_level(n), "faces");
    check_table(lv.degens, n == cap ? 0 : n + 1, counts[n], n == cap ? 0 : counts[n + 1], at_level(n), "degens");
    if (l.contains("labels")) {
      lv.labels = field<std::vector<std::string>>(l, "labels", at_level(n));
      if (!lv.labels.empty() && static_cast<std::int32_t>(lv.labels.size()) != counts[n])
        throw SchemaError(at_level(n) + ": labels have the wrong length");
    }
  }
  if (auto v = validate(s); !v.empty()) throw SchemaError("sset: " + locate(s, v.front()));
  return s;
}

Json to_json(const FiniteGroup& g) {
  return {{"schema", kSchemaVersion}, {"kind", "group"}, {"name", g.name()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const Json& j) {
  expect_header(j, "group");
  try {
    return FiniteGroup::from_table(field<std::vector<std::vector<int>>>(j, "table", "group"),
                                   j.value("name", std::string()));
  } catch (const InvalidArgument& e) {
    throw SchemaError(std::string("group: ") + e.what());
  }
}

Json to_json(const SimplicialGroupoid& g) {
  Json levels = Json::array();
  for (int n = 0; n <= g.dim_cap(); ++n) {
    const GroupoidLevel& lv = g.level(n);
    levels.push_back({{"n", n},
                      {"count", lv.count},
                      {"source", lv.source},
                      {"target", lv.target},
                      {"identity", lv.identity},
                      {"inverse", lv.inverse},
                      {"composition", lv.composition},
                      {"faces", lv.faces},
                      {"degens", lv.degens}});
  }
  return {{"schema", kSchemaVersion}, {"kind", "groupoid"}, {"name", g.name()},
          {"objects", g.objects()},   {"dim_cap", g.dim_cap()}, {"levels", std::move(levels)}};
}

SimplicialGroupoid groupoid_from_json(const Json& j) {
  expect_header(j, "groupoid");
  const int objects = field<int>(j, "objects", "groupoid");
  const int cap = field<int>(j, "dim_cap", "groupoid");
  if (objects < 1 || cap < 0) throw SchemaError("groupoid: bad object count or dim_cap");
  const Json& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != cap + 1)
    throw SchemaError("groupoid: expected " + std::to_string(cap + 1) + " levels");
  SimplicialGroupoid g(objects, cap, j.value("name", std::string()));
  std::vector<std::int32_t> counts(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    counts[n] = field<std::int32_t>(levels[n], "count", at_level(n));
    if (counts[n] < 0 || counts[n] > kMaxTableSize) throw SchemaError(at_level(n) + ": bad arrow count");
  }
  for (int n = 0; n <= cap; ++n) {
    const Json& l = levels[n];
    const std::string where = at_level(n);
    GroupoidLevel& lv = g.mutable_level(n);
    lv.count = counts[n];
    lv.source = field<std::vector<int>>(l, "source", where);
    lv.target = field<std::vector<int>>(l, "target", where);
    lv.identity = field<std::vector<ArrowId>>(l, "identity", where);
    lv.inverse = field<std::vector<ArrowId>>(l, "inverse", where);
    lv.composition = field<std::vector<ArrowId>>(l, "composition", where);
    lv.faces = field<std::vector<std::vector<ArrowId>>>(l, "faces", where);
    lv.degens = field<std::vector<std::vector<ArrowId>>>(l, "degens", where);
    auto in_range = [](const std::vector<int>& v, std::size_t size, int lo, int hi) {
      if (v.size() != size) return false;
      for (int x : v)
        if (x < lo || x >= hi) return false;
      return true;
    };
    const std::size_t c = static_cast<std::size_t>(lv.count);
    if (!in_range(lv.source, c, 0, objects) || !in_range(lv.target, c, 0, objects) ||
        !in_range(lv.identity, objects, 0, lv.count) || !in_range(lv.inverse, c, 0, lv.count) ||
        !in_range(lv.composition, c * c, -1, lv.count))
      throw SchemaError(where + ": groupoid tables have the wrong shape");
    check_table(lv.faces, n == 0 ? 0 : n + 1, lv.count, n == 0 ? 0 : counts[n - 1], where, "faces");
    check_table(lv.degens, n == cap ? 0 : n + 1, lv.count, n == cap ? 0 : counts[n + 1], where, "degens");
  }
  g.finalize();
  if (auto problems = validate_groupoid(g); !problems.empty()) throw SchemaError("groupoid: " + problems.front());
  return g;
}

Json to_json(const SimplicialMap& f) {
  return {{"schema", kSchemaVersion},
          {"kind", "map"},
          {"source", to_json(*f.source)},
          {"target", to_json(*f.target)},
          {"assignment", f.assignment}};
}

SimplicialMap map_from_json(const Json& j) {
  expect_header(j, "map");
  SimplicialMap f;
  f.source = std::make_shared<const TruncatedSSet>(sset_from_json(j.at("source")));
  f.target = std::make_shared<const TruncatedSSet>(sset_from_json(j.at("target")));
  f.assignment = field<std::vector<std::vector<SimplexId>>>(j, "assignment", "map");
  const int top = std::min(f.source->dim_cap(), f.target->dim_cap());
  if (f.top_level() != top) throw SchemaError("map: expected assignments for levels 0.." + std::to_string(top));
  for (int n = 0; n <= top; ++n) {
    if (static_cast<std::int32_t>(f.assignment[n].size()) != f.source->count(n))
      throw SchemaError("map: level " + std::to_string(n) + " assignment has the wrong length");
    for (std::size_t x = 0; x < f.assignment[n].size(); ++x)
      if (f.assignment[n][x] < 0 || f.assignment[n][x] >= f.target->count(n))
        throw SchemaError("map: level " + std::to_string(n) + " index " + std::to_string(x) + " is out of range");
  }
  if (auto v = check_simplicial_map(f); !v.empty())
    throw SchemaError("map: level " + std::to_string(v.front().level) + " index " + std::to_string(v.front().simplex) +
                      " breaks " + v.front().relation);
  return f;
}

namespace {

Json torsion_json(const std::vector<Integer>& t) {
  Json out = Json::array();
  for (const Integer& x : t) {
    if (x <= Integer(std::numeric_limits<std::int64_t>::max())) out.push_back(static_cast<std::int64_t>(x));
    else out.push_back(x.str());
  }
  return out;
}

}  // namespace

Json to_json(const HomologyGroup& h) {
  return {{"k", h.degree}, {"rank", h.rank}, {"torsion", torsion_json(h.torsion)}, {"text", h.to_string()}};
}

Json to_json(const std::vector<HomologyGroup>& hs) {
  Json out = Json::array();
  for (const HomologyGroup& h : hs) out.push_back(to_json(h));
  return out;
}

Json to_json(const CertifyReport& r) {
  Json pi1 = Json::array();
  for (const Pi1Check& c : r.pi1)
    pi1.push_back({{"source_base", c.source_base},
                   {"target_base", c.target_base},
                   {"order", c.source_order},
                   {"target_order", c.target_order},
                   {"iso", c.iso},
                   {"detail", c.detail}});
  Json homology = Json::array();
  for (const HomologyCheck& c : r.homology)
    homology.push_back({{"k", c.k},
                        {"rank", c.source.rank},
                        {"torsion", torsion_json(c.source.torsion)},
                        {"target_rank", c.target.rank},
                        {"target_torsion", torsion_json(c.target.torsion)},
                        {"cone", c.cone.to_string()},
                        {"iso", c.iso}});
  Json out = {{"schema", kSchemaVersion},
              {"kind", "certify-report"},
              {"through", r.through},
              {"pi0",
               {{"source", r.pi0.source_components},
                {"target", r.pi0.target_components},
                {"bijection", r.pi0.bijection},
                {"detail", r.pi0.detail}}},
              {"pi1",
               {{"order", r.pi1.empty() ? 0 : r.pi1.front().source_order}, {"iso", r.pi1_iso()}, {"components", pi1}}},
              {"homology", homology},
              {"ok", r.ok()}};
  if (r.first_failing_degree >= 0) out["first_failing_degree"] = r.first_failing_degree;
  return out;
}

Json to_json(const PrincipalFibrationReport& r) {
  auto clause = [](const ClauseResult& c) { return Json{{"passed", c.passed}, {"detail", c.detail}}; };
  return {{"freeness", clause(r.freeness)},
          {"quotient", clause(r.quotient)},
          {"lifting", clause(r.lifting)},
          {"contractible", clause(r.contractible)},
          {"ok", r.ok()}};
}

Json to_json(const WTotal& w) {
  return {{"schema", kSchemaVersion},
          {"kind", "w-total"},
          {"convention", to_string(w.convention)},
          {"group_orders", w.group_orders},
          {"total", to_json(*w.total)},
          {"base", to_json(*w.base)},
          {"projection", w.projection.assignment},
          {"action", w.action}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("write to " + path + " failed");
}

}  // namespace hcn
