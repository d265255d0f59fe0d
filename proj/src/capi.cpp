#include "hcnerve/hcnerve.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "hcnerve/certify.hpp"
#include "hcnerve/comparison.hpp"
#include "hcnerve/errors.hpp"
#include "hcnerve/homology.hpp"
#include "hcnerve/json_io.hpp"
#include "hcnerve/pipeline.hpp"
#include "hcnerve/wbar.hpp"

struct hcn_groupoid {
  hcn::SimplicialGroupoid value;
};
struct hcn_sset {
  std::shared_ptr<const hcn::TruncatedSSet> value;
};
struct hcn_map {
  hcn::SimplicialMap value;
};

namespace {

thread_local std::string last_error;

hcn_status fail(hcn_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
hcn_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return HCN_OK;
  } catch (const hcn::BudgetExceeded& e) {
    return fail(HCN_ERR_BUDGET, e.what());
  } catch (const hcn::TruncationError& e) {
    return fail(HCN_ERR_TRUNCATION, e.what());
  } catch (const hcn::SchemaError& e) {
    return fail(HCN_ERR_SCHEMA, e.what());
  } catch (const hcn::InvalidArgument& e) {
    return fail(HCN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const hcn::BuildError& e) {
    return fail(HCN_ERR_BUILD, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(HCN_ERR_SCHEMA, e.what());
  } catch (const std::exception& e) {
    return fail(HCN_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw hcn::InvalidArgument(what);
}

hcn_sset* wrap(hcn::TruncatedSSet s) {
  return new hcn_sset{std::make_shared<const hcn::TruncatedSSet>(std::move(s))};
}

}  // namespace

extern "C" {

const char* hcn_last_error(void) { return last_error.c_str(); }
const char* hcn_version(void) { return "0.1.0"; }
void hcn_string_free(char* s) { std::free(s); }

hcn_status hcn_groupoid_from_spec(const char* spec, int dim_cap, hcn_groupoid** out) {
  return guard([&] {
    require(spec && out, "null argument");
    *out = new hcn_groupoid{hcn::parse_instance(spec, dim_cap).groupoid};
  });
}

hcn_status hcn_groupoid_from_json(const char* json, hcn_groupoid** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = new hcn_groupoid{hcn::groupoid_from_json(hcn::parse_json(json))};
  });
}

hcn_status hcn_groupoid_to_json(const hcn_groupoid* g, char** out_json) {
  return guard([&] {
    require(g && out_json, "null argument");
    *out_json = copy_string(hcn::dump(hcn::to_json(g->value)));
  });
}

int hcn_groupoid_objects(const hcn_groupoid* g) { return g ? g->value.objects() : -1; }
int hcn_groupoid_dim_cap(const hcn_groupoid* g) { return g ? g->value.dim_cap() : -1; }
void hcn_groupoid_free(hcn_groupoid* g) { delete g; }

hcn_status hcn_build_wbar(const hcn_groupoid* g, int dim_cap, hcn_wbar_engine engine, hcn_sset** out) {
  return guard([&] {
    require(g && out, "null argument");
    if (engine == HCN_ENGINE_TUPLE) {
      *out = wrap(hcn::build_wbar(g->value, dim_cap));
    } else if (engine == HCN_ENGINE_REPRESENTABLE) {
      *out = wrap(hcn::wbar_via_representable(g->value, dim_cap).sset);
    } else {
      throw hcn::InvalidArgument("unknown engine");
    }
  });
}

hcn_status hcn_build_nerve(const hcn_groupoid* g, int dim_cap, uint64_t budget, hcn_sset** out) {
  return guard([&] {
    require(g && out, "null argument");
    require(budget > 0, "budget must be positive");
    hcn::EnumerationOptions opts;
    opts.budget = budget;
    *out = wrap(hcn::build_nerve(g->value, dim_cap, opts));
  });
}

hcn_status hcn_build_w_json(const hcn_groupoid* g, int dim_cap, char** out_json) {
  return guard([&] {
    require(g && out_json, "null argument");
    *out_json = copy_string(hcn::dump(hcn::to_json(hcn::build_w_total(g->value, dim_cap))));
  });
}

hcn_status hcn_compare(const hcn_groupoid* g, int dim_cap, uint64_t budget, hcn_map** out, char** report_json) {
  return guard([&] {
    require(g && out, "null argument");
    require(budget > 0, "budget must be positive");
    hcn::EnumerationOptions opts;
    opts.budget = budget;
    hcn::Comparison cmp = hcn::build_comparison(g->value, dim_cap, opts);
    if (report_json) {
      const auto simplicial = hcn::check_simplicial_map(cmp.map);
      const auto naturality = hcn::naturality_problems(std::min(dim_cap, 3));
      hcn::Json report = {{"simplicial", simplicial.empty()},
                          {"naturality", naturality.empty()},
                          {"bijective", hcn::is_levelwise_bijective(cmp.map)}};
      if (!simplicial.empty()) report["simplicial_problem"] = simplicial.front().to_string();
      if (!naturality.empty()) report["naturality_problem"] = naturality.front();
      *report_json = copy_string(hcn::dump(report));
    }
    *out = new hcn_map{std::move(cmp.map)};
  });
}

hcn_status hcn_sset_from_json(const char* json, hcn_sset** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = wrap(hcn::sset_from_json(hcn::parse_json(json)));
  });
}

hcn_status hcn_sset_to_json(const hcn_sset* s, char** out_json) {
  return guard([&] {
    require(s && out_json, "null argument");
    *out_json = copy_string(hcn::dump(hcn::to_json(*s->value)));
  });
}

int hcn_sset_dim_cap(const hcn_sset* s) { return s ? s->value->dim_cap() : -1; }

int64_t hcn_sset_count(const hcn_sset* s, int level) {
  if (!s || level < 0 || level > s->value->dim_cap()) return -1;
  return s->value->count(level);
}

hcn_status hcn_sset_validate(const hcn_sset* s, int* valid, char** problems_json) {
  return guard([&] {
    require(s && valid, "null argument");
    const auto problems = hcn::validate(*s->value);
    *valid = problems.empty() ? 1 : 0;
    if (problems_json) {
      hcn::Json list = hcn::Json::array();
      for (const auto& v : problems) list.push_back(v.to_string());
      *problems_json = copy_string(hcn::dump(list));
    }
  });
}

hcn_status hcn_homology(const hcn_sset* s, int through, char** out_json) {
  return guard([&] {
    require(s && out_json, "null argument");
    *out_json = copy_string(hcn::dump(hcn::to_json(hcn::homology(*s->value, through))));
  });
}

void hcn_sset_free(hcn_sset* s) { delete s; }

hcn_status hcn_map_from_json(const char* json, hcn_map** out) {
  return guard([&] {
    require(json && out, "null argument");
    hcn::Json j = hcn::parse_json(json);
    if (j.is_object() && j.contains("map") && !j.contains("assignment")) j = j.at("map");
    *out = new hcn_map{hcn::map_from_json(j)};
  });
}

hcn_status hcn_map_to_json(const hcn_map* m, char** out_json) {
  return guard([&] {
    require(m && out_json, "null argument");
    *out_json = copy_string(hcn::dump(hcn::to_json(m->value)));
  });
}

hcn_status hcn_map_source(const hcn_map* m, hcn_sset** out) {
  return guard([&] {
    require(m && out, "null argument");
    *out = new hcn_sset{m->value.source};
  });
}

hcn_status hcn_map_target(const hcn_map* m, hcn_sset** out) {
  return guard([&] {
    require(m && out, "null argument");
    *out = new hcn_sset{m->value.target};
  });
}

void hcn_map_free(hcn_map* m) { delete m; }

hcn_status hcn_certify(const hcn_map* m, int through, int threads, int* ok, char** report_json) {
  return guard([&] {
    require(m && ok, "null argument");
    hcn::CertifyOptions opts;
    opts.threads = threads < 1 ? 1 : threads;
    const hcn::CertifyReport r = hcn::certify_equivalence(m->value, through, opts);
    *ok = r.ok() ? 1 : 0;
    if (report_json) *report_json = copy_string(hcn::dump(hcn::to_json(r)));
  });
}

hcn_status hcn_verify_theorem(const char* config_json, int* exit_code, char** report_json, char** summary) {
  return guard([&] {
    require(config_json && exit_code, "null argument");
    const hcn::TheoremReport r = hcn::verify_theorem(hcn::config_from_json(hcn::parse_json(config_json)));
    *exit_code = r.exit_code;
    if (report_json) *report_json = copy_string(hcn::dump(r.to_json()));
    if (summary) *summary = copy_string(r.summary());
  });
}

}  // extern "C"
