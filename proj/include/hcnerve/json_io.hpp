#pragma once

#include <string>

#include "json.hpp"

#include "hcnerve/certify.hpp"
#include "hcnerve/group.hpp"
#include "hcnerve/groupoid.hpp"
#include "hcnerve/homology.hpp"
#include "hcnerve/sset.hpp"
#include "hcnerve/wbar.hpp"

namespace hcn {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Every document carries "schema": 1 and a "kind". Importers check the
// structure first and then the mathematical identities, throwing SchemaError
// that names the offending level and index.
Json to_json(const TruncatedSSet& s);
TruncatedSSet sset_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const SimplicialGroupoid& g);
SimplicialGroupoid groupoid_from_json(const Json& j);

// Source and target are embedded.
Json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j);

Json to_json(const HomologyGroup& h);
Json to_json(const std::vector<HomologyGroup>& hs);
Json to_json(const CertifyReport& r);
Json to_json(const PrincipalFibrationReport& r);
Json to_json(const WTotal& w);

std::string dump(const Json& j);  // two-space indent, trailing newline
Json parse_json(const std::string& text);  // SchemaError on malformed text
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hcn
