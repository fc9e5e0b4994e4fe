#pragma once

#include <string>
#include <vector>

#include "asymfun/geometry.hpp"
#include "asymfun/growth.hpp"
#include "asymfun/wos.hpp"
#include "json.hpp"

// JSON formats: pathsystem/1 (path systems), funcspec/1 (entire functions),
// manifest/1 (run manifests), plus report encodings. Readers throw
// ParseError on malformed input.

namespace asymfun {

using json = nlohmann::ordered_json;

inline constexpr const char* kPathSystemFormat = "pathsystem/1";
inline constexpr const char* kFuncSpecFormat = "funcspec/1";
inline constexpr const char* kManifestFormat = "manifest/1";

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const PathSystem& sys);
PathSystem pathsystem_from_json(const json& j);

json to_json(const EntireSpec& spec);
EntireSpec funcspec_from_json(const json& j);

json to_json(const GrowthSample& s);
json to_json(const OrderFit& f);
json to_json(const AngularSlice& s);
json to_json(const CarlemanReport& r);
json to_json(const SectorInequality& s);
json to_json(const WosEstimate& e);
json to_json(const Theorem1Report& r);

/// manifest/1 document echoing a fully resolved run configuration.
json make_manifest(const std::string& command, const json& config, const std::vector<std::string>& outputs);

/// Reads and parses a JSON file. Throws ParseError.
json read_json_file(const std::string& path);

}  // namespace asymfun
