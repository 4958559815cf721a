#pragma once

// JSON forms of the library's values. Instances and reports carry
// "schema": "rsl/1".

#include <string>
#include <variant>

#include "json.hpp"

#include "rsl/barycenters.hpp"
#include "rsl/expectation.hpp"
#include "rsl/hulls.hpp"
#include "rsl/randomset.hpp"

namespace rsl::io {

using nlohmann::json;

inline constexpr const char* kSchema = "rsl/1";

json to_json(const Point& p);
json to_json(const Body& b);
json to_json(const PointCloud& c);
json to_json(const FiniteProbSpace& s);
json to_json(const Kernel& k);
json to_json(const IdentityReport& r);
json to_json(const ExpectationResult& r);

// Parsers throw rsl::Error(InvalidArgument) on schema violations; library
// validation errors (weights, dimensions) propagate unchanged.
Point point_from_json(const json& j);
FiniteProbSpace space_from_json(const json& j);
Kernel kernel_from_json(const json& j, const FiniteProbSpace& space);

// {"weights":[...], "values":[{"vertices":[[...]], "balls":[...]} | {"points":[[...]]}]}
// A value list made only of {"points": ...} entries is a RandomCloud;
// otherwise every entry must be a body.
using Instance = std::variant<RandomSet, RandomCloud>;
Instance instance_from_json(const json& j);
json instance_to_json(const RandomSet& x);
json instance_to_json(const RandomCloud& x);

}  // namespace rsl::io
