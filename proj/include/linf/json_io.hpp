#pragma once

// JSON forms shared by the library and the command-line tool.
//
//   Scalar           "1/2" or "3" on output; strings or integers on input
//   PointN           ["1/2", 1, -1]
//   Polyline         {"vertices": [[...], [...]]}
//   Sector           {"axis": 1, "sign": "+"}
//   GeodesicCount    "one" | "infinite"
//   Plane            {"a": "2", "b": "2", "c": "3", "d": "0"}
//   SectionPolygon   {"shape": "hexagon", "radius": "1", "vertices": [...]}
//   SignedPermutation {"perm": [3, 2, 1], "signs": ["+", "-", "+"]}
//   CanonicalClass   {"kind": "flat"} | {"kind": "triangle", "sides": [...]}
//
// Parsing failures throw DomainError.

#include "linf/isometry.hpp"
#include "linf/metric.hpp"
#include "linf/plane.hpp"
#include "linf/sectors.hpp"

#include <json.hpp>

namespace linf::json {

using Json = nlohmann::json;

Json to_json(const Scalar& value);
Json to_json(const PointN& point);
Json to_json(const Polyline& path);
Json to_json(const Sector& sector);
Json to_json(GeodesicCount count);
Json to_json(const Plane& plane);
Json to_json(const SectionPolygon& polygon);
Json to_json(const SignedPermutation& g);
Json to_json(const CanonicalClass& cls);

Scalar scalar_from_json(const Json& j);
PointN point_from_json(const Json& j);
Polyline polyline_from_json(const Json& j);
Sector sector_from_json(const Json& j);
GeodesicCount geodesic_count_from_json(const Json& j);
Plane plane_from_json(const Json& j);
SectionPolygon section_from_json(const Json& j);
SignedPermutation signed_permutation_from_json(const Json& j);
CanonicalClass canonical_class_from_json(const Json& j);

}  // namespace linf::json
