#include "linf/json_io.hpp"

namespace linf::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(std::string("expected an object with field '") + key + "'");
  return j.at(key);
}

Sign sign_from_json(const Json& j) {
  if (j == "+") return Sign::Plus;
  if (j == "-") return Sign::Minus;
  throw DomainError("sign must be \"+\" or \"-\", got " + j.dump());
}

}  // namespace

Json to_json(const Scalar& value) { return to_string(value); }

Json to_json(const PointN& point) {
  Json out = Json::array();
  for (const auto& x : point.coords()) out.push_back(to_json(x));
  return out;
}

Json to_json(const Polyline& path) {
  Json vertices = Json::array();
  for (const auto& v : path.vertices()) vertices.push_back(to_json(v));
  return {{"vertices", std::move(vertices)}};
}

Json to_json(const Sector& sector) {
  return {{"axis", sector.axis}, {"sign", std::string(1, sign_char(sector.sign))}};
}

Json to_json(GeodesicCount count) { return count == GeodesicCount::One ? "one" : "infinite"; }

Json to_json(const Plane& plane) {
  return {{"a", to_json(plane.a())},
          {"b", to_json(plane.b())},
          {"c", to_json(plane.c())},
          {"d", to_json(plane.d())}};
}

Json to_json(const SectionPolygon& polygon) {
  Json vertices = Json::array();
  for (const auto& v : polygon.vertices) vertices.push_back(to_json(v));
  return {{"shape", to_string(polygon.shape)},
          {"radius", to_json(polygon.radius)},
          {"vertices", std::move(vertices)}};
}

Json to_json(const SignedPermutation& g) {
  Json signs = Json::array();
  for (Sign s : g.signs()) signs.push_back(std::string(1, sign_char(s)));
  return {{"perm", g.perm()}, {"signs", std::move(signs)}};
}

Json to_json(const CanonicalClass& cls) {
  if (cls.kind == CanonicalClass::Kind::Flat) return {{"kind", "flat"}};
  Json sides = Json::array();
  for (const auto& s : cls.sides) sides.push_back(to_json(s));
  return {{"kind", "triangle"}, {"sides", std::move(sides)}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return parse_scalar(j.dump());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw DomainError("expected an integer or a \"num/den\" string, got " + j.dump());
}

PointN point_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("a point is a JSON array, got " + j.dump());
  std::vector<Scalar> coords;
  for (const auto& x : j) coords.push_back(scalar_from_json(x));
  try {
    return PointN(std::move(coords));
  } catch (const DimensionError& e) {
    throw DomainError(e.what());
  }
}

Polyline polyline_from_json(const Json& j) {
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw DomainError("\"vertices\" must be an array");
  std::vector<PointN> points;
  for (const auto& v : vertices) points.push_back(point_from_json(v));
  try {
    return Polyline(std::move(points));
  } catch (const DimensionError& e) {
    throw DomainError(e.what());
  }
}

Sector sector_from_json(const Json& j) {
  const Json& axis = field(j, "axis");
  if (!axis.is_number_integer() || axis.get<long long>() < 1)
    throw DomainError("sector axis must be a positive integer");
  return {axis.get<std::size_t>(), sign_from_json(field(j, "sign"))};
}

GeodesicCount geodesic_count_from_json(const Json& j) {
  if (j == "one") return GeodesicCount::One;
  if (j == "infinite") return GeodesicCount::Infinite;
  throw DomainError("geodesic count must be \"one\" or \"infinite\", got " + j.dump());
}

Plane plane_from_json(const Json& j) {
  Scalar d = j.is_object() && j.contains("d") ? scalar_from_json(j.at("d")) : Scalar(0);
  return Plane(scalar_from_json(field(j, "a")), scalar_from_json(field(j, "b")),
               scalar_from_json(field(j, "c")), d);
}

SectionPolygon section_from_json(const Json& j) {
  SectionPolygon out;
  const Json& shape = field(j, "shape");
  if (shape == "hexagon") out.shape = SectionShape::Hexagon;
  else if (shape == "tetragon") out.shape = SectionShape::Tetragon;
  else throw DomainError("shape must be \"hexagon\" or \"tetragon\", got " + shape.dump());
  out.radius = scalar_from_json(field(j, "radius"));
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw DomainError("\"vertices\" must be an array");
  for (const auto& v : vertices) out.vertices.push_back(point_from_json(v));
  return out;
}

SignedPermutation signed_permutation_from_json(const Json& j) {
  const Json& perm = field(j, "perm");
  const Json& signs = field(j, "signs");
  if (!perm.is_array() || perm.size() != 3 || !signs.is_array() || signs.size() != 3)
    throw DomainError("\"perm\" and \"signs\" must be arrays of length 3");
  std::array<int, 3> p{};
  std::array<Sign, 3> s{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!perm[k].is_number_integer()) throw DomainError("perm entries must be integers");
    p[k] = perm[k].get<int>();
    s[k] = sign_from_json(signs[k]);
  }
  return SignedPermutation(p, s);
}

CanonicalClass canonical_class_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "flat") return CanonicalClass::flat();
  if (kind != "triangle") throw DomainError("class kind must be \"flat\" or \"triangle\"");
  const Json& sides = field(j, "sides");
  if (!sides.is_array() || sides.size() != 3) throw DomainError("\"sides\" must have 3 entries");
  CanonicalClass out{CanonicalClass::Kind::Triangle, {}};
  for (std::size_t k = 0; k < 3; ++k) out.sides[k] = scalar_from_json(sides[k]);
  return out;
}

}  // namespace linf::json
