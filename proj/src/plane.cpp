#include "linf/plane.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace linf {

namespace {

// Smallest integer multiple of the coefficients with coprime entries.
void canonicalize(std::array<Scalar, 3>& normal, Scalar& offset) {
  std::array<Scalar*, 4> all{&normal[0], &normal[1], &normal[2], &offset};
  mpz_class den_lcm = 1;
  for (Scalar* x : all) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x->get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (Scalar* x : all) {
    *x *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x->get_num_mpz_t());
  }
  const auto lead = std::find_if(normal.begin(), normal.end(), [](const Scalar& x) { return x != 0; });
  if (*lead < 0) num_gcd = -num_gcd;
  for (Scalar* x : all) *x /= num_gcd;
}

Scalar dot(const std::array<Scalar, 3>& n, const PointN& p) {
  return n[0] * p[0] + n[1] * p[1] + n[2] * p[2];
}

void require_dimension3(const PointN& p) {
  if (p.dimension() != 3) throw DimensionError("plane points live in dimension 3, got " +
                                               std::to_string(p.dimension()));
}

void require_through_origin(const Plane& plane) {
  if (!plane.passes_through_origin())
    throw DomainError("plane " + to_string(plane) + " does not pass through the origin");
}

bool parallel(const PointN& u, const PointN& v) {
  return u[1] * v[2] == u[2] * v[1] && u[2] * v[0] == u[0] * v[2] && u[0] * v[1] == u[1] * v[0];
}

PointN cross(const PointN& u, const PointN& v) {
  return PointN{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

void add_unique(std::vector<PointN>& points, PointN p) {
  if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
}

// Points where the plane meets the boundary of the face x_axis = side * r.
std::vector<PointN> face_points(const Plane& plane, std::size_t axis, int side, const Scalar& r) {
  const auto& n = plane.normal();
  const std::size_t u = axis == 0 ? 1 : 0;
  const std::size_t v = axis == 2 ? 1 : 2;
  const Scalar rhs = -n[axis] * side * r;

  auto make = [&](const Scalar& uu, const Scalar& vv) {
    std::vector<Scalar> c(3);
    c[axis] = side * r;
    c[u] = uu;
    c[v] = vv;
    return PointN(std::move(c));
  };

  std::vector<PointN> out;
  for (int edge_side : {-1, 1}) {
    const Scalar fixed = edge_side * r;
    // Square edge with u fixed.
    if (n[v] != 0) {
      Scalar vv = (rhs - n[u] * fixed) / n[v];
      if (abs(vv) <= r) add_unique(out, make(fixed, vv));
    } else if (n[u] * fixed == rhs) {
      add_unique(out, make(fixed, -r));
      add_unique(out, make(fixed, r));
    }
    // Square edge with v fixed.
    if (n[u] != 0) {
      Scalar uu = (rhs - n[v] * fixed) / n[u];
      if (abs(uu) <= r) add_unique(out, make(uu, fixed));
    } else if (n[v] * fixed == rhs) {
      add_unique(out, make(-r, fixed));
      add_unique(out, make(r, fixed));
    }
  }
  if (out.size() > 2) throw std::logic_error("face meets plane in more than a segment");
  return out;
}

}  // namespace

Plane::Plane(Scalar a, Scalar b, Scalar c, Scalar d)
    : normal_{std::move(a), std::move(b), std::move(c)}, offset_(std::move(d)) {
  if (normal_[0] == 0 && normal_[1] == 0 && normal_[2] == 0)
    throw DomainError("plane normal vector (a, b, c) must be nonzero");
  canonicalize(normal_, offset_);
}

bool operator<(const Plane& lhs, const Plane& rhs) {
  if (lhs.normal_ != rhs.normal_) return lhs.normal_ < rhs.normal_;
  return lhs.offset_ < rhs.offset_;
}

Scalar Plane::evaluate(const PointN& point) const {
  require_dimension3(point);
  return dot(normal_, point) - offset_;
}

bool Plane::contains(const PointN& point) const { return evaluate(point) == 0; }

std::string to_string(const Plane& plane) {
  return "(" + to_string(plane.a()) + "," + to_string(plane.b()) + "," + to_string(plane.c()) +
         "," + to_string(plane.d()) + ")";
}

Translation translate_to_origin(const Plane& plane) {
  std::size_t axis = 2;
  while (plane.normal()[axis] == 0) --axis;
  std::vector<Scalar> shift(3, Scalar(0));
  shift[axis] = -plane.d() / plane.normal()[axis];
  return {Plane(plane.a(), plane.b(), plane.c(), 0), PointN(std::move(shift))};
}

bool triangle_test(const Plane& plane) {
  const Scalar a = abs(plane.a());
  const Scalar b = abs(plane.b());
  const Scalar c = abs(plane.c());
  return a > 0 && b > 0 && c > 0 && a + b > c && a + c > b && b + c > a;
}

std::string to_string(SectionShape shape) {
  return shape == SectionShape::Hexagon ? "hexagon" : "tetragon";
}

SectionPolygon cross_section(const Plane& plane, const Scalar& radius) {
  require_through_origin(plane);
  if (radius <= 0) throw DomainError("section radius must be positive, got " + to_string(radius));

  std::vector<PointN> vertices;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  auto index_of = [&](const PointN& p) {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    if (it != vertices.end()) return static_cast<std::size_t>(it - vertices.begin());
    vertices.push_back(p);
    return vertices.size() - 1;
  };
  for (std::size_t axis = 0; axis < 3; ++axis) {
    for (int side : {1, -1}) {
      const auto pts = face_points(plane, axis, side, radius);
      std::vector<std::size_t> ids;
      for (const auto& p : pts) ids.push_back(index_of(p));
      if (ids.size() == 2) edges.insert(std::minmax(ids[0], ids[1]));
    }
  }

  const std::size_t count = vertices.size();
  if (count != 4 && count != 6)
    throw std::logic_error("plane " + to_string(plane) + " produced a section with " +
                           std::to_string(count) + " vertices");
  std::vector<std::vector<std::size_t>> adjacent(count);
  for (const auto& [i, j] : edges) {
    adjacent[i].push_back(j);
    adjacent[j].push_back(i);
  }
  for (const auto& nbrs : adjacent)
    if (nbrs.size() != 2) throw std::logic_error("section boundary is not a simple cycle");

  const std::size_t start = static_cast<std::size_t>(
      std::max_element(vertices.begin(), vertices.end()) - vertices.begin());
  const PointN normal{plane.a(), plane.b(), plane.c()};
  auto turns_left = [&](std::size_t from, std::size_t to) {
    const PointN w = cross(vertices[from], vertices[to]);
    return w[0] * normal[0] + w[1] * normal[1] + w[2] * normal[2] > 0;
  };

  SectionPolygon out;
  out.radius = radius;
  out.shape = count == 6 ? SectionShape::Hexagon : SectionShape::Tetragon;
  std::size_t prev = start;
  std::size_t cur = turns_left(start, adjacent[start][0]) ? adjacent[start][0] : adjacent[start][1];
  out.vertices.push_back(vertices[start]);
  while (cur != start) {
    out.vertices.push_back(vertices[cur]);
    const std::size_t next = adjacent[cur][0] == prev ? adjacent[cur][1] : adjacent[cur][0];
    prev = std::exchange(cur, next);
  }
  if (out.vertices.size() != count) throw std::logic_error("section boundary is disconnected");
  return out;
}

std::vector<Scalar> section_edge_lengths(const SectionPolygon& polygon) {
  const auto& v = polygon.vertices;
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(chebyshev_distance(v[i], v[(i + 1) % v.size()]));
  return out;
}

FlatChart::FlatChart(Plane plane, Projection projection, Embedding embedding)
    : plane_(std::move(plane)), projection_(std::move(projection)), embedding_(std::move(embedding)) {
  require_through_origin(plane_);
  for (std::size_t col = 0; col < 2; ++col) {
    Scalar image = 0;
    for (std::size_t k = 0; k < 3; ++k) image += plane_.normal()[k] * embedding_[k][col];
    if (image != 0) throw DomainError("chart embedding leaves plane " + to_string(plane_));
  }
  for (std::size_t row = 0; row < 2; ++row) {
    for (std::size_t col = 0; col < 2; ++col) {
      Scalar entry = 0;
      for (std::size_t k = 0; k < 3; ++k) entry += projection_[row][k] * embedding_[k][col];
      if (entry != (row == col ? 1 : 0))
        throw DomainError("chart projection does not invert its embedding");
    }
  }
}

PointN FlatChart::project(const PointN& point) const {
  require_dimension3(point);
  std::vector<Scalar> out(2, Scalar(0));
  for (std::size_t row = 0; row < 2; ++row)
    for (std::size_t k = 0; k < 3; ++k) out[row] += projection_[row][k] * point[k];
  return PointN(std::move(out));
}

PointN FlatChart::embed(const PointN& chart_point) const {
  if (chart_point.dimension() != 2) throw DimensionError("chart points live in dimension 2");
  std::vector<Scalar> out(3, Scalar(0));
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t col = 0; col < 2; ++col) out[k] += embedding_[k][col] * chart_point[col];
  return PointN(std::move(out));
}

std::size_t dominant_axis(const Plane& plane) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (abs(plane.normal()[k]) > abs(plane.normal()[best])) best = k;
  return best;
}

FlatChart flat_isometry_to_R2(const Plane& plane) {
  require_through_origin(plane);
  if (triangle_test(plane))
    throw DomainError("plane " + to_string(plane) + " is not isometric to R^2_inf");
  // With |n_drop| >= |n_i| + |n_j| (or one of them zero), the dropped
  // coordinate -(n_i x_i + n_j x_j) / n_drop moves no more than the kept ones.
  const std::size_t drop = dominant_axis(plane);
  const auto& n = plane.normal();
  std::array<std::size_t, 2> keep{};
  for (std::size_t k = 0, slot = 0; k < 3; ++k)
    if (k != drop) keep[slot++] = k;

  FlatChart::Projection projection{};
  FlatChart::Embedding embedding{};
  for (auto& row : projection) row.fill(0);
  for (auto& row : embedding) row.fill(0);
  for (std::size_t slot = 0; slot < 2; ++slot) {
    projection[slot][keep[slot]] = 1;
    embedding[keep[slot]][slot] = 1;
    embedding[drop][slot] = -n[keep[slot]] / n[drop];
  }
  return FlatChart(plane, projection, embedding);
}

std::size_t nu_in_plane(const Plane& plane) {
  return cross_section(translate_to_origin(plane).plane, Scalar(1)).vertices.size();
}

GeodesicCount tau_in_plane(const Plane& plane, const PointN& p, const PointN& q) {
  require_dimension3(p);
  require_dimension3(q);
  if (!plane.contains(p) || !plane.contains(q))
    throw DomainError("points must lie on plane " + to_string(plane));
  if (p == q) throw DomainError("points coincide at " + to_string(p));
  const PointN direction = q - p;
  const auto section = cross_section(translate_to_origin(plane).plane, Scalar(1));
  for (const auto& vertex : section.vertices)
    if (parallel(direction, vertex)) return GeodesicCount::One;
  return GeodesicCount::Infinite;
}

}  // namespace linf
