#include "linf/sectors.hpp"

namespace linf {

namespace {

void require_axis(const PointN& p, const Sector& s) {
  if (s.axis < 1 || s.axis > p.dimension())
    throw DimensionError("sector axis " + std::to_string(s.axis) + " outside 1.." +
                         std::to_string(p.dimension()));
}

bool all_offsets_equal(const PointN& p, const PointN& q) {
  const Scalar first = abs(q[0] - p[0]);
  for (std::size_t i = 1; i < p.dimension(); ++i)
    if (abs(q[i] - p[i]) != first) return false;
  return true;
}

void require_distinct(const PointN& p, const PointN& q) {
  if (p == q) throw DomainError("points coincide at " + to_string(p));
}

}  // namespace

std::string to_string(const Sector& s) {
  return std::string("S") + std::to_string(s.axis) + sign_char(s.sign);
}

SphereSpec::SphereSpec(PointN center, Scalar radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_ <= 0) throw DomainError("sphere radius must be positive, got " + to_string(radius_));
}

bool in_sector(const PointN& p, const PointN& q, const Sector& s) {
  require_same_dimension(p, q);
  require_axis(p, s);
  const std::size_t i = s.axis - 1;
  return chebyshev_distance(p, q) == sign_value(s.sign) * (q[i] - p[i]);
}

SectorSignature sector_signature(const PointN& p, const PointN& q) {
  require_same_dimension(p, q);
  const Scalar d = chebyshev_distance(p, q);
  SectorSignature out;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const Scalar delta = q[i] - p[i];
    if (delta == d) out.push_back({i + 1, Sign::Plus});
    if (-delta == d) out.push_back({i + 1, Sign::Minus});
  }
  return out;
}

bool is_diagonal(const PointN& p, const PointN& q) {
  require_same_dimension(p, q);
  if (p.dimension() != 2) throw DimensionError("diagonal position is defined in dimension 2");
  require_distinct(p, q);
  return all_offsets_equal(p, q);
}

bool is_cubic_diagonal(const PointN& p, const PointN& q) {
  require_same_dimension(p, q);
  if (p.dimension() != 3)
    throw DimensionError("cubic diagonal position is defined in dimension 3");
  require_distinct(p, q);
  return all_offsets_equal(p, q);
}

GeodesicVerdict check_geodesic(const Polyline& path) {
  const auto v = path.vertices();
  GeodesicVerdict verdict;
  // Sectors are transitive along a path, so checking consecutive pairs
  // covers every t < t' of the continuous criterion.
  for (const Sector& s : sector_signature(path.front(), path.back())) {
    std::size_t j = 0;
    while (j + 1 < v.size() && in_sector(v[j], v[j + 1], s)) ++j;
    if (j + 1 == v.size()) {
      verdict.is_geodesic = true;
      verdict.witness = s;
      verdict.violation.reset();
      return verdict;
    }
    if (!verdict.violation) verdict.violation = j;
  }
  return verdict;
}

bool is_geodesic_polyline(const Polyline& path) { return check_geodesic(path).is_geodesic; }

GeodesicCount tau(const PointN& p, const PointN& q) {
  require_same_dimension(p, q);
  return all_offsets_equal(p, q) ? GeodesicCount::One : GeodesicCount::Infinite;
}

std::pair<Polyline, Polyline> witness_two_geodesics(const PointN& p, const PointN& q) {
  if (tau(p, q) == GeodesicCount::One)
    throw DomainError("the geodesic from " + to_string(p) + " to " + to_string(q) +
                      " is unique");
  const Scalar d = chebyshev_distance(p, q);
  std::vector<Scalar> mid(p.dimension());
  std::size_t slack_axis = p.dimension();
  for (std::size_t k = 0; k < p.dimension(); ++k) {
    const Scalar delta = q[k] - p[k];
    mid[k] = p[k] + delta / 2;
    if (slack_axis == p.dimension() && abs(delta) < d) slack_axis = k;
  }
  // Any shift up to (d - |delta_j|) / 2 on a non-extremal axis keeps both
  // halves at length d / 2.
  mid[slack_axis] += (d - abs(q[slack_axis] - p[slack_axis])) / 2;
  return {segment(p, q), Polyline({p, PointN(std::move(mid)), q})};
}

std::vector<PointN> unique_geodesic_points(const SphereSpec& sphere) {
  const std::size_t n = sphere.center().dimension();
  const std::uint64_t count = nu_ambient(n);
  std::vector<PointN> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Scalar> coords(n);
    for (std::size_t k = 0; k < n; ++k) {
      const bool minus = (mask >> (n - 1 - k)) & 1U;
      coords[k] = sphere.center()[k] + (minus ? -sphere.radius() : sphere.radius());
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::uint64_t nu_ambient(std::size_t dimension) {
  if (dimension < 2) throw DomainError("dimension must be at least 2");
  if (dimension > 63) throw DomainError("dimension too large to count corners");
  return std::uint64_t{1} << dimension;
}

}  // namespace linf
