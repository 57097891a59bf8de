#pragma once

// Naive validators for the geometry routines. They rely only on the core
// value types (points, polylines, planes, charts as maps, group elements
// as maps) and on the metric itself, never on the sector criterion, the
// section builder, or the chart/class constructions they are meant to check.

#include "linf/isometry.hpp"
#include "linf/metric.hpp"
#include "linf/plane.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace linf::oracle {

struct ProbeConfig {
  int grid_density = 100;
  std::vector<Scalar> perturbations{Scalar(1, 2), Scalar(-1, 2), Scalar(1, 4), Scalar(-1, 4)};
  std::uint64_t seed = 42;

  /// grid_density >= 2 and perturbations of both signs.
  void validate() const;
};

nlohmann::json to_json(const ProbeConfig& cfg);
ProbeConfig probe_config_from_json(const nlohmann::json& j);

/// Partition sum of d-infinity over `parts` equal subdivisions of every
/// segment. Throws DomainError when parts < 1.
Scalar refine_length(const Polyline& path, int parts);

/// Lattice points on the six faces of [-r, r]^3 (grid_density steps per
/// side) whose plane residual is within what one half lattice cell allows.
/// Every exact section vertex is within r / grid_density of a returned
/// point. Requires a plane through the origin and r > 0.
std::vector<PointN> brute_section(const Plane& plane, const Scalar& radius, const ProbeConfig& cfg);

/// Corners of a sampled section: cloud points on cube edges, clustered with
/// the given d-infinity link distance; each cluster contributes its
/// lexicographic extremes and representatives closer than `link` merge.
std::vector<PointN> cloud_extremes(const std::vector<PointN>& cloud, const Scalar& radius,
                                   const Scalar& link);

/// False means a second geodesic was found: for some axis j and shift eta
/// in the perturbation set, the path p -> midpoint + eta e_j -> q has
/// length d(p, q). True only says no probe found one.
bool probe_unique_geodesic(const PointN& p, const PointN& q, const ProbeConfig& cfg);

/// Draws `count` seeded rational point pairs on the chart's plane and
/// reports whether d-infinity survives the projection exactly for all of
/// them. Throws DomainError if `chart` was built for a different plane.
bool sample_isometry_check(const FlatChart& chart, const Plane& plane, int count,
                           std::uint64_t seed);

/// Same, for a cube isometry applied to points of `plane`.
bool sample_isometry_check(const SignedPermutation& g, const Plane& plane, int count,
                           std::uint64_t seed);

/// Seeded rational points on `plane`.
std::vector<PointN> sample_plane_points(const Plane& plane, int count, std::uint64_t seed);

}  // namespace linf::oracle
