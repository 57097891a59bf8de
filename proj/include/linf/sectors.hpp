#pragma once

#include "linf/metric.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace linf {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline int sign_value(Sign s) noexcept { return static_cast<int>(s); }
inline char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// The sector S_axis^sign(p): points q with d(p,q) = sign * (q_axis - p_axis).
/// `axis` is 1-based.
struct Sector {
  std::size_t axis = 1;
  Sign sign = Sign::Plus;

  friend auto operator<=>(const Sector&, const Sector&) = default;
};

std::string to_string(const Sector& s);

/// Sectors of p containing q, ordered by axis then + before -.
using SectorSignature = std::vector<Sector>;

/// Number of geodesics joining two points. Only 1 and infinity occur in R^n_inf.
enum class GeodesicCount { One, Infinite };

/// Metric sphere {y : d(center, y) = radius}; radius > 0.
class SphereSpec {
 public:
  SphereSpec(PointN center, Scalar radius);
  const PointN& center() const noexcept { return center_; }
  const Scalar& radius() const noexcept { return radius_; }

 private:
  PointN center_;
  Scalar radius_;
};

bool in_sector(const PointN& p, const PointN& q, const Sector& s);

/// All 2n sectors when q == p.
SectorSignature sector_signature(const PointN& p, const PointN& q);

/// Planar case: |dx| == |dy|. Requires dimension 2 and p != q.
bool is_diagonal(const PointN& p, const PointN& q);

/// Spatial case: |dx| == |dy| == |dz|. Requires dimension 3 and p != q.
bool is_cubic_diagonal(const PointN& p, const PointN& q);

/// Outcome of the sector criterion on a polyline. Exactly one of
/// `witness` / `violation` is set.
struct GeodesicVerdict {
  bool is_geodesic = false;
  std::optional<Sector> witness;
  /// Index j of the first consecutive pair (v_j, v_{j+1}) leaving the sector
  /// that holds the last vertex as seen from the first one.
  std::optional<std::size_t> violation;
};

/// A polyline is a geodesic iff a single sector holds the endpoint as seen
/// from the start and each vertex as seen from its predecessor.
GeodesicVerdict check_geodesic(const Polyline& path);
bool is_geodesic_polyline(const Polyline& path);

/// One iff all |q_i - p_i| coincide (including p == q). Dimensions above 3
/// follow the same rule as an extension; see is_derived_extension.
GeodesicCount tau(const PointN& p, const PointN& q);

/// True when results in this dimension rely on the extended rule rather
/// than on the planar/spatial cases proper.
inline bool is_derived_extension(std::size_t dimension) noexcept { return dimension >= 4; }

/// The segment plus a second geodesic through a displaced midpoint.
/// Throws DomainError when tau(p, q) is One.
std::pair<Polyline, Polyline> witness_two_geodesics(const PointN& p, const PointN& q);

/// The 2^n points center + radius * (+-1, ..., +-1), ordered by sign pattern
/// with + before - and the first axis varying slowest.
std::vector<PointN> unique_geodesic_points(const SphereSpec& sphere);

/// Number of sphere points joined to the center by a unique geodesic: 2^n.
std::uint64_t nu_ambient(std::size_t dimension);

}  // namespace linf
