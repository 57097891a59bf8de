#pragma once

#include "linf/metric.hpp"
#include "linf/sectors.hpp"

#include <array>
#include <string>
#include <vector>

namespace linf {

/// The plane a*x + b*y + c*z = d in R^3_inf.
///
/// Coefficients are kept in canonical scale: coprime integers with the
/// first nonzero entry of (a, b, c) positive, so every equation describing
/// the same point set yields the same representative.
class Plane {
 public:
  /// Throws DomainError when (a, b, c) = 0.
  Plane(Scalar a, Scalar b, Scalar c, Scalar d = 0);

  const Scalar& a() const noexcept { return normal_[0]; }
  const Scalar& b() const noexcept { return normal_[1]; }
  const Scalar& c() const noexcept { return normal_[2]; }
  const Scalar& d() const noexcept { return offset_; }
  const std::array<Scalar, 3>& normal() const noexcept { return normal_; }

  bool passes_through_origin() const { return offset_ == 0; }
  bool contains(const PointN& point) const;
  /// a*x + b*y + c*z - d
  Scalar evaluate(const PointN& point) const;

  friend bool operator==(const Plane&, const Plane&) = default;
  /// Orders by (a, b, c, d); used for deterministic orbit listings.
  friend bool operator<(const Plane& lhs, const Plane& rhs);

 private:
  std::array<Scalar, 3> normal_;
  Scalar offset_;
};

std::string to_string(const Plane& plane);

struct Translation {
  Plane plane;        ///< the translated plane, d = 0
  PointN translation; ///< x on the input plane maps to x + translation
};

/// Shifts the plane to the origin along the last axis whose coefficient is
/// nonzero, i.e. (x, y, z) -> (x, y, z - d/c) in the generic case.
Translation translate_to_origin(const Plane& plane);

/// |a|, |b|, |c| are the sides of a non-degenerate triangle.
/// Equivalently: the plane is not isometric to R^2_inf. d is ignored.
bool triangle_test(const Plane& plane);

enum class SectionShape { Tetragon, Hexagon };

std::string to_string(SectionShape shape);

/// Boundary of the radius-r disc about the origin inside a plane through
/// the origin, i.e. the plane's intersection with the surface of [-r, r]^3.
///
/// Vertices are distinct, run counter-clockwise about the plane's normal,
/// start at the lexicographically largest vertex, and consecutive vertices
/// share a cube face.
struct SectionPolygon {
  std::vector<PointN> vertices;
  SectionShape shape = SectionShape::Tetragon;
  Scalar radius;
};

/// Throws DomainError when the plane misses the origin or radius <= 0.
SectionPolygon cross_section(const Plane& plane, const Scalar& radius);

/// d-infinity length of each edge, starting with (v0, v1) and closing with
/// (v_last, v0).
std::vector<Scalar> section_edge_lengths(const SectionPolygon& polygon);

/// Linear isometry between a flat plane through the origin and R^2_inf.
///
/// `project` is the chart R^3 -> R^2 (its 2x3 matrix restricted to the
/// plane) and `embed` the parametrization R^2 -> plane. Construction checks
/// that embed lands in the plane and that project(embed(u)) = u.
/// Distance preservation is a property of the matrices chosen, not of the
/// type; flat_isometry_to_R2 produces charts that have it.
class FlatChart {
 public:
  using Projection = std::array<std::array<Scalar, 3>, 2>;
  using Embedding = std::array<std::array<Scalar, 2>, 3>;

  FlatChart(Plane plane, Projection projection, Embedding embedding);

  const Plane& plane() const noexcept { return plane_; }
  const Projection& projection() const noexcept { return projection_; }
  const Embedding& embedding() const noexcept { return embedding_; }

  PointN project(const PointN& point) const;
  PointN embed(const PointN& chart_point) const;

 private:
  Plane plane_;
  Projection projection_;
  Embedding embedding_;
};

/// Chart that forgets the axis with the largest |coefficient| (ties go to
/// the lowest index). On a flat plane that coordinate is dominated by the
/// other two, so the chart preserves d-infinity exactly.
/// Throws DomainError on a plane that passes triangle_test or misses the origin.
FlatChart flat_isometry_to_R2(const Plane& plane);

/// Index of the coordinate dropped by flat_isometry_to_R2 (0-based).
std::size_t dominant_axis(const Plane& plane);

/// Number of points on a sphere of the induced metric joined to its center
/// by a unique geodesic: 6 for hexagonal planes, 4 for flat ones.
std::size_t nu_in_plane(const Plane& plane);

/// Number of geodesics inside the plane between two of its points. Unique
/// exactly when q - p points at a vertex of the unit section.
/// Throws DomainError when p == q or either point is off the plane.
GeodesicCount tau_in_plane(const Plane& plane, const PointN& p, const PointN& q);

}  // namespace linf
