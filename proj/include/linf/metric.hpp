#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linf {

/// Exact rational. GMP keeps every value reduced with a positive denominator.
using Scalar = mpq_class;

/// Raised when points of different dimension meet in one operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input violates an operation's precondition
/// (coincident points, zero normal vector, non-positive radius, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "7", "-3", "1/2" or "-4/6" (reduced on the way in).
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Scalar& value);

Scalar abs(const Scalar& value);

/// A point of R^n, n >= 2.
class PointN {
 public:
  explicit PointN(std::vector<Scalar> coords);
  PointN(std::initializer_list<Scalar> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t axis) const { return coords_[axis]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  static PointN origin(std::size_t dimension);

  friend bool operator==(const PointN&, const PointN&) = default;
  /// Lexicographic on coordinates; only meaningful within one dimension.
  friend bool operator<(const PointN& lhs, const PointN& rhs);

 private:
  std::vector<Scalar> coords_;
};

PointN operator+(const PointN& lhs, const PointN& rhs);
PointN operator-(const PointN& lhs, const PointN& rhs);
PointN operator*(const Scalar& factor, const PointN& point);

std::string to_string(const PointN& point);

void require_same_dimension(const PointN& p, const PointN& q);

/// max_i |p_i - q_i|
Scalar chebyshev_distance(const PointN& p, const PointN& q);

/// Image of a piecewise-linear path, stored as its vertex sequence.
class Polyline {
 public:
  /// Throws DomainError for fewer than two vertices or a repeated
  /// consecutive vertex, DimensionError for mixed dimensions.
  explicit Polyline(std::vector<PointN> vertices);

  std::span<const PointN> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_.front().dimension(); }
  const PointN& front() const noexcept { return vertices_.front(); }
  const PointN& back() const noexcept { return vertices_.back(); }

  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  std::vector<PointN> vertices_;
};

/// Sum of the d-infinity lengths of the segments. A linear segment has
/// length equal to its endpoint distance, so this is the supremum over
/// all partitions.
Scalar polyline_length(const Polyline& path);

/// The straight segment from p to q. Throws DomainError when p == q.
Polyline segment(const PointN& p, const PointN& q);

}  // namespace linf
