#pragma once

#include "linf/metric.hpp"
#include "linf/plane.hpp"
#include "linf/sectors.hpp"

#include <array>
#include <string>
#include <vector>

namespace linf {

/// Isometry of the cube (x1, x2, x3) -> (w1, w2, w3) with
/// w_k = signs[k] * x_{perm[k]}; `perm` holds 1-based axis indices.
/// Example: perm {3, 2, 1}, signs {+, -, +} is (x, y, z) -> (z, -y, x).
class SignedPermutation {
 public:
  SignedPermutation(std::array<int, 3> perm, std::array<Sign, 3> signs);

  static SignedPermutation identity();

  const std::array<int, 3>& perm() const noexcept { return perm_; }
  const std::array<Sign, 3>& signs() const noexcept { return signs_; }

  PointN apply(const PointN& point) const;
  SignedPermutation inverse() const;

  /// (g * h)(x) = g(h(x))
  friend SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h);
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::array<int, 3> perm_;
  std::array<Sign, 3> signs_;
};

/// Readable form such as "(z,-y,x)".
std::string to_string(const SignedPermutation& g);

/// All 48 elements: permutations in lexicographic order, each with sign
/// patterns from (+,+,+) to (-,-,-); the identity comes first.
const std::vector<SignedPermutation>& group_elements();

/// Image g(P) of a plane through the origin. Since g is orthogonal the
/// image has normal g(n); e.g. (z,-y,x) sends ax+by+cz=0 to cx-by+az=0.
/// Throws DomainError when d != 0.
Plane act(const SignedPermutation& g, const Plane& plane);

struct PlaneOrbit {
  std::vector<Plane> members;                 ///< sorted, distinct
  std::vector<SignedPermutation> stabilizer;  ///< in group_elements() order
};

PlaneOrbit orbit(const Plane& plane);

/// Complete isometry invariant of a plane: either flat (isometric to
/// R^2_inf) or the similarity class of the triangle with sides |a|,|b|,|c|,
/// written as sorted sides scaled so the longest is 1.
struct CanonicalClass {
  enum class Kind { Flat, Triangle };
  Kind kind = Kind::Flat;
  std::array<Scalar, 3> sides{};  ///< zero for Flat

  static CanonicalClass flat() { return {}; }

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

std::string to_string(const CanonicalClass& cls);

CanonicalClass canonical_class(const Plane& plane);

bool isometric(const Plane& lhs, const Plane& rhs);

}  // namespace linf
