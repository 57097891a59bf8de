#include "linf/isometry.hpp"

#include <algorithm>

namespace linf {

namespace {

Sign times(Sign lhs, Sign rhs) { return lhs == rhs ? Sign::Plus : Sign::Minus; }

std::vector<SignedPermutation> enumerate_group() {
  std::vector<SignedPermutation> out;
  std::array<int, 3> perm{1, 2, 3};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      std::array<Sign, 3> signs{};
      for (int k = 0; k < 3; ++k) signs[k] = (mask >> (2 - k)) & 1 ? Sign::Minus : Sign::Plus;
      out.emplace_back(perm, signs);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

SignedPermutation::SignedPermutation(std::array<int, 3> perm, std::array<Sign, 3> signs)
    : perm_(perm), signs_(signs) {
  std::array<int, 3> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3})
    throw DomainError("perm must be a permutation of {1, 2, 3}");
}

SignedPermutation SignedPermutation::identity() {
  return {{1, 2, 3}, {Sign::Plus, Sign::Plus, Sign::Plus}};
}

PointN SignedPermutation::apply(const PointN& point) const {
  if (point.dimension() != 3) throw DimensionError("cube isometries act on dimension 3");
  std::vector<Scalar> out(3);
  for (std::size_t k = 0; k < 3; ++k) out[k] = sign_value(signs_[k]) * point[perm_[k] - 1];
  return PointN(std::move(out));
}

SignedPermutation SignedPermutation::inverse() const {
  // w_k = s_k x_{p_k}  =>  x_{p_k} = s_k w_k
  std::array<int, 3> perm{};
  std::array<Sign, 3> signs{};
  for (int k = 0; k < 3; ++k) {
    perm[perm_[k] - 1] = k + 1;
    signs[perm_[k] - 1] = signs_[k];
  }
  return {perm, signs};
}

SignedPermutation operator*(const SignedPermutation& g, const SignedPermutation& h) {
  // g(h(x))_k = g.s_k * h(x)_{g.p_k} = g.s_k * h.s_{g.p_k} * x_{h.p_{g.p_k}}
  std::array<int, 3> perm{};
  std::array<Sign, 3> signs{};
  for (int k = 0; k < 3; ++k) {
    const int mid = g.perm_[k] - 1;
    perm[k] = h.perm_[mid];
    signs[k] = times(g.signs_[k], h.signs_[mid]);
  }
  return {perm, signs};
}

std::string to_string(const SignedPermutation& g) {
  static constexpr char names[] = {'x', 'y', 'z'};
  std::string out = "(";
  for (std::size_t k = 0; k < 3; ++k) {
    if (k != 0) out += ',';
    if (g.signs()[k] == Sign::Minus) out += '-';
    out += names[g.perm()[k] - 1];
  }
  return out + ")";
}

const std::vector<SignedPermutation>& group_elements() {
  static const std::vector<SignedPermutation> elements = enumerate_group();
  return elements;
}

Plane act(const SignedPermutation& g, const Plane& plane) {
  if (!plane.passes_through_origin())
    throw DomainError("the cube group acts on planes through the origin; got " + to_string(plane));
  const PointN image = g.apply(PointN{plane.a(), plane.b(), plane.c()});
  return Plane(image[0], image[1], image[2], 0);
}

PlaneOrbit orbit(const Plane& plane) {
  PlaneOrbit out;
  for (const auto& g : group_elements()) {
    Plane image = act(g, plane);
    if (image == plane) out.stabilizer.push_back(g);
    if (std::find(out.members.begin(), out.members.end(), image) == out.members.end())
      out.members.push_back(std::move(image));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::string to_string(const CanonicalClass& cls) {
  if (cls.kind == CanonicalClass::Kind::Flat) return "flat";
  return "triangle[" + to_string(cls.sides[0]) + "," + to_string(cls.sides[1]) + "," +
         to_string(cls.sides[2]) + "]";
}

CanonicalClass canonical_class(const Plane& plane) {
  if (!triangle_test(plane)) return CanonicalClass::flat();
  std::array<Scalar, 3> sides{abs(plane.a()), abs(plane.b()), abs(plane.c())};
  std::sort(sides.begin(), sides.end());
  const Scalar longest = sides[2];
  for (auto& s : sides) s /= longest;
  return {CanonicalClass::Kind::Triangle, sides};
}

bool isometric(const Plane& lhs, const Plane& rhs) {
  return canonical_class(lhs) == canonical_class(rhs);
}

}  // namespace linf
