#pragma once

// Seeded generators and a sweep of integer planes shared by the test suites.

#include "linf/metric.hpp"
#include "linf/plane.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace linf::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// num / den in lowest terms (mpq_class(num, den) alone is not).
  static Scalar ratio(int num, int den) {
    Scalar x(num, den);
    x.canonicalize();
    return x;
  }

  Scalar rational(int max_num = 12, int max_den = 6) {
    return ratio(integer(-max_num, max_num), integer(1, max_den));
  }

  PointN point(std::size_t dim, int max_num = 12, int max_den = 6) {
    std::vector<Scalar> c(dim);
    for (auto& x : c) x = rational(max_num, max_den);
    return PointN(std::move(c));
  }

  PointN integer_point(std::size_t dim, int lo, int hi) {
    std::vector<Scalar> c(dim);
    for (auto& x : c) x = integer(lo, hi);
    return PointN(std::move(c));
  }

  /// p + t * (+-1, ..., +-1) for a random nonzero t.
  PointN diagonal_partner(const PointN& p, int max_t = 6) {
    int t = 0;
    while (t == 0) t = integer(-max_t, max_t);
    std::vector<Scalar> c(p.coords().begin(), p.coords().end());
    for (auto& x : c) x += integer(0, 1) ? t : -t;
    return PointN(std::move(c));
  }

  Plane plane(int max_coeff = 6) {
    while (true) {
      const int a = integer(-max_coeff, max_coeff), b = integer(-max_coeff, max_coeff),
                c = integer(-max_coeff, max_coeff);
      if (a != 0 || b != 0 || c != 0) return Plane(a, b, c, 0);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Planes ax+by+cz=0 with integers 0 <= a <= b <= c <= max, (a,b,c) != 0.
inline std::vector<Plane> sorted_sweep(int max = 10) {
  std::vector<Plane> out;
  for (int c = 1; c <= max; ++c)
    for (int b = 0; b <= c; ++b)
      for (int a = 0; a <= b; ++a) out.emplace_back(a, b, c, 0);
  return out;
}

/// Every integer plane with |a|, |b|, |c| <= max through the origin,
/// one representative per point set.
inline std::vector<Plane> signed_sweep(int max) {
  std::vector<Plane> out;
  for (int a = -max; a <= max; ++a)
    for (int b = -max; b <= max; ++b)
      for (int c = -max; c <= max; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Plane p(a, b, c, 0);
        if (p.a() == a && p.b() == b && p.c() == c) out.push_back(p);  // canonical already
      }
  return out;
}

/// Non-degenerate triangle on three nonnegative numbers, written out
/// independently of triangle_test.
inline bool strict_triangle(const Scalar& x, const Scalar& y, const Scalar& z) {
  return x > 0 && y > 0 && z > 0 && x < y + z && y < x + z && z < x + y;
}

}  // namespace linf::testing
