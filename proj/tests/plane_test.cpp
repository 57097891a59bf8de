#include "linf/isometry.hpp"
#include "linf/oracle.hpp"
#include "linf/plane.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace linf {
namespace {

using testing::Gen;

bool cyclic_equal(const std::vector<PointN>& got, const std::vector<PointN>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t shift = 0; shift < got.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < got.size() && ok; ++i)
      ok = got[(i + shift) % got.size()] == want[i];
    if (ok) return true;
  }
  return false;
}

TEST(Plane, CanonicalScale) {
  const Plane p(-2, -2, -3, -4);
  EXPECT_EQ(p, Plane(2, 2, 3, 4));
  EXPECT_EQ(p.a(), 2);
  EXPECT_EQ(Plane(Scalar(1, 2), Scalar(1, 3), 0, 1), Plane(3, 2, 0, 6));
  EXPECT_EQ(Plane(0, -4, 6, 2), Plane(0, 2, -3, -1));
  EXPECT_EQ(to_string(Plane(0, -4, 6, 2)), "(0,2,-3,-1)");
  EXPECT_THROW(Plane(0, 0, 0, 1), DomainError);
}

TEST(Plane, ContainsAndEvaluate) {
  const Plane p(1, 1, 1, 3);
  EXPECT_TRUE(p.contains(PointN{1, 1, 1}));
  EXPECT_FALSE(p.contains(PointN{0, 0, 0}));
  EXPECT_EQ(p.evaluate(PointN{0, 0, 0}), -3);
  EXPECT_THROW(p.contains(PointN{1, 1}), DimensionError);
}

TEST(TranslateToOrigin, Examples) {
  {
    const auto t = translate_to_origin(Plane(1, 1, 1, 3));
    EXPECT_EQ(t.plane, Plane(1, 1, 1, 0));
    EXPECT_EQ(t.translation, (PointN{0, 0, -3}));
    EXPECT_TRUE(t.plane.contains(PointN{1, 1, 1} + t.translation));
  }
  {
    const auto t = translate_to_origin(Plane(1, 1, 1, 0));
    EXPECT_EQ(t.plane, Plane(1, 1, 1, 0));
    EXPECT_EQ(t.translation, PointN::origin(3));
  }
  {
    const auto t = translate_to_origin(Plane(0, 0, 1, 5));
    EXPECT_EQ(t.plane, Plane(0, 0, 1, 0));
    EXPECT_EQ(t.translation, (PointN{0, 0, -5}));
  }
}

TEST(TranslateToOrigin, MovesEveryPlanePointOntoTheShiftedPlane) {
  Gen gen(71);
  for (int i = 0; i < 300; ++i) {
    const Plane base = gen.plane();
    const Plane p(base.a(), base.b(), base.c(), gen.integer(-9, 9));
    const auto t = translate_to_origin(p);
    EXPECT_TRUE(t.plane.passes_through_origin());
    int nonzero = 0;
    for (const auto& x : t.translation.coords()) nonzero += x != 0;
    EXPECT_LE(nonzero, 1);
    for (const auto& x : oracle::sample_plane_points(p, 5, static_cast<std::uint64_t>(i)))
      EXPECT_TRUE(t.plane.contains(x + t.translation));
  }
}

TEST(TriangleTest, Examples) {
  EXPECT_TRUE(triangle_test(Plane(1, 1, 1)));
  EXPECT_TRUE(triangle_test(Plane(2, 2, 3)));
  EXPECT_FALSE(triangle_test(Plane(1, 1, 2)));
  EXPECT_FALSE(triangle_test(Plane(0, 1, 1)));
  EXPECT_TRUE(triangle_test(Plane(-2, 2, 3, 11)));
}

TEST(CrossSection, RegularHexagon) {
  const auto s = cross_section(Plane(1, 1, 1), 1);
  EXPECT_EQ(s.shape, SectionShape::Hexagon);
  const std::vector<PointN> want{PointN{1, 0, -1}, PointN{0, 1, -1}, PointN{-1, 1, 0},
                                 PointN{-1, 0, 1}, PointN{0, -1, 1}, PointN{1, -1, 0}};
  EXPECT_EQ(s.vertices, want);
  EXPECT_EQ(section_edge_lengths(s), std::vector<Scalar>(6, Scalar(1)));
}

TEST(CrossSection, IrregularHexagon) {
  const auto s = cross_section(Plane(2, 2, 3), 1);
  const Scalar h(1, 2);
  const std::vector<PointN> want{PointN{1, h, -1},   PointN{h, 1, -1},   PointN{-1, 1, 0},
                                 PointN{-1, -h, 1},  PointN{-h, -1, 1},  PointN{1, -1, 0}};
  EXPECT_EQ(s.vertices, want);
  const Scalar t(3, 2);
  EXPECT_EQ(section_edge_lengths(s), (std::vector<Scalar>{h, t, t, h, t, t}));
}

TEST(CrossSection, DegenerateTetragon) {
  const auto s = cross_section(Plane(1, 1, 2), 1);
  EXPECT_EQ(s.shape, SectionShape::Tetragon);
  EXPECT_TRUE(cyclic_equal(
      s.vertices, {PointN{1, -1, 0}, PointN{1, 1, -1}, PointN{-1, 1, 0}, PointN{-1, -1, 1}}));
  EXPECT_EQ(section_edge_lengths(s), std::vector<Scalar>(4, Scalar(2)));
}

TEST(CrossSection, CoordinatePlanes) {
  const auto s = cross_section(Plane(0, 0, 1), 2);
  EXPECT_EQ(s.shape, SectionShape::Tetragon);
  EXPECT_TRUE(cyclic_equal(
      s.vertices, {PointN{2, 2, 0}, PointN{-2, 2, 0}, PointN{-2, -2, 0}, PointN{2, -2, 0}}));
  // Diagonal plane through four cube corners.
  const auto d = cross_section(Plane(1, -1, 0), 1);
  EXPECT_TRUE(cyclic_equal(
      d.vertices, {PointN{1, 1, 1}, PointN{-1, -1, 1}, PointN{-1, -1, -1}, PointN{1, 1, -1}}));
}

TEST(CrossSection, Errors) {
  EXPECT_THROW(cross_section(Plane(1, 1, 1, 1), 1), DomainError);
  EXPECT_THROW(cross_section(Plane(1, 1, 1), 0), DomainError);
  EXPECT_THROW(cross_section(Plane(1, 1, 1), -1), DomainError);
}

TEST(CrossSection, StructuralInvariantsOverSignedSweep) {
  for (const Plane& p : testing::signed_sweep(4)) {
    const auto s = cross_section(p, 1);
    const std::size_t n = s.vertices.size();
    ASSERT_TRUE(n == 4 || n == 6) << to_string(p);
    EXPECT_EQ(s.shape == SectionShape::Hexagon, n == 6);
    EXPECT_EQ(s.vertices.front(), *std::max_element(s.vertices.begin(), s.vertices.end()));
    for (std::size_t i = 0; i < n; ++i) {
      const PointN& v = s.vertices[i];
      const PointN& w = s.vertices[(i + 1) % n];
      EXPECT_TRUE(p.contains(v));
      EXPECT_EQ(chebyshev_distance(PointN::origin(3), v), 1);
      bool cofacial = false;
      for (std::size_t k = 0; k < 3; ++k)
        cofacial = cofacial || (abs(v[k]) == 1 && v[k] == w[k]);
      EXPECT_TRUE(cofacial) << to_string(p) << " edge " << i;
      // Counter-clockwise about the normal.
      const Scalar turn = (v[1] * w[2] - v[2] * w[1]) * p.a() +
                          (v[2] * w[0] - v[0] * w[2]) * p.b() + (v[0] * w[1] - v[1] * w[0]) * p.c();
      EXPECT_GT(turn, 0);
    }
  }
}

TEST(CrossSection, HexagonIffTriangleOverSignedSweep) {
  for (const Plane& p : testing::signed_sweep(10)) {
    const bool hex = cross_section(p, 1).shape == SectionShape::Hexagon;
    EXPECT_EQ(hex, testing::strict_triangle(abs(p.a()), abs(p.b()), abs(p.c()))) << to_string(p);
    EXPECT_EQ(hex, triangle_test(p));
  }
}

TEST(CrossSection, ScalesLinearly) {
  Gen gen(73);
  for (int i = 0; i < 200; ++i) {
    const Plane p = gen.plane();
    Scalar r = 0;
    while (r <= 0) r = gen.rational();
    const auto unit = cross_section(p, 1);
    const auto scaled = cross_section(p, r);
    ASSERT_EQ(unit.vertices.size(), scaled.vertices.size());
    for (std::size_t k = 0; k < unit.vertices.size(); ++k)
      EXPECT_EQ(scaled.vertices[k], r * unit.vertices[k]);
  }
}

TEST(CrossSection, TetragonEdgesAreTwiceTheRadius) {
  const Scalar r(5, 3);
  for (const Plane& p : testing::sorted_sweep(10)) {
    const auto s = cross_section(p, r);
    if (s.shape != SectionShape::Tetragon) continue;
    for (const auto& len : section_edge_lengths(s)) EXPECT_EQ(len, 2 * r) << to_string(p);
  }
}

TEST(CrossSection, MatchesLatticeOracle) {
  oracle::ProbeConfig cfg;
  cfg.grid_density = 60;
  for (const Plane& p : {Plane(1, 1, 1), Plane(2, 2, 3), Plane(1, 1, 2), Plane(1, 2, 3),
                         Plane(0, 0, 1), Plane(1, -1, 0), Plane(3, -5, 7)}) {
    const auto s = cross_section(p, 1);
    const auto cloud = oracle::brute_section(p, 1, cfg);
    const Scalar tol(1, cfg.grid_density);
    for (const auto& v : s.vertices) {
      const bool near = std::any_of(cloud.begin(), cloud.end(), [&](const PointN& c) {
        return chebyshev_distance(c, v) <= tol;
      });
      EXPECT_TRUE(near) << to_string(p) << " " << to_string(v);
    }
  }
}

TEST(FlatChart, ChecksConstruction) {
  const Plane xy(0, 0, 1);
  const FlatChart::Projection proj{{{1, 0, 0}, {0, 1, 0}}};
  const FlatChart::Embedding emb{{{1, 0}, {0, 1}, {0, 0}}};
  EXPECT_NO_THROW(FlatChart(xy, proj, emb));
  const FlatChart::Embedding off_plane{{{1, 0}, {0, 1}, {1, 0}}};
  EXPECT_THROW(FlatChart(xy, proj, off_plane), DomainError);
  const FlatChart::Embedding swapped{{{0, 1}, {1, 0}, {0, 0}}};
  EXPECT_THROW(FlatChart(xy, proj, swapped), DomainError);
}

TEST(FlatIsometry, Examples) {
  {
    const FlatChart c = flat_isometry_to_R2(Plane(0, 0, 1));
    EXPECT_EQ(c.project(PointN{3, -2, 0}), (PointN{3, -2}));
    EXPECT_EQ(dominant_axis(Plane(0, 0, 1)), 2u);
  }
  {
    const Plane p(1, 1, 2);
    const FlatChart c = flat_isometry_to_R2(p);
    const PointN u{1, -1, 0}, v{-1, 1, 0};
    EXPECT_EQ(c.project(u), (PointN{1, -1}));
    EXPECT_EQ(chebyshev_distance(u, v), 2);
    EXPECT_EQ(chebyshev_distance(c.project(u), c.project(v)), 2);
    EXPECT_EQ(c.embed(PointN{1, -1}), u);
  }
  {
    // Points (x, x, z): keeping y and z reads the same numbers as (x, z).
    const Plane p(1, -1, 0);
    const FlatChart c = flat_isometry_to_R2(p);
    EXPECT_EQ(c.project(PointN{4, 4, -1}), (PointN{4, -1}));
    EXPECT_TRUE(oracle::sample_isometry_check(c, p, 200, 5));
  }
  EXPECT_THROW(flat_isometry_to_R2(Plane(1, 1, 1)), DomainError);
  EXPECT_THROW(flat_isometry_to_R2(Plane(0, 0, 1, 2)), DomainError);
}

TEST(FlatIsometry, ExactOnEveryFlatPlaneOfTheSweep) {
  for (const Plane& p : testing::signed_sweep(5)) {
    if (triangle_test(p)) continue;
    const FlatChart c = flat_isometry_to_R2(p);
    EXPECT_TRUE(oracle::sample_isometry_check(c, p, 100, 17)) << to_string(p);
    for (const auto& x : oracle::sample_plane_points(p, 10, 3))
      EXPECT_EQ(c.embed(c.project(x)), x);
  }
}

TEST(NuInPlane, Examples) {
  EXPECT_EQ(nu_in_plane(Plane(1, 1, 1)), 6u);
  EXPECT_EQ(nu_in_plane(Plane(2, 2, 3)), 6u);
  EXPECT_EQ(nu_in_plane(Plane(1, 1, 2)), 4u);
  EXPECT_EQ(nu_in_plane(Plane(1, 1, 1, 9)), 6u);
}

TEST(NuInPlane, InvariantUnderCubeIsometriesAndMatchesFlatness) {
  for (const Plane& p : testing::sorted_sweep(6)) {
    const std::size_t nu = nu_in_plane(p);
    EXPECT_EQ(nu, triangle_test(p) ? 6u : 4u);
    for (const auto& g : group_elements()) EXPECT_EQ(nu_in_plane(act(g, p)), nu);
  }
}

TEST(NuInPlane, IndependentOfBasePointAndRadius) {
  // Count unique-geodesic directions among sphere points around a random
  // base point: every cloud point on the sphere boundary is tested.
  Gen gen(79);
  for (const Plane& p : {Plane(1, 1, 1), Plane(2, 2, 3), Plane(1, 1, 2), Plane(0, 1, 3)}) {
    const auto base = oracle::sample_plane_points(p, 1, 9).front();
    for (const Scalar r : {Scalar(1, 3), Scalar(2), Scalar(7, 2)}) {
      std::size_t unique = 0;
      for (const auto& v : cross_section(p, r).vertices)
        unique += tau_in_plane(p, base, base + v) == GeodesicCount::One;
      EXPECT_EQ(unique, nu_in_plane(p));
    }
  }
}

TEST(TauInPlane, Examples) {
  const PointN o = PointN::origin(3);
  EXPECT_EQ(tau_in_plane(Plane(1, 1, 1), o, PointN{2, 0, -2}), GeodesicCount::One);
  EXPECT_EQ(tau_in_plane(Plane(1, 1, 1), o, PointN{1, 1, -2}), GeodesicCount::Infinite);
  EXPECT_EQ(tau_in_plane(Plane(1, 1, 2), o, PointN{2, -2, 0}), GeodesicCount::One);
  EXPECT_THROW(tau_in_plane(Plane(1, 1, 1), o, PointN{1, 1, 1}), DomainError);
  EXPECT_THROW(tau_in_plane(Plane(1, 1, 1), o, o), DomainError);
}

TEST(TauInPlane, UniqueOnSectionExactlyAtVertices) {
  for (const Plane& p : testing::sorted_sweep(5)) {
    const auto s = cross_section(p, 1);
    const PointN o = PointN::origin(3);
    std::size_t unique = 0;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      const PointN& v = s.vertices[i];
      const PointN& w = s.vertices[(i + 1) % s.vertices.size()];
      unique += tau_in_plane(p, o, v) == GeodesicCount::One;
      for (const Scalar t : {Scalar(1, 3), Scalar(1, 2), Scalar(4, 5)})
        EXPECT_EQ(tau_in_plane(p, o, v + t * (w - v)), GeodesicCount::Infinite) << to_string(p);
    }
    EXPECT_EQ(unique, nu_in_plane(p));
  }
}

TEST(TauInPlane, FlatPlanesAgreeWithTheChart) {
  Gen gen(83);
  for (const Plane& p : {Plane(1, 1, 2), Plane(0, 1, 3), Plane(1, -1, 0), Plane(1, 2, 3)}) {
    const FlatChart c = flat_isometry_to_R2(p);
    const auto pts = oracle::sample_plane_points(p, 40, 13);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i] == pts[i + 1]) continue;
      EXPECT_EQ(tau_in_plane(p, pts[i], pts[i + 1]), tau(c.project(pts[i]), c.project(pts[i + 1])));
    }
    // And along a chart diagonal.
    const PointN a = c.embed(PointN{1, 2}), b = c.embed(PointN{4, -1});
    EXPECT_EQ(tau_in_plane(p, a, b), GeodesicCount::One);
  }
}

}  // namespace
}  // namespace linf
