#include "isokit/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "isokit/error.hpp"
#include "support/test_util.hpp"

namespace isokit {
namespace {

using testing::kDeg;

ErrorCode error_of(const Triangle& t) {
  try {
    canonicalize(t);
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected canonicalize to throw";
  return ErrorCode::InvalidArgument;
}

TEST(Canonicalize, RightTriangleLabels) {
  const CanonicalTriangle ct = canonicalize({{0, 0}, {4, 0}, {4, 3}});
  EXPECT_DOUBLE_EQ(ct.a, 3.0);
  EXPECT_DOUBLE_EQ(ct.b, 4.0);
  EXPECT_DOUBLE_EQ(ct.c, 5.0);
  // The shortest side joins (4,0) and (4,3), so A is the origin.
  EXPECT_EQ(ct.tri.A, (Point{0, 0}));
  EXPECT_EQ(ct.tri.B, (Point{4, 3}));
  EXPECT_EQ(ct.tri.C, (Point{4, 0}));
  EXPECT_NEAR(ct.gamma, std::numbers::pi / 2, 1e-15);
  EXPECT_DOUBLE_EQ(ct.area, 6.0);
  EXPECT_EQ(ct.shape_class, ShapeClass::Scalene);
}

TEST(Canonicalize, Equilateral) {
  const CanonicalTriangle ct = canonicalize({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  EXPECT_EQ(ct.shape_class, ShapeClass::Equilateral);
  EXPECT_NEAR(ct.a, 1.0, 1e-15);
  EXPECT_NEAR(ct.c, 1.0, 1e-15);
  EXPECT_NEAR(ct.alpha, std::numbers::pi / 3, 1e-12);
  EXPECT_NEAR(ct.beta, std::numbers::pi / 3, 1e-12);
  EXPECT_NEAR(ct.gamma, std::numbers::pi / 3, 1e-12);
}

TEST(Canonicalize, IsoscelesRightTriangle) {
  const CanonicalTriangle ct = canonicalize({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(ct.shape_class, ShapeClass::Isosceles);
}

TEST(Canonicalize, Errors) {
  EXPECT_EQ(error_of({{0, 0}, {1, 0}, {2, 0}}), ErrorCode::DegenerateTriangle);
  EXPECT_EQ(error_of({{0, 0}, {1, 0}, {0, std::numeric_limits<double>::quiet_NaN()}}),
            ErrorCode::NonFinite);
  EXPECT_EQ(error_of({{0, 0}, {std::numeric_limits<double>::infinity(), 0}, {0, 1}}),
            ErrorCode::NonFinite);
}

TEST(Canonicalize, InvariantsOnRandomTriangles) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const CanonicalTriangle ct = canonicalize(t);
    EXPECT_LE(ct.a, ct.b);
    EXPECT_LE(ct.b, ct.c);
    EXPECT_LE(ct.alpha, ct.beta + 1e-12);
    EXPECT_LE(ct.beta, ct.gamma + 1e-12);
    EXPECT_NEAR(ct.alpha + ct.beta + ct.gamma, std::numbers::pi, 1e-9);
    const double k = ct.a / std::sin(ct.alpha);
    EXPECT_LT(testing::rel_diff(k, ct.b / std::sin(ct.beta)), 1e-9);
    EXPECT_LT(testing::rel_diff(k, ct.c / std::sin(ct.gamma)), 1e-9);

    // Relabeling is a permutation of the input vertices.
    for (const Point& p : ct.tri.vertices()) {
      EXPECT_TRUE(p == t.A || p == t.B || p == t.C);
    }

    // Idempotence.
    const CanonicalTriangle again = canonicalize(ct.tri);
    EXPECT_EQ(again.tri, ct.tri);
    EXPECT_EQ(again.a, ct.a);
    EXPECT_EQ(again.alpha, ct.alpha);
    EXPECT_EQ(again.shape_class, ct.shape_class);
  }
}

TEST(Canonicalize, TieBreakIsDeterministicUnderVertexOrder) {
  // Isosceles with apex (0, 2): the two equal legs tie.
  const Triangle t{{-1, 0}, {1, 0}, {0, 2}};
  const CanonicalTriangle c1 = canonicalize(t);
  const CanonicalTriangle c2 = canonicalize({t.C, t.A, t.B});
  const CanonicalTriangle c3 = canonicalize({t.B, t.C, t.A});
  EXPECT_EQ(c1.tri, c2.tri);
  EXPECT_EQ(c1.tri, c3.tri);
  EXPECT_EQ(c1.shape_class, ShapeClass::Isosceles);
}

TEST(Area, Examples) {
  EXPECT_DOUBLE_EQ(area({{0, 0}, {4, 0}, {4, 3}}), 6.0);
  EXPECT_DOUBLE_EQ(area({{0, 0}, {1, 0}, {0, 1}}), 0.5);
  EXPECT_DOUBLE_EQ(area({{0, 0}, {2, 0}, {1, 0}}), 0.0);
}

TEST(Area, RigidMotionInvariance) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const Triangle m = testing::random_motion(t, rng);
    EXPECT_LE(std::abs(area(m) - area(t)), 1e-9 * area(t));
  }
}

TEST(ContainsPoint, Examples) {
  const Triangle t{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_TRUE(contains_point(t, {0.25, 0.25}));
  EXPECT_TRUE(contains_point(t, {0.5, 0.5}));
  EXPECT_FALSE(contains_point(t, {1, 1}));
  EXPECT_TRUE(contains_point(t, {0, 0}));
  // Orientation of the container does not matter.
  EXPECT_TRUE(contains_point({{0, 0}, {0, 1}, {1, 0}}, {0.25, 0.25}));
  EXPECT_FALSE(contains_point(t, {-1e-6, 0.5}));
}

TEST(ContainsTriangle, Examples) {
  EXPECT_TRUE(contains_triangle({{0, 0}, {10, 0}, {0, 10}}, {{1, 1}, {2, 1}, {1, 2}}));
  const Triangle t{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_TRUE(contains_triangle(t, t));
  EXPECT_FALSE(contains_triangle(t, {{0, 0}, {2, 0}, {0, 2}}));
}

TEST(ContainsTriangle, MutualContainmentImpliesEqualArea) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Triangle x = testing::random_triangle(rng);
    const Triangle y = testing::random_motion(x, rng);
    if (contains_triangle(x, y) && contains_triangle(y, x)) {
      EXPECT_NEAR(area(x), area(y), 1e-9 * area(x));
    }
    const Triangle relabeled{x.B, x.C, x.A};
    ASSERT_TRUE(contains_triangle(x, relabeled));
    ASSERT_TRUE(contains_triangle(relabeled, x));
    EXPECT_NEAR(area(x), area(relabeled), 1e-9 * area(x));
  }
}

TEST(SupportLine, Examples) {
  const Triangle t{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_NEAR(support_line(t, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(support_line(t, std::numbers::pi / 2), 1.0, 1e-15);
  EXPECT_NEAR(support_line(t, std::numbers::pi), 0.0, 1e-15);
}

TEST(SupportLine, BoundsEveryVertexAndIsAttained) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = testing::random_triangle(rng);
    const double theta = 2.0 * std::numbers::pi * unit_uniform(rng);
    const double h = support_line(t, theta);
    const Point n{std::cos(theta), std::sin(theta)};
    double best = -1e300;
    for (const Point& v : t.vertices()) {
      EXPECT_LE(dot(v, n), h + 1e-9 * (1.0 + std::abs(h)));
      best = std::max(best, dot(v, n));
    }
    EXPECT_EQ(best, h);
  }
}

TEST(Geometry, DistanceToSegment) {
  EXPECT_DOUBLE_EQ(distance_to_segment({0, 1}, {-1, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_segment({3, 4}, {0, 0}, {0, 0}), 5.0);
  EXPECT_DOUBLE_EQ(distance_to_segment({2, 0}, {-1, 0}, {1, 0}), 1.0);
}

TEST(Geometry, InteriorAngles) {
  const Triangle t{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_NEAR(interior_angle(t, 0), 90 * kDeg, 1e-15);
  EXPECT_NEAR(interior_angle(t, 1), 45 * kDeg, 1e-15);
  EXPECT_NEAR(interior_angle(t, 2), 45 * kDeg, 1e-15);
}

}  // namespace
}  // namespace isokit
