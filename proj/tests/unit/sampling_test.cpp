#include "isokit/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "isokit/error.hpp"
#include "support/test_util.hpp"

namespace isokit {
namespace {

using testing::kDeg;

TEST(AngleSampler, RespectsMargins) {
  const AngleSampler s = default_verification_sampler();
  std::mt19937_64 rng(42);
  for (int i = 0; i < 5000; ++i) {
    const auto a = s.draw(rng);
    EXPECT_NEAR(a.alpha + a.beta + a.gamma, std::numbers::pi, 1e-12);
    EXPECT_GE(std::min({a.alpha, a.beta, a.gamma}), 5 * kDeg);
    EXPECT_GE(std::abs(a.alpha - a.beta), 1 * kDeg);
    EXPECT_GE(std::abs(a.beta - a.gamma), 1 * kDeg);
    EXPECT_GE(std::abs(a.alpha - a.gamma), 1 * kDeg);
  }
}

TEST(AngleSampler, TrianglesAreScaleneWithRequestedAngles) {
  const AngleSampler s = default_verification_sampler();
  std::mt19937_64 r1(7);
  std::mt19937_64 r2(7);
  for (int i = 0; i < 1000; ++i) {
    const auto a = s.draw(r1);
    const CanonicalTriangle ct = canonicalize(s.draw_triangle(r2));
    EXPECT_TRUE(ct.is_scalene());
    EXPECT_NEAR(ct.alpha, std::min({a.alpha, a.beta, a.gamma}), 1e-9);
    EXPECT_NEAR(ct.gamma, std::max({a.alpha, a.beta, a.gamma}), 1e-9);
  }
}

TEST(AngleSampler, SeedDeterminesSequence) {
  const AngleSampler s = default_verification_sampler();
  std::mt19937_64 r1(123);
  std::mt19937_64 r2(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(s.draw_triangle(r1), s.draw_triangle(r2));
}

TEST(AngleSampler, RejectsEmptySampleSpace) {
  const AngleSampler s{50 * kDeg, 10 * kDeg};
  std::mt19937_64 rng(1);
  EXPECT_THROW(s.draw(rng), GeometryError);
}

TEST(UnitUniform, Range) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = unit_uniform(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace isokit
