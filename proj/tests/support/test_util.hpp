#ifndef ISOKIT_TESTS_TEST_UTIL_HPP
#define ISOKIT_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "isokit/geometry.hpp"
#include "isokit/sampling.hpp"

namespace isokit::testing {

inline constexpr double kDeg = std::numbers::pi / 180.0;

inline double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

// Triangle with random vertices in a box, resampled until reasonably fat.
inline Triangle random_triangle(std::mt19937_64& rng, double box = 10.0) {
  while (true) {
    auto coord = [&] { return box * (2.0 * unit_uniform(rng) - 1.0); };
    const Triangle t{{coord(), coord()}, {coord(), coord()}, {coord(), coord()}};
    if (area(t) > 1e-3 * bbox_diagonal_sq(t)) return t;
  }
}

// Random rigid motion (rotation about the origin, then translation).
inline Triangle random_motion(const Triangle& t, std::mt19937_64& rng) {
  const double angle = 2.0 * std::numbers::pi * unit_uniform(rng);
  const Point shift{20.0 * unit_uniform(rng) - 10.0, 20.0 * unit_uniform(rng) - 10.0};
  return translated(rotated(t, angle), shift);
}

}  // namespace isokit::testing

#endif  // ISOKIT_TESTS_TEST_UTIL_HPP
