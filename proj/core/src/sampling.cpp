#include "isokit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "isokit/error.hpp"
#include "isokit/min_container.hpp"

namespace isokit {

AngleSampler::Angles AngleSampler::draw(std::mt19937_64& rng) const {
  constexpr double kPi = std::numbers::pi;
  if (3.0 * min_angle + 3.0 * scalene_margin >= kPi) {
    throw GeometryError(ErrorCode::InvalidArgument, "angle margins leave an empty sample space");
  }
  while (true) {
    double u = unit_uniform(rng);
    double v = unit_uniform(rng);
    if (u > v) std::swap(u, v);
    const Angles a{kPi * u, kPi * (v - u), kPi * (1.0 - v)};
    if (std::min({a.alpha, a.beta, a.gamma}) < min_angle) continue;
    if (std::abs(a.alpha - a.beta) < scalene_margin || std::abs(a.beta - a.gamma) < scalene_margin ||
        std::abs(a.gamma - a.alpha) < scalene_margin) {
      continue;
    }
    return a;
  }
}

Triangle AngleSampler::draw_triangle(std::mt19937_64& rng) const {
  const Angles a = draw(rng);
  return triangle_from_angles(a.alpha, a.beta);
}

AngleSampler default_verification_sampler() {
  constexpr double kDeg = std::numbers::pi / 180.0;
  return {5.0 * kDeg, 1.0 * kDeg};
}

}  // namespace isokit
