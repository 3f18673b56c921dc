#ifndef ISOKIT_SAMPLING_HPP
#define ISOKIT_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "isokit/geometry.hpp"

namespace isokit {

// Rejection sampler over the angle simplex: (alpha, beta, gamma) uniform on
// alpha + beta + gamma = pi, keeping triangles whose smallest angle is at
// least `min_angle` and whose angles differ pairwise by at least
// `scalene_margin` (both radians).
struct AngleSampler {
  double min_angle = 0.0;
  double scalene_margin = 0.0;

  // Angles in sampling order; not sorted.
  struct Angles {
    double alpha;
    double beta;
    double gamma;
  };

  Angles draw(std::mt19937_64& rng) const;
  Triangle draw_triangle(std::mt19937_64& rng) const;
};

AngleSampler default_verification_sampler();

// Uniform double in [0, 1) built from the top 53 bits; unlike
// std::uniform_real_distribution its output is identical across standard
// library implementations.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace isokit

#endif  // ISOKIT_SAMPLING_HPP
