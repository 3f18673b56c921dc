#ifndef ISOKIT_MIN_CONTAINER_HPP
#define ISOKIT_MIN_CONTAINER_HPP

#include <array>
#include <span>
#include <vector>

#include "isokit/geometry.hpp"
#include "isokit/special_containers.hpp"
#include "isokit/tolerance.hpp"

namespace isokit {

// Minimum-area isosceles container of a triangle. Only AB'C, ABC' and AB1C
// can be minimal for a scalene triangle, so the search is closed form.
struct MinimizerResult {
  double min_area = 0.0;
  double min_ratio = 0.0;
  // Isosceles input is its own unique minimal container. In that case
  // `minimizers` and `candidates` are empty and count is 1.
  bool self_container = false;
  std::vector<SpecialContainer> minimizers;
  int count = 0;
  // AB'C, ABC', AB1C in that order (scalene input only).
  std::vector<SpecialContainer> candidates;

  friend bool operator==(const MinimizerResult&, const MinimizerResult&) = default;
};

MinimizerResult minimum_isosceles_container(const CanonicalTriangle& ct,
                                            const Tolerances& tol = {});

// F(alpha) = sin(alpha) sin(2 alpha) - sin^2(3 alpha). Its root in
// [36 deg, 45 deg] is the smallest angle of the triangle with three tied
// minimal containers.
double alpha_star_equation(double alpha);

struct RootResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;

  friend bool operator==(const RootResult&, const RootResult&) = default;
};

inline constexpr double kDefaultRootTol = 1e-12;

// Bisection on [36 deg, 45 deg] to bracket width <= tol (0 < tol < 1e-3).
// Throws InvalidArgument or BracketFailure.
RootResult alpha_star(double tol = kDefaultRootTol);

// Triangle with angles alpha*, 180 deg - 3 alpha*, 2 alpha*, circumdiameter 1
// (sides equal the sines of the opposite angles), base AB on the x-axis.
CanonicalTriangle t_star();

// Triangle from its angles at A and B, |AB| = scale, A at the origin and B
// on the positive x-axis. No canonicalization.
Triangle triangle_from_angles(double alpha, double beta, double scale = 1.0);

// (c - b) sin(alpha + beta) - b sin(beta - alpha); vanishes iff
// t(ABC') = t(AB1C). Throws NotScalene.
double tie_residual(const CanonicalTriangle& ct);

struct ExtremalCurvePoint {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  // t(ABC') / t(ABC) = c / b = sin(gamma) / sin(beta)
  double ratio_f = 0.0;
  // t(AB1C) / t(ABC) = 1 / (1/2 + tan(alpha) / (2 tan(beta)))
  double ratio_g = 0.0;
  double tie_residual = 0.0;
};

ExtremalCurvePoint curve_point(double alpha, double beta);

struct RatioCurves {
  std::vector<ExtremalCurvePoint> samples;
  // alpha where f = g, and that point on the curves.
  double crossing = 0.0;
  ExtremalCurvePoint at_crossing;
  // |f(z)^2 - 2 cos(z)|
  double crossing_identity_residual = 0.0;
};

// For fixed beta < 45 deg, samples f and g on alpha in (0, beta) and finds
// their unique crossing. Throws InvalidRegime, InvalidArgument, BracketFailure.
RatioCurves ratio_curves(double beta, int n_samples, double tol = kDefaultRootTol);

// Smallest first-kind ratio of the triangle with sides (1, b, c):
// b if b^2 <= c, else c / b. Requires 1 < b < c < b + 1 (InvalidSides).
double first_kind_ratio(double b, double c);

// Triangle with sides (a, b, c) = |BC|, |CA|, |AB|; A at the origin, B on
// the positive x-axis. Throws InvalidSides.
Triangle triangle_from_sides(double a, double b, double c);

struct Sqrt2SweepRow {
  double beta = 0.0;
  double crossing = 0.0;
  double crossing_ratio = 0.0;       // f(z) = g(z)
  double min_ratio = 0.0;            // closed-form minimum on that triangle

  friend bool operator==(const Sqrt2SweepRow&, const Sqrt2SweepRow&) = default;
};

// Walks beta toward 0 along the f = g crossing; the ratios approach sqrt(2).
std::vector<Sqrt2SweepRow> sqrt2_sweep(std::span<const double> betas,
                                       const Tolerances& tol = {});

struct GoldenSweepRow {
  double b = 0.0;
  double c = 0.0;                    // b^2
  double first_kind_ratio = 0.0;     // r(b, b^2)
  double min_ratio = 0.0;            // over all isosceles containers

  friend bool operator==(const GoldenSweepRow&, const GoldenSweepRow&) = default;
};

// Walks the parabola c = b^2 toward b = (1 + sqrt 5) / 2.
std::vector<GoldenSweepRow> golden_sweep(std::span<const double> bs,
                                         const Tolerances& tol = {});

}  // namespace isokit

#endif  // ISOKIT_MIN_CONTAINER_HPP
