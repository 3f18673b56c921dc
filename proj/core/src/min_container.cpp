#include "isokit/min_container.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isokit/error.hpp"

namespace isokit {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

MinimizerResult minimum_isosceles_container(const CanonicalTriangle& ct,
                                            const Tolerances& tol) {
  MinimizerResult r;
  if (!ct.is_scalene()) {
    r.self_container = true;
    r.min_area = ct.area;
    r.min_ratio = 1.0;
    r.count = 1;
    return r;
  }

  const auto first = first_kind(ct);
  const auto second = second_kind(ct);
  r.candidates = {first[0], first[1], second[0]};

  r.min_area = r.candidates.front().area;
  for (const auto& s : r.candidates) r.min_area = std::min(r.min_area, s.area);
  r.min_ratio = r.min_area / ct.area;
  for (const auto& s : r.candidates) {
    if (s.area <= r.min_area * (1.0 + tol.tie_rel)) r.minimizers.push_back(s);
  }
  r.count = static_cast<int>(r.minimizers.size());
  return r;
}

double alpha_star_equation(double alpha) {
  const double s3 = std::sin(3.0 * alpha);
  return std::sin(alpha) * std::sin(2.0 * alpha) - s3 * s3;
}

RootResult alpha_star(double tol) {
  if (!(tol > 0.0 && tol < 1e-3)) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "alpha_star tolerance must lie in (0, 1e-3), got " + std::to_string(tol));
  }
  double lo = 36.0 * kDeg;
  double hi = 45.0 * kDeg;
  double f_lo = alpha_star_equation(lo);
  const double f_hi = alpha_star_equation(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw GeometryError(ErrorCode::BracketFailure,
                        "alpha* equation does not change sign on [36, 45] degrees");
  }

  RootResult out;
  // |F'| is about 3.7 at the root, so a bracket of width tol alone does not
  // bound the residual by tol. Bisect until the midpoint is no longer
  // representable; the bracket is then far below any admissible tol.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = alpha_star_equation(mid);
    ++out.iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double f_l = std::abs(alpha_star_equation(lo));
  const double f_h = std::abs(alpha_star_equation(hi));
  out.value = f_l <= f_h ? lo : hi;
  out.residual = std::min(f_l, f_h);
  return out;
}

Triangle triangle_from_angles(double alpha, double beta, double scale) {
  const double gamma = std::numbers::pi - alpha - beta;
  if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0) || !(scale > 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "angles must be positive with alpha + beta < 180 degrees and scale > 0");
  }
  // |AC| by the law of sines.
  const double b = scale * std::sin(beta) / std::sin(gamma);
  return {{0.0, 0.0}, {scale, 0.0}, {b * std::cos(alpha), b * std::sin(alpha)}};
}

CanonicalTriangle t_star() {
  const double alpha = alpha_star().value;
  const double beta = std::numbers::pi - 3.0 * alpha;
  const double gamma = 2.0 * alpha;
  const double b = std::sin(beta);
  const double c = std::sin(gamma);
  const Triangle t{{0.0, 0.0}, {c, 0.0}, {b * std::cos(alpha), b * std::sin(alpha)}};
  return canonicalize(t);
}

double tie_residual(const CanonicalTriangle& ct) {
  if (!ct.is_scalene()) {
    throw GeometryError(ErrorCode::NotScalene, "tie_residual needs a scalene triangle");
  }
  return (ct.c - ct.b) * std::sin(ct.alpha + ct.beta) - ct.b * std::sin(ct.beta - ct.alpha);
}

ExtremalCurvePoint curve_point(double alpha, double beta) {
  ExtremalCurvePoint p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = std::numbers::pi - alpha - beta;
  p.ratio_f = std::sin(p.gamma) / std::sin(beta);
  p.ratio_g = 1.0 / (0.5 + std::tan(alpha) / (2.0 * std::tan(beta)));
  const double b = std::sin(beta);
  const double c = std::sin(p.gamma);
  p.tie_residual = (c - b) * std::sin(alpha + beta) - b * std::sin(beta - alpha);
  return p;
}

RatioCurves ratio_curves(double beta, int n_samples, double tol) {
  if (!(beta > 0.0 && beta < std::numbers::pi / 4.0)) {
    throw GeometryError(ErrorCode::InvalidRegime,
                        "ratio_curves needs 0 < beta < 45 degrees, got " +
                            std::to_string(beta / kDeg) + " degrees");
  }
  if (n_samples < 3) {
    throw GeometryError(ErrorCode::InvalidArgument, "ratio_curves needs n_samples >= 3");
  }

  RatioCurves out;
  out.samples.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    out.samples.push_back(curve_point(beta * (i + 0.5) / n_samples, beta));
  }

  auto diff = [beta](double alpha) {
    const ExtremalCurvePoint p = curve_point(alpha, beta);
    return p.ratio_f - p.ratio_g;
  };
  const double eps = 1e-6 * beta;
  double lo = eps;
  double hi = beta - eps;
  if (!(diff(lo) < 0.0 && diff(hi) > 0.0)) {
    throw GeometryError(ErrorCode::BracketFailure, "f - g does not change sign on (0, beta)");
  }
  const double width = tol * beta;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (diff(mid) < 0.0 ? lo : hi) = mid;
  }
  out.crossing = 0.5 * (lo + hi);
  out.at_crossing = curve_point(out.crossing, beta);
  const double f = out.at_crossing.ratio_f;
  out.crossing_identity_residual = std::abs(f * f - 2.0 * std::cos(out.crossing));
  return out;
}

double first_kind_ratio(double b, double c) {
  if (!(1.0 < b && b < c && c < b + 1.0)) {
    throw GeometryError(ErrorCode::InvalidSides,
                        "first_kind_ratio needs 1 < b < c < b + 1, got b = " + std::to_string(b) +
                            ", c = " + std::to_string(c));
  }
  return b * b <= c ? b : c / b;
}

Triangle triangle_from_sides(double a, double b, double c) {
  const bool positive = a > 0.0 && b > 0.0 && c > 0.0;
  const bool finite = std::isfinite(a) && std::isfinite(b) && std::isfinite(c);
  if (!positive || !finite || !(a < b + c && b < a + c && c < a + b)) {
    throw GeometryError(ErrorCode::InvalidSides,
                        "sides (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + ") violate the strict triangle inequality");
  }
  // C = (x, y) with |AC| = b, |BC| = a.
  const double x = (b * b + c * c - a * a) / (2.0 * c);
  const double y = std::sqrt(std::max(0.0, b * b - x * x));
  return {{0.0, 0.0}, {c, 0.0}, {x, y}};
}

std::vector<Sqrt2SweepRow> sqrt2_sweep(std::span<const double> betas, const Tolerances& tol) {
  std::vector<Sqrt2SweepRow> rows;
  rows.reserve(betas.size());
  for (double beta : betas) {
    const RatioCurves rc = ratio_curves(beta, 3);
    Sqrt2SweepRow row;
    row.beta = beta;
    row.crossing = rc.crossing;
    row.crossing_ratio = rc.at_crossing.ratio_f;
    const CanonicalTriangle ct = canonicalize(triangle_from_angles(rc.crossing, beta), tol);
    row.min_ratio = minimum_isosceles_container(ct, tol).min_ratio;
    rows.push_back(row);
  }
  return rows;
}

std::vector<GoldenSweepRow> golden_sweep(std::span<const double> bs, const Tolerances& tol) {
  std::vector<GoldenSweepRow> rows;
  rows.reserve(bs.size());
  for (double b : bs) {
    GoldenSweepRow row;
    row.b = b;
    row.c = b * b;
    row.first_kind_ratio = first_kind_ratio(b, row.c);
    const CanonicalTriangle ct = canonicalize(triangle_from_sides(1.0, b, row.c), tol);
    row.min_ratio = minimum_isosceles_container(ct, tol).min_ratio;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace isokit
