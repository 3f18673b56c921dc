#include "isokit/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "isokit/error.hpp"

namespace isokit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotScalene: return "NotScalene";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::InvalidRegime: return "InvalidRegime";
    case ErrorCode::InvalidSides: return "InvalidSides";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnboundedShape: return "UnboundedShape";
  }
  return "Unknown";
}

double signed_area(const Triangle& t) { return 0.5 * orient2d(t.A, t.B, t.C); }

double area(const Triangle& t) { return std::abs(signed_area(t)); }

double perimeter(const Triangle& t) {
  return distance(t.A, t.B) + distance(t.B, t.C) + distance(t.C, t.A);
}

double bbox_diagonal_sq(const Triangle& t) {
  const double xmin = std::min({t.A.x, t.B.x, t.C.x});
  const double xmax = std::max({t.A.x, t.B.x, t.C.x});
  const double ymin = std::min({t.A.y, t.B.y, t.C.y});
  const double ymax = std::max({t.A.y, t.B.y, t.C.y});
  const double dx = xmax - xmin;
  const double dy = ymax - ymin;
  return dx * dx + dy * dy;
}

double interior_angle(const Triangle& t, int i) {
  const Point p = t.vertex(i);
  const Point u = t.vertex((i + 1) % 3) - p;
  const Point v = t.vertex((i + 2) % 3) - p;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

bool is_finite(const Triangle& t) {
  for (const Point& p : t.vertices()) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  }
  return true;
}

bool is_degenerate(const Triangle& t, const Tolerances& tol) {
  return area(t) <= tol.area_rel * bbox_diagonal_sq(t);
}

ShapeClass classify_sides(double a, double b, double c, const Tolerances& tol) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  const double slack = tol.len_rel * s[2];
  const bool low_eq = s[1] - s[0] <= slack;
  const bool high_eq = s[2] - s[1] <= slack;
  if (s[2] - s[0] <= slack) return ShapeClass::Equilateral;
  if (low_eq || high_eq) return ShapeClass::Isosceles;
  return ShapeClass::Scalene;
}

namespace {

bool lex_less(Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }

}  // namespace

CanonicalTriangle canonicalize(const Triangle& t, const Tolerances& tol) {
  if (!is_finite(t)) {
    throw GeometryError(ErrorCode::NonFinite, "triangle has a non-finite coordinate");
  }
  if (is_degenerate(t, tol)) {
    throw GeometryError(ErrorCode::DegenerateTriangle,
                        "triangle area " + std::to_string(area(t)) +
                            " is below the degeneracy threshold");
  }

  struct Labeled {
    Point p;
    double opposite;
  };
  std::array<Labeled, 3> v{};
  for (int i = 0; i < 3; ++i) {
    v[i] = {t.vertex(i), distance(t.vertex((i + 1) % 3), t.vertex((i + 2) % 3))};
  }
  std::sort(v.begin(), v.end(), [](const Labeled& l, const Labeled& r) {
    if (l.opposite != r.opposite) return l.opposite < r.opposite;
    return lex_less(l.p, r.p);
  });
  // Sides equal within tolerance are ordered by vertex coordinates instead.
  const double slack = tol.len_rel * v[2].opposite;
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i + 1 < 3; ++i) {
      if (v[i + 1].opposite - v[i].opposite <= slack && lex_less(v[i + 1].p, v[i].p)) {
        std::swap(v[i], v[i + 1]);
      }
    }
  }

  CanonicalTriangle ct;
  ct.tri = {v[0].p, v[1].p, v[2].p};
  ct.a = distance(ct.tri.B, ct.tri.C);
  ct.b = distance(ct.tri.C, ct.tri.A);
  ct.c = distance(ct.tri.A, ct.tri.B);
  ct.alpha = interior_angle(ct.tri, 0);
  ct.beta = interior_angle(ct.tri, 1);
  ct.gamma = interior_angle(ct.tri, 2);
  ct.area = area(ct.tri);
  ct.shape_class = classify_sides(ct.a, ct.b, ct.c, tol);
  return ct;
}

bool contains_point(const Triangle& t, Point p, const Tolerances& tol) {
  const double slack = tol.area_rel * bbox_diagonal_sq(t);
  const double sign = signed_area(t) >= 0.0 ? 1.0 : -1.0;
  for (int i = 0; i < 3; ++i) {
    if (sign * orient2d(t.vertex(i), t.vertex((i + 1) % 3), p) < -slack) return false;
  }
  return true;
}

bool contains_triangle(const Triangle& outer, const Triangle& inner, const Tolerances& tol) {
  for (const Point& p : inner.vertices()) {
    if (!contains_point(outer, p, tol)) return false;
  }
  return true;
}

double support_line(const Triangle& t, double normal_angle) {
  const Point n{std::cos(normal_angle), std::sin(normal_angle)};
  return std::max({dot(t.A, n), dot(t.B, n), dot(t.C, n)});
}

double distance_to_segment(Point p, Point s0, Point s1) {
  const Point d = s1 - s0;
  const double len_sq = dot(d, d);
  if (len_sq == 0.0) return distance(p, s0);
  const double u = std::clamp(dot(p - s0, d) / len_sq, 0.0, 1.0);
  return distance(p, s0 + u * d);
}

bool is_isosceles(const Triangle& t, double len_rel) {
  const double ab = distance(t.A, t.B);
  const double bc = distance(t.B, t.C);
  const double ca = distance(t.C, t.A);
  const double slack = len_rel * std::max({ab, bc, ca});
  return std::abs(ab - bc) <= slack || std::abs(bc - ca) <= slack ||
         std::abs(ca - ab) <= slack;
}

Triangle translated(const Triangle& t, Point offset) {
  return {t.A + offset, t.B + offset, t.C + offset};
}

Triangle scaled(const Triangle& t, double factor, Point center) {
  auto f = [&](Point p) { return center + factor * (p - center); };
  return {f(t.A), f(t.B), f(t.C)};
}

Triangle rotated(const Triangle& t, double angle, Point center) {
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  auto f = [&](Point p) {
    const Point d = p - center;
    return center + Point{cs * d.x - sn * d.y, sn * d.x + cs * d.y};
  };
  return {f(t.A), f(t.B), f(t.C)};
}

Triangle reflected_x(const Triangle& t) {
  return {{t.A.x, -t.A.y}, {t.B.x, -t.B.y}, {t.C.x, -t.C.y}};
}

}  // namespace isokit
