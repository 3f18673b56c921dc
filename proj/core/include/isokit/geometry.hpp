#ifndef ISOKIT_GEOMETRY_HPP
#define ISOKIT_GEOMETRY_HPP

#include <array>
#include <cmath>

#include "isokit/tolerance.hpp"

namespace isokit {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }

// Twice the signed area of (a, b, c); positive when counter-clockwise.
inline double orient2d(Point a, Point b, Point c) { return cross(b - a, c - a); }

// Vertices are named A, B, C; vertex(0..2) indexes them in that order.
struct Triangle {
  Point A;
  Point B;
  Point C;

  const Point& vertex(int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  Point& vertex(int i) { return i == 0 ? A : (i == 1 ? B : C); }
  std::array<Point, 3> vertices() const { return {A, B, C}; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

enum class ShapeClass { Scalene, Isosceles, Equilateral };

// A triangle relabeled so that a = |BC| <= b = |CA| <= c = |AB|; angles are
// radians at A, B, C respectively.
struct CanonicalTriangle {
  Triangle tri;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double area = 0.0;
  ShapeClass shape_class = ShapeClass::Scalene;

  bool is_scalene() const { return shape_class == ShapeClass::Scalene; }

  friend bool operator==(const CanonicalTriangle&, const CanonicalTriangle&) = default;
};

double signed_area(const Triangle& t);

// Unsigned shoelace area. Zero for collinear vertices.
double area(const Triangle& t);

double perimeter(const Triangle& t);

// Squared diagonal of the axis-aligned bounding box; the scale used by the
// area-slack predicates.
double bbox_diagonal_sq(const Triangle& t);

// Interior angle at vertex i (0 = A), radians.
double interior_angle(const Triangle& t, int i);

bool is_finite(const Triangle& t);
bool is_degenerate(const Triangle& t, const Tolerances& tol = {});

// Throws GeometryError(NonFinite | DegenerateTriangle).
CanonicalTriangle canonicalize(const Triangle& t, const Tolerances& tol = {});

// Classifies three side lengths without building a triangle.
ShapeClass classify_sides(double a, double b, double c, const Tolerances& tol = {});

// Closed-set containment with area slack toward inclusion.
bool contains_point(const Triangle& t, Point p, const Tolerances& tol = {});
bool contains_triangle(const Triangle& outer, const Triangle& inner,
                       const Tolerances& tol = {});

// Support value h(theta) = max_v <v, (cos theta, sin theta)>. The whole
// triangle lies in {p : <p, n> <= h}.
double support_line(const Triangle& t, double normal_angle);

// Euclidean distance from p to the closed segment [s0, s1].
double distance_to_segment(Point p, Point s0, Point s1);

// Is the triangle isosceles within a relative side tolerance?
bool is_isosceles(const Triangle& t, double len_rel);

Triangle translated(const Triangle& t, Point offset);
Triangle scaled(const Triangle& t, double factor, Point center = {});
Triangle rotated(const Triangle& t, double angle, Point center = {});
Triangle reflected_x(const Triangle& t);

}  // namespace isokit

#endif  // ISOKIT_GEOMETRY_HPP
