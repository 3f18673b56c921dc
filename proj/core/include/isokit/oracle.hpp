#ifndef ISOKIT_ORACLE_HPP
#define ISOKIT_ORACLE_HPP

#include <numbers>

#include "isokit/geometry.hpp"
#include "isokit/min_container.hpp"
#include "isokit/tolerance.hpp"

// Brute-force machinery that does not use any of the closed-form results:
// a shape-space search for the minimal enclosing isosceles triangle and a
// rigid-motion covering test for triangles.
namespace isokit::oracle {

inline constexpr double kDegree = std::numbers::pi / 180.0;
inline constexpr double kDefaultCoarseStep = 0.5 * kDegree;
inline constexpr int kDefaultRefineIters = 8;

// An isosceles triangle up to translation and scale: the angle at its apex
// and the direction (from base midpoint to apex) of its symmetry axis.
struct ShapeParams {
  double apex_angle = std::numbers::pi / 3.0;
  double rotation = 0.0;

  friend bool operator==(const ShapeParams&, const ShapeParams&) = default;
};

// The container with the given shape bounded by the three supporting lines of
// t. The result is labeled A = apex, B and C = base vertices. Throws
// UnboundedShape when apex_angle is outside (0, pi).
Triangle min_triangle_for_shape(const Triangle& t, ShapeParams sp);

// Area of min_triangle_for_shape without building the vertices.
double min_area_for_shape(const Triangle& t, ShapeParams sp);

struct OracleResult {
  double min_area = 0.0;
  Triangle witness;  // apex first, see min_triangle_for_shape
  ShapeParams params;
  // Grid spacing of the last refinement pass, radians.
  double grid_resolution = 0.0;
  bool refined = false;
};

// Coarse (apex_angle x rotation) grid followed by shrinking-grid refinement
// (factor 4 per pass) around the most promising coarse local minima.
// Deterministic; ties break toward the lexicographically smaller
// (rotation, apex_angle). Throws InvalidArgument if coarse_step is not in
// (0, 2 deg] or refine_iters < 0.
OracleResult brute_force_min_isosceles(const Triangle& t,
                                       double coarse_step = kDefaultCoarseStep,
                                       int refine_iters = kDefaultRefineIters);

// Can some rigid motion (reflections allowed) of `mover` cover `target`?
// Enumerates the placements where a side of the target lies on a side line
// of the mover and solves the remaining one-parameter slide in closed form.
bool can_cover(const Triangle& mover, const Triangle& target, const Tolerances& tol = {});

inline constexpr double kGeomTolerance = 1e-5;

// Outcome of the structural checks on an enclosing isosceles triangle.
struct BoundaryChecks {
  bool vertices_on_boundary = false;  // every vertex of the input on the container
  bool sides_touch = false;           // every container side touches the input
  bool one_vertex_per_arc = false;    // midpoint-to-midpoint arcs: one vertex each
  bool shared_vertex = false;
  bool shares_side_and_angle = false;

  bool boundary_ok() const {
    return vertices_on_boundary && sides_touch && one_vertex_per_arc && shared_vertex;
  }

  friend bool operator==(const BoundaryChecks&, const BoundaryChecks&) = default;
};

// Any vertex labeling is accepted. Tolerances are relative to the
// longest container side (lengths) and to the compared angle (angles).
BoundaryChecks check_boundary_structure(const Triangle& container, const Triangle& input,
                                        double geom_tol = kGeomTolerance);

struct VerificationReport {
  CanonicalTriangle input;
  double closed_form_area = 0.0;
  double oracle_area = 0.0;
  // (oracle - closed form) / closed form
  double relative_gap = 0.0;
  bool boundary_invariants_ok = false;
  bool shares_side_and_angle = false;
  BoundaryChecks checks;
  Triangle witness;
  ShapeParams witness_params;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Runs the closed-form minimum and the brute-force oracle on a scalene
// triangle and cross-checks them. Throws NotScalene.
VerificationReport verify_triangle(const CanonicalTriangle& ct,
                                   double coarse_step = kDefaultCoarseStep,
                                   int refine_iters = kDefaultRefineIters,
                                   const Tolerances& tol = {});

}  // namespace isokit::oracle

#endif  // ISOKIT_ORACLE_HPP
