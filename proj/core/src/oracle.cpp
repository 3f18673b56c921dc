#include "isokit/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "isokit/error.hpp"

namespace isokit::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Number of coarse local minima that get refined. Near-tied candidates sit in
// different basins; refining only the single best coarse node can settle in
// the wrong one by up to the coarse discretization error.
constexpr int kRefineSeeds = 8;
// Half-width, in fine steps, of each refinement window (factor 4 shrink, so
// the window spans +-2 coarse-level steps).
constexpr int kRefineHalfWidth = 8;
constexpr int kMaxRecenter = 16;

struct Line {
  Point n;   // unit outward normal
  double h;  // support value
};

double support(const std::array<Point, 3>& v, Point n) {
  return std::max({dot(v[0], n), dot(v[1], n), dot(v[2], n)});
}

Point intersect(const Line& l1, const Line& l2) {
  const double det = cross(l1.n, l2.n);
  return {(l1.h * l2.n.y - l2.h * l1.n.y) / det, (l1.n.x * l2.h - l2.n.x * l1.h) / det};
}

// Area of the triangle bounded by three lines: det(M)^2 / (2 |d12 d23 d31|)
// with M the 3x3 matrix of (n, h) rows and dij = cross(ni, nj).
double area_from_lines(const Line& l1, const Line& l2, const Line& l3) {
  const double d12 = cross(l1.n, l2.n);
  const double d23 = cross(l2.n, l3.n);
  const double d31 = cross(l3.n, l1.n);
  const double det = l1.h * d23 + l2.h * d31 + l3.h * d12;
  return det * det / (2.0 * std::abs(d12 * d23 * d31));
}

struct ShapeFrame {
  Point base;  // outward normal of the base
  Point leg1;  // outward normals of the legs
  Point leg2;
};

ShapeFrame frame(double cos_rot, double sin_rot, double cos_half, double sin_half) {
  // Leg normals sit at rotation +- (pi - apex) / 2; cos_half / sin_half are
  // the cosine and sine of that half-angle.
  return {{-cos_rot, -sin_rot},
          {cos_rot * cos_half - sin_rot * sin_half, sin_rot * cos_half + cos_rot * sin_half},
          {cos_rot * cos_half + sin_rot * sin_half, sin_rot * cos_half - cos_rot * sin_half}};
}

ShapeFrame frame(ShapeParams sp) {
  const double half = 0.5 * (kPi - sp.apex_angle);
  return frame(std::cos(sp.rotation), std::sin(sp.rotation), std::cos(half), std::sin(half));
}

void check_shape(ShapeParams sp) {
  if (!(sp.apex_angle > 0.0 && sp.apex_angle < kPi) || !std::isfinite(sp.rotation)) {
    throw GeometryError(ErrorCode::UnboundedShape,
                        "apex angle " + std::to_string(sp.apex_angle) +
                            " does not give three positively spanning normals");
  }
}

Point centroid(const Triangle& t) {
  return {(t.A.x + t.B.x + t.C.x) / 3.0, (t.A.y + t.B.y + t.C.y) / 3.0};
}

double area_for_frame(const std::array<Point, 3>& v, const ShapeFrame& f) {
  return area_from_lines({f.base, support(v, f.base)}, {f.leg1, support(v, f.leg1)},
                         {f.leg2, support(v, f.leg2)});
}

struct Candidate {
  double value = kInf;
  double apex = 0.0;
  double rotation = 0.0;
};

// Strict order used for every argmin: value, then rotation, then apex.
bool better(const Candidate& l, const Candidate& r) {
  if (l.value != r.value) return l.value < r.value;
  if (l.rotation != r.rotation) return l.rotation < r.rotation;
  return l.apex < r.apex;
}

double wrap_rotation(double r) {
  const double two_pi = 2.0 * kPi;
  r = std::fmod(r, two_pi);
  return r < 0.0 ? r + two_pi : r;
}

Candidate refine(const std::array<Point, 3>& v, Candidate seed, double apex_step,
                 double rot_step, int iters, double& final_step) {
  Candidate best = seed;
  for (int it = 0; it < iters; ++it) {
    apex_step /= 4.0;
    rot_step /= 4.0;
    for (int pass = 0; pass < kMaxRecenter; ++pass) {
      const Candidate center = best;
      int best_k = 0;
      int best_l = 0;
      for (int k = -kRefineHalfWidth; k <= kRefineHalfWidth; ++k) {
        const double apex = center.apex + k * apex_step;
        if (apex <= 0.0 || apex >= kPi) continue;
        const double half = 0.5 * (kPi - apex);
        const double ch = std::cos(half);
        const double sh = std::sin(half);
        for (int l = -kRefineHalfWidth; l <= kRefineHalfWidth; ++l) {
          const double rot = wrap_rotation(center.rotation + l * rot_step);
          const Candidate c{area_for_frame(v, frame(std::cos(rot), std::sin(rot), ch, sh)),
                            apex, rot};
          if (better(c, best)) {
            best = c;
            best_k = k;
            best_l = l;
          }
        }
      }
      const bool on_edge =
          std::abs(best_k) == kRefineHalfWidth || std::abs(best_l) == kRefineHalfWidth;
      if (!on_edge) break;
    }
  }
  final_step = std::max(apex_step, rot_step);
  return best;
}

}  // namespace

Triangle min_triangle_for_shape(const Triangle& t, ShapeParams sp) {
  check_shape(sp);
  const std::array<Point, 3> v = t.vertices();
  const ShapeFrame f = frame(sp);
  const Line base{f.base, support(v, f.base)};
  const Line leg1{f.leg1, support(v, f.leg1)};
  const Line leg2{f.leg2, support(v, f.leg2)};
  return {intersect(leg1, leg2), intersect(base, leg1), intersect(base, leg2)};
}

double min_area_for_shape(const Triangle& t, ShapeParams sp) {
  check_shape(sp);
  const Point c = centroid(t);
  const Triangle local = translated(t, Point{} - c);
  return area_for_frame(local.vertices(), frame(sp));
}

OracleResult brute_force_min_isosceles(const Triangle& t, double coarse_step, int refine_iters) {
  if (!(coarse_step > 0.0 && coarse_step <= 2.0 * kDegree * (1.0 + 1e-12))) {
    throw GeometryError(ErrorCode::InvalidArgument, "coarse_step must lie in (0, 2] degrees");
  }
  if (refine_iters < 0) {
    throw GeometryError(ErrorCode::InvalidArgument, "refine_iters must be non-negative");
  }
  const Point shift = centroid(t);
  const std::array<Point, 3> v = translated(t, Point{} - shift).vertices();

  const int n_apex = static_cast<int>(std::ceil(kPi / coarse_step - 1e-9));
  const int n_rot = static_cast<int>(std::ceil(2.0 * kPi / coarse_step - 1e-9));
  const double apex_step = kPi / n_apex;
  const double rot_step = 2.0 * kPi / n_rot;

  std::vector<double> cos_rot(n_rot);
  std::vector<double> sin_rot(n_rot);
  for (int i = 0; i < n_rot; ++i) {
    cos_rot[i] = std::cos(i * rot_step);
    sin_rot[i] = std::sin(i * rot_step);
  }

  // Apex rows 1 .. n_apex - 1; rows 0 and n_apex are the degenerate shapes.
  const int rows = n_apex - 1;
  std::vector<double> grid(static_cast<std::size_t>(rows) * n_rot);
  for (int j = 0; j < rows; ++j) {
    const double half = 0.5 * (kPi - (j + 1) * apex_step);
    const double ch = std::cos(half);
    const double sh = std::sin(half);
    for (int i = 0; i < n_rot; ++i) {
      grid[static_cast<std::size_t>(j) * n_rot + i] =
          area_for_frame(v, frame(cos_rot[i], sin_rot[i], ch, sh));
    }
  }

  auto at = [&](int j, int i) {
    if (j < 0 || j >= rows) return kInf;
    i = (i % n_rot + n_rot) % n_rot;
    return grid[static_cast<std::size_t>(j) * n_rot + i];
  };

  std::vector<Candidate> seeds;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < n_rot; ++i) {
      const double val = at(j, i);
      bool local_min = true;
      for (int dj = -1; dj <= 1 && local_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if ((dj != 0 || di != 0) && at(j + dj, i + di) < val) {
            local_min = false;
            break;
          }
        }
      }
      if (local_min) seeds.push_back({val, (j + 1) * apex_step, i * rot_step});
    }
  }
  std::sort(seeds.begin(), seeds.end(), better);
  if (seeds.size() > kRefineSeeds) seeds.resize(kRefineSeeds);

  OracleResult out;
  Candidate best = seeds.front();
  out.grid_resolution = std::max(apex_step, rot_step);
  if (refine_iters > 0) {
    for (const Candidate& seed : seeds) {
      double step = 0.0;
      const Candidate c = refine(v, seed, apex_step, rot_step, refine_iters, step);
      if (better(c, best)) best = c;
      out.grid_resolution = step;
    }
    out.refined = true;
  }

  out.params = {best.apex, best.rotation};
  out.witness = min_triangle_for_shape(t, out.params);
  out.min_area = area(out.witness);
  return out;
}

bool can_cover(const Triangle& mover, const Triangle& target, const Tolerances& tol) {
  auto ccw = [](Triangle t) {
    if (signed_area(t) < 0.0) std::swap(t.B, t.C);
    return t;
  };
  const Triangle m = ccw(mover);
  const Triangle g = ccw(target);
  const double scale = std::max(perimeter(m), perimeter(g));
  const double slack = tol.num_rel * scale;

  for (int i = 0; i < 3; ++i) {
    const Point mi = m.vertex(i);
    const Point ei = m.vertex((i + 1) % 3) - mi;
    const Point u = (1.0 / norm(ei)) * ei;
    const Point inward{-u.y, u.x};

    for (int e = 0; e < 3; ++e) {
      const Point p = g.vertex(e);
      const Point w = (1.0 / distance(g.vertex((e + 1) % 3), p)) * (g.vertex((e + 1) % 3) - p);

      for (const double mirror : {1.0, -1.0}) {
        // Target vertices placed on the mover's edge line at slide 0.
        std::array<Point, 3> placed{};
        for (int k = 0; k < 3; ++k) {
          const Point d = g.vertex(k) - p;
          placed[k] = mi + (mirror * dot(d, w)) * u + cross(w, d) * inward;
        }

        double lo = -kInf;
        double hi = kInf;
        bool feasible = true;
        for (int j = 0; j < 3 && feasible; ++j) {
          const Point mj = m.vertex(j);
          const Point ej = m.vertex((j + 1) % 3) - mj;
          const double len = norm(ej);
          const double rate = cross(ej, u) / len;
          for (int k = 0; k < 3; ++k) {
            // signed distance of placed[k] + s u to edge j, >= -slack
            const double dist0 = cross(ej, placed[k] - mj) / len;
            if (std::abs(rate) < 1e-12) {
              if (dist0 < -slack) {
                feasible = false;
                break;
              }
            } else if (rate > 0.0) {
              lo = std::max(lo, (-slack - dist0) / rate);
            } else {
              hi = std::min(hi, (-slack - dist0) / rate);
            }
          }
        }
        if (feasible && lo <= hi + slack) return true;
      }
    }
  }
  return false;
}

BoundaryChecks check_boundary_structure(const Triangle& container, const Triangle& input,
                                        double geom_tol) {
  const std::array<Point, 3> cv = container.vertices();
  const std::array<Point, 3> iv = input.vertices();
  double longest = 0.0;
  for (int i = 0; i < 3; ++i) longest = std::max(longest, distance(cv[i], cv[(i + 1) % 3]));
  const double dtol = geom_tol * longest;

  BoundaryChecks out;

  auto near_side = [&](Point p, int s) {
    return distance_to_segment(p, cv[s], cv[(s + 1) % 3]) <= dtol;
  };

  out.vertices_on_boundary = std::all_of(iv.begin(), iv.end(), [&](Point p) {
    return near_side(p, 0) || near_side(p, 1) || near_side(p, 2);
  });

  out.sides_touch = true;
  for (int s = 0; s < 3; ++s) {
    if (!(near_side(iv[0], s) || near_side(iv[1], s) || near_side(iv[2], s))) {
      out.sides_touch = false;
    }
  }

  // The arc around container vertex X runs between the midpoints of the two
  // sides incident to X.
  out.one_vertex_per_arc = true;
  for (int x = 0; x < 3; ++x) {
    const Point m1 = 0.5 * (cv[x] + cv[(x + 1) % 3]);
    const Point m2 = 0.5 * (cv[x] + cv[(x + 2) % 3]);
    int on_arc = 0;
    for (const Point& p : iv) {
      if (distance_to_segment(p, cv[x], m1) <= dtol || distance_to_segment(p, cv[x], m2) <= dtol) {
        ++on_arc;
      }
    }
    if (on_arc != 1) out.one_vertex_per_arc = false;
  }

  // match[k] = container vertex coinciding with input vertex k, or -1.
  std::array<int, 3> match{-1, -1, -1};
  for (int k = 0; k < 3; ++k) {
    for (int x = 0; x < 3; ++x) {
      if (distance(iv[k], cv[x]) <= dtol) match[k] = x;
    }
  }
  out.shared_vertex = std::any_of(match.begin(), match.end(), [](int x) { return x >= 0; });

  auto angle_matches = [&](int k) {
    const double ai = interior_angle(input, k);
    const double ac = interior_angle(container, match[k]);
    return std::abs(ai - ac) <= geom_tol * ai;
  };
  out.shares_side_and_angle = false;
  for (int k = 0; k < 3; ++k) {
    for (int l = k + 1; l < 3; ++l) {
      if (match[k] < 0 || match[l] < 0 || match[k] == match[l]) continue;
      if (angle_matches(k) || angle_matches(l)) out.shares_side_and_angle = true;
    }
  }
  return out;
}

VerificationReport verify_triangle(const CanonicalTriangle& ct, double coarse_step,
                                   int refine_iters, const Tolerances& tol) {
  if (!ct.is_scalene()) {
    throw GeometryError(ErrorCode::NotScalene, "verify_triangle needs a scalene triangle");
  }
  const MinimizerResult closed = minimum_isosceles_container(ct, tol);
  const OracleResult found = brute_force_min_isosceles(ct.tri, coarse_step, refine_iters);

  VerificationReport r;
  r.input = ct;
  r.closed_form_area = closed.min_area;
  r.oracle_area = found.min_area;
  r.relative_gap = (found.min_area - closed.min_area) / closed.min_area;
  r.checks = check_boundary_structure(found.witness, ct.tri);
  r.boundary_invariants_ok = r.checks.boundary_ok();
  r.shares_side_and_angle = r.checks.shares_side_and_angle;
  r.witness = found.witness;
  r.witness_params = found.params;
  return r;
}

}  // namespace isokit::oracle
