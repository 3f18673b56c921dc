// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed here and never tuned at runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "isokit/geometry.hpp"
#include "isokit/min_container.hpp"
#include "isokit/oracle.hpp"
#include "isokit/sampling.hpp"
#include "isokit/special_containers.hpp"

namespace {

using namespace isokit;
using Clock = std::chrono::steady_clock;

constexpr double kDeg = std::numbers::pi / 180.0;
const double kSqrt2 = std::numbers::sqrt2;
const double kPhi = std::numbers::phi;

constexpr std::uint64_t kSeed = 42;
constexpr int kBatch = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string fmt(const char* format, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

template <class F>
double median_seconds(F&& f, int reps) {
  std::vector<double> t;
  t.reserve(reps);
  for (int i = 0; i < reps; ++i) {
    const auto start = Clock::now();
    f();
    t.push_back(std::chrono::duration<double>(Clock::now() - start).count());
  }
  std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
  return t[reps / 2];
}

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

std::vector<CanonicalTriangle> seeded_batch() {
  std::mt19937_64 rng(kSeed);
  const AngleSampler sampler = default_verification_sampler();
  std::vector<CanonicalTriangle> out;
  out.reserve(kBatch);
  for (int i = 0; i < kBatch; ++i) out.push_back(canonicalize(sampler.draw_triangle(rng)));
  return out;
}

Outcome alpha_star_regression() {
  Outcome o;
  volatile double sink = 0.0;
  const double secs = median_seconds([&] { sink = alpha_star(1e-12).value; }, 101);
  const RootResult r = alpha_star(1e-12);
  const double deg = r.value / kDeg;
  o.require(std::abs(deg - 41.831452) <= 1e-4,
            fmt("alpha* = %.10f deg", deg) + fmt(" (|delta| = %.3e deg, tol 1e-4)",
                                                 std::abs(deg - 41.831452)));
  o.require(r.residual < 1e-12, fmt("residual %.3e < 1e-12", r.residual));
  o.require(secs < 1e-3, fmt("runtime %.3e s < 1 ms", secs));
  return o;
}

Outcome t_star_triple_tie() {
  Outcome o;
  MinimizerResult r;
  CanonicalTriangle ts;
  const double secs = median_seconds(
      [&] {
        ts = t_star();
        r = minimum_isosceles_container(ts);
      },
      101);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) worst = std::max(worst, rel(r.candidates[i].area, r.candidates[j].area));
  }
  o.require(worst <= 1e-9, fmt("pairwise candidate spread %.3e <= 1e-9", worst));
  o.require(r.count == 3, "count = " + std::to_string(r.count));
  const double g = rel(ts.b * ts.b, ts.a * ts.c);
  o.require(g <= 1e-9, fmt("|b^2 - ac| rel %.3e <= 1e-9", g));
  o.require(secs < 1e-3, fmt("runtime %.3e s < 1 ms", secs));
  return o;
}

struct BatchResults {
  std::vector<oracle::VerificationReport> reports;
  double seconds = 0.0;
};

Outcome oracle_equivalence(const BatchResults& b) {
  Outcome o;
  double worst = 0.0;
  int pass = 0;
  for (const auto& r : b.reports) {
    const double gap = std::abs(r.relative_gap);
    worst = std::max(worst, gap);
    if (gap <= 1e-3) ++pass;
  }
  o.require(pass == kBatch, std::to_string(pass) + "/" + std::to_string(kBatch) + " within 1e-3");
  o.require(true, fmt("max |gap| %.3e", worst));
  o.require(b.seconds < 60.0, fmt("runtime %.2f s < 60 s single-threaded", b.seconds));
  return o;
}

Outcome characterization_invariants(const BatchResults& b) {
  Outcome o;
  int on_boundary = 0, touch = 0, arcs = 0, shared = 0, side_angle = 0;
  for (const auto& r : b.reports) {
    on_boundary += r.checks.vertices_on_boundary;
    touch += r.checks.sides_touch;
    arcs += r.checks.one_vertex_per_arc;
    shared += r.checks.shared_vertex;
    side_angle += r.checks.shares_side_and_angle;
  }
  auto line = [&](const char* what, int n) {
    o.require(n == kBatch, std::string(what) + " " + std::to_string(n) + "/" + std::to_string(kBatch));
  };
  line("vertices on boundary", on_boundary);
  line("sides touch", touch);
  line("one vertex per arc", arcs);
  line("shared vertex", shared);
  line("shared side + angle", side_angle);
  return o;
}

Outcome sqrt2_supremum(const std::vector<CanonicalTriangle>& batch) {
  Outcome o;
  double worst = 0.0;
  int below = 0, total = 0;
  auto record = [&](const CanonicalTriangle& ct) {
    const double m = minimum_isosceles_container(ct).min_ratio;
    worst = std::max(worst, m);
    ++total;
    if (m < kSqrt2 - 1e-9) ++below;
  };
  for (const auto& ct : batch) record(ct);
  // Dense sample with thin margins reaches far into the obtuse corner.
  std::mt19937_64 rng(kSeed + 1);
  const AngleSampler dense{0.05 * kDeg, 0.01 * kDeg};
  for (int i = 0; i < 200000; ++i) record(canonicalize(dense.draw_triangle(rng)));
  o.require(below == total, std::to_string(below) + "/" + std::to_string(total) +
                                fmt(" sampled min_ratio < sqrt2 - 1e-9 (max %.9f)", worst));

  const double at_quarter[] = {0.25 * kDeg};
  const auto quarter = sqrt2_sweep(at_quarter);
  o.require(quarter[0].min_ratio > 1.41, fmt("beta = 0.25 deg sweep min_ratio %.9f > 1.41", quarter[0].min_ratio));

  std::vector<double> betas;
  for (double d = 44.0; d > 0.01; d *= 0.8) betas.push_back(d * kDeg);
  double sweep_max = 0.0;
  for (const auto& row : sqrt2_sweep(betas)) {
    sweep_max = std::max({sweep_max, row.min_ratio, row.crossing_ratio});
  }
  o.require(sweep_max < kSqrt2, fmt("sweep max %.12f < sqrt2", sweep_max));
  return o;
}

Outcome golden_supremum(const std::vector<CanonicalTriangle>& batch) {
  Outcome o;
  const double b = kPhi - 1e-3;
  const double r = first_kind_ratio(b, b * b);
  o.require(r > kPhi - 2e-3 && r < kPhi, fmt("r(b, b^2) at b = phi - 1e-3: %.9f in (phi - 2e-3, phi)", r));

  int below = 0, total = 0;
  for (const auto& ct : batch) {
    const auto fk = first_kind(ct);
    const double m = std::min({fk[0].ratio, fk[1].ratio, fk[2].ratio});
    ++total;
    if (m < kPhi) ++below;
  }
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 100000; ++i) {
    const double bb = 1.0 + (kPhi + 0.5) * unit_uniform(rng);
    const double cc = bb + unit_uniform(rng);
    if (!(1.0 < bb && bb < cc && cc < bb + 1.0)) continue;
    ++total;
    if (first_kind_ratio(bb, cc) < kPhi) ++below;
  }
  o.require(below == total, std::to_string(below) + "/" + std::to_string(total) + " first-kind minima < phi");

  const CanonicalTriangle ct = canonicalize(triangle_from_sides(1.0, b, b * b));
  const auto fk = first_kind(ct);
  const double fk_min = std::min({fk[0].ratio, fk[1].ratio, fk[2].ratio});
  const double overall = minimum_isosceles_container(ct).min_ratio;
  o.require(fk_min > kSqrt2 && kSqrt2 > overall,
            fmt("first-kind min %.6f > sqrt2 > ", fk_min) + fmt("min_ratio %.6f", overall));
  return o;
}

Outcome third_kind_never_minimal() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 3);
  const AngleSampler sampler = default_verification_sampler();
  int pairs = 0, ok = 0;
  double tightest = 1e300;
  for (int i = 0; i < kBatch; ++i) {
    const CanonicalTriangle ct = canonicalize(sampler.draw_triangle(rng));
    const auto all = all_special_containers(ct);
    for (const auto& s : all) {
      if (s.kind != ContainerKind::Third) continue;
      const ContainerVariant pv = second_kind_partner(s.variant);
      const auto& partner = *std::find_if(all.begin(), all.end(),
                                          [pv](const SpecialContainer& x) { return x.variant == pv; });
      ++pairs;
      const double margin = (s.area - partner.area) / partner.area;
      tightest = std::min(tightest, margin);
      if (margin > 1e-9) ++ok;
    }
  }
  o.require(ok == pairs, std::to_string(ok) + "/" + std::to_string(pairs) +
                             fmt(" third > second (tightest rel margin %.3e)", tightest));
  return o;
}

Outcome acute_minimizer_structure(const std::vector<CanonicalTriangle>& batch) {
  Outcome o;
  const double a_star = alpha_star().value;
  std::mt19937_64 rng(kSeed + 4);
  int unique_ab1c = 0, obtuse = 0;
  std::vector<CanonicalTriangle> family;
  for (int i = 0; i < 200; ++i) {
    const double alpha = a_star + (45 * kDeg - a_star) * (0.01 + 0.98 * unit_uniform(rng));
    const double gamma = 2 * alpha + (90 * kDeg - 2 * alpha) * (0.01 + 0.98 * unit_uniform(rng));
    const CanonicalTriangle ct =
        canonicalize(triangle_from_angles(alpha, std::numbers::pi - alpha - gamma));
    family.push_back(ct);
    const MinimizerResult r = minimum_isosceles_container(ct);
    if (r.count == 1 && r.minimizers[0].variant == ContainerVariant::SecondAB1C) {
      ++unique_ab1c;
      if (interior_angle(r.minimizers[0].tri, 2) > std::numbers::pi / 2) ++obtuse;
    }
  }
  o.require(unique_ab1c == 200, std::to_string(unique_ab1c) + "/200 unique minimizer AB1C");
  o.require(obtuse == 200, std::to_string(obtuse) + "/200 AB1C obtuse");

  int acute_minimizers = 0, first = 0;
  auto scan = [&](const CanonicalTriangle& ct) {
    for (const auto& s : minimum_isosceles_container(ct).minimizers) {
      const double largest =
          std::max({interior_angle(s.tri, 0), interior_angle(s.tri, 1), interior_angle(s.tri, 2)});
      if (largest < std::numbers::pi / 2 - 1e-9) {
        ++acute_minimizers;
        if (s.kind == ContainerKind::First) ++first;
      }
    }
  };
  for (const auto& ct : batch) scan(ct);
  for (const auto& ct : family) scan(ct);
  o.require(first == acute_minimizers,
            std::to_string(first) + "/" + std::to_string(acute_minimizers) + " acute minimizers are first kind");
  return o;
}

Outcome can_cover_soundness() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  auto random_triangle = [&] {
    while (true) {
      auto coord = [&] { return 20.0 * unit_uniform(rng) - 10.0; };
      const Triangle t{{coord(), coord()}, {coord(), coord()}, {coord(), coord()}};
      if (area(t) > 1e-3 * bbox_diagonal_sq(t)) return t;
    }
  };

  int reflexive = 0;
  for (int i = 0; i < 100; ++i) {
    const Triangle t = random_triangle();
    reflexive += oracle::can_cover(t, t);
  }
  o.require(reflexive == 100, std::to_string(reflexive) + "/100 reflexive");

  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    Triangle m = random_triangle();
    Triangle t = random_triangle();
    if (area(m) > area(t)) std::swap(m, t);
    rejected += !oracle::can_cover(m, t);
  }
  o.require(rejected == 100, std::to_string(rejected) + "/100 smaller movers rejected");

  int covered = 0, total = 0;
  const AngleSampler acute{5 * kDeg, 1 * kDeg};
  for (int i = 0; i < 100;) {
    const CanonicalTriangle ct = canonicalize(acute.draw_triangle(rng));
    if (ct.gamma >= std::numbers::pi / 2) continue;
    ++i;
    for (const auto& s : all_special_containers(ct)) {
      ++total;
      covered += oracle::can_cover(s.tri, ct.tri);
    }
  }
  o.require(total == 900 && covered == total,
            std::to_string(covered) + "/" + std::to_string(total) + " special containers cover their triangle");
  return o;
}

}  // namespace

int main() {
  const std::vector<CanonicalTriangle> batch = seeded_batch();

  BatchResults b;
  {
    const auto start = Clock::now();
    b.reports.reserve(batch.size());
    for (const auto& ct : batch) {
      b.reports.push_back(oracle::verify_triangle(ct, 0.5 * kDeg, 8));
    }
    b.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"alpha* regression", alpha_star_regression},
      {"T* triple tie", t_star_triple_tie},
      {"oracle equivalence", [&] { return oracle_equivalence(b); }},
      {"characterization invariants", [&] { return characterization_invariants(b); }},
      {"sqrt2 supremum", [&] { return sqrt2_supremum(batch); }},
      {"golden-ratio supremum", [&] { return golden_supremum(batch); }},
      {"third kind never minimal", third_kind_never_minimal},
      {"acute minimizer / obtuse AB1C family", [&] { return acute_minimizer_structure(batch); }},
      {"can_cover soundness", can_cover_soundness},
  };

  int failed = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    const Outcome o = c.run();
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index++, c.title, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
