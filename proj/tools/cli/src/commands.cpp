#include "isokit/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numbers>
#include <random>
#include <thread>

#include "CLI11.hpp"

#include "isokit/cli/input.hpp"
#include "isokit/cli/json_io.hpp"
#include "isokit/cli/svg.hpp"
#include "isokit/error.hpp"
#include "isokit/min_container.hpp"
#include "isokit/oracle.hpp"
#include "isokit/sampling.hpp"
#include "isokit/special_containers.hpp"

namespace isokit::cli {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string g(double v, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v == 0.0 ? 0.0 : v);
  return buf;
}

std::string e3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string point_text(Point p) { return "(" + g(p.x) + ", " + g(p.y) + ")"; }

void print_input(const CanonicalTriangle& ct, std::ostream& out) {
  out << "input   a=" << g(ct.a) << " b=" << g(ct.b) << " c=" << g(ct.c) << "  angles " << g(ct.alpha / kDeg)
      << ", " << g(ct.beta / kDeg) << ", " << g(ct.gamma / kDeg) << " deg  area " << g(ct.area) << '\n';
  out << "        A=" << point_text(ct.tri.A) << " B=" << point_text(ct.tri.B) << " C=" << point_text(ct.tri.C)
      << '\n';
}

void print_container_row(const SpecialContainer& s, std::ostream& out) {
  out << pad(std::string(name(s.variant)), 8) << pad(std::string(name(s.kind)), 8) << pad(g(s.ratio), 16)
      << pad(g(s.area), 16) << std::string(auxiliary_label(s.variant)) << '=' << point_text(s.auxiliary_point())
      << '\n';
}

std::string join_names(const std::vector<SpecialContainer>& v) {
  std::string s;
  for (const auto& c : v) {
    if (!s.empty()) s += ", ";
    s += name(c.variant);
  }
  return s;
}

std::uint64_t seed_from_env() {
  const char* env = std::getenv("ISOKIT_SEED");
  if (env == nullptr || *env == '\0') return 42;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [p, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || p != end) throw InputError("ISOKIT_SEED must be a non-negative integer");
  return v;
}

struct InputFlags {
  std::vector<double> sides;
  std::vector<double> vertices;
  std::vector<double> angles;
  double scale = 1.0;
  std::string preset;
  std::string input_path;
  std::vector<CLI::Option*> scale_opts;

  void attach(CLI::App* sub) {
    sub->add_option("--sides", sides, "Side lengths a,b,c (any order)")->delimiter(',');
    sub->add_option("--vertices", vertices, "Vertices x1,y1,x2,y2,x3,y3")->delimiter(',');
    sub->add_option("--angles", angles, "Angles at A and B in degrees: alpha,beta")->delimiter(',');
    scale_opts.push_back(sub->add_option("--scale", scale, "Length of AB when --angles is given")->capture_default_str());
    sub->add_option("--preset", preset, "Named triangle")->check(CLI::IsMember({"t-star"}));
    sub->add_option("--input", input_path, "JSON file holding {\"triangle\": ...}");
  }

  CanonicalTriangle resolve_canonical(const Tolerances& tol) const {
    const int given = int(!sides.empty()) + int(!vertices.empty()) + int(!angles.empty()) +
                      int(!preset.empty()) + int(!input_path.empty());
    if (given != 1) {
      throw InputError("exactly one of --sides, --vertices, --angles, --preset, --input is required");
    }
    const bool scale_given =
        std::any_of(scale_opts.begin(), scale_opts.end(), [](CLI::Option* o) { return o->count() > 0; });
    if (scale_given && angles.empty()) throw InputError("--scale only applies to --angles");
    if (!preset.empty()) return t_star();

    TriangleInputSpec spec;
    if (!sides.empty()) {
      if (sides.size() != 3) throw InputError("--sides needs exactly 3 values");
      spec = SidesInput{sides[0], sides[1], sides[2]};
    } else if (!vertices.empty()) {
      if (vertices.size() != 6) throw InputError("--vertices needs exactly 6 values");
      spec = VerticesInput{{{vertices[0], vertices[1]}, {vertices[2], vertices[3]}, {vertices[4], vertices[5]}}};
    } else if (!angles.empty()) {
      if (angles.size() != 2) throw InputError("--angles needs exactly 2 values");
      spec = AnglesInput{angles[0] * kDeg, angles[1] * kDeg, scale};
    } else {
      spec = read_input_file(input_path);
    }
    return canonicalize(resolve(spec), tol);
  }
};

}  // namespace

ContainersReport containers_report(const CanonicalTriangle& ct, const Tolerances& tol) {
  ContainersReport r;
  r.input = ct;
  if (!ct.is_scalene()) {
    r.self_container = true;
    return r;
  }
  r.containers = all_special_containers(ct, tol);
  r.near_right_angle = third_kind(ct, tol).near_right_angle;
  return r;
}

void print(const ContainersReport& r, std::ostream& out) {
  print_input(r.input, out);
  if (r.self_container) {
    out << "isosceles: self-container, ratio 1\n";
    return;
  }
  out << r.containers.size() << " special containers";
  if (r.near_right_angle) out << " (gamma within tolerance of 90 deg)";
  out << '\n';
  out << pad("variant", 8) << pad("kind", 8) << pad("ratio", 16) << pad("area", 16) << "auxiliary point\n";
  for (const auto& s : r.containers) print_container_row(s, out);
}

MinReport min_report(const CanonicalTriangle& ct, const Tolerances& tol) {
  return {ct, minimum_isosceles_container(ct, tol)};
}

void print(const MinReport& r, std::ostream& out) {
  print_input(r.input, out);
  const MinimizerResult& m = r.result;
  if (m.self_container) {
    out << "minimizer self, area " << g(m.min_area) << ", ratio 1\ncount 1\n";
    return;
  }
  out << (m.count == 1 ? "minimizer " : "minimizers ") << join_names(m.minimizers) << ", area " << g(m.min_area)
      << ", ratio " << g(m.min_ratio) << '\n';
  out << "count " << m.count << '\n';
  out << "candidates\n";
  for (const auto& s : m.candidates) print_container_row(s, out);
}

VerifySummary run_verify(const VerifySettings& s, int threads, const Tolerances& tol) {
  if (s.samples < 1) throw InputError("--samples must be at least 1");
  if (threads < 1) throw InputError("--threads must be at least 1");
  if (!(s.max_gap > 0.0)) throw InputError("--max-gap must be positive");

  std::mt19937_64 rng(s.seed);
  const AngleSampler sampler{s.min_angle, s.scalene_margin};
  std::vector<CanonicalTriangle> inputs;
  inputs.reserve(s.samples);
  for (int i = 0; i < s.samples; ++i) inputs.push_back(canonicalize(sampler.draw_triangle(rng), tol));

  // Fail fast on bad oracle settings before fanning out.
  VerifySummary r;
  r.settings = s;
  r.cases.resize(inputs.size());
  r.cases[0] = oracle::verify_triangle(inputs[0], s.step, s.refine, tol);

  const int workers = std::min<int>(threads, s.samples);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (std::size_t i = 1 + w; i < inputs.size(); i += workers) {
        r.cases[i] = oracle::verify_triangle(inputs[i], s.step, s.refine, tol);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& c : r.cases) {
    const double gap = std::abs(c.relative_gap);
    r.max_gap = std::max(r.max_gap, gap);
    r.within_gap += gap <= s.max_gap;
    r.boundary_ok += c.boundary_invariants_ok;
    r.shares_side_and_angle += c.shares_side_and_angle;
    r.max_min_ratio = std::max(r.max_min_ratio, c.closed_form_area / c.input.area);
  }
  r.pass = r.within_gap == s.samples && r.boundary_ok == s.samples && r.shares_side_and_angle == s.samples &&
           r.max_min_ratio < std::numbers::sqrt2;
  return r;
}

void print(const VerifySummary& r, std::ostream& out) {
  const VerifySettings& s = r.settings;
  const std::string n = "/" + std::to_string(s.samples);
  out << "samples " << s.samples << "  seed " << s.seed << "  step " << g(s.step / kDeg) << " deg  refine "
      << s.refine << "  min angle " << g(s.min_angle / kDeg) << " deg  scalene margin "
      << g(s.scalene_margin / kDeg) << " deg\n";
  out << pad("max relative gap", 24) << e3(r.max_gap) << " (threshold " << e3(s.max_gap) << ")\n";
  out << pad("within gap", 24) << r.within_gap << n << '\n';
  out << pad("boundary invariants", 24) << r.boundary_ok << n << '\n';
  out << pad("shared side and angle", 24) << r.shares_side_and_angle << n << '\n';
  out << pad("max min-ratio", 24) << g(r.max_min_ratio) << " (sqrt2 = " << g(std::numbers::sqrt2) << ")\n";
  out << "result " << (r.pass ? "PASS" : "FAIL") << '\n';
}

ExtremalReport run_extremal(const std::string& mode, std::optional<double> beta, std::optional<double> b,
                            const Tolerances& tol) {
  ExtremalReport r;
  r.mode = mode;
  if (mode == "alpha-star") {
    r.alpha_star = alpha_star();
  } else if (mode == "sqrt2") {
    std::vector<double> betas;
    if (beta) {
      betas.push_back(*beta);
    } else {
      for (double d : {8.0, 4.0, 2.0, 1.0, 0.5, 0.25, 0.125, 0.0625}) betas.push_back(d * kDeg);
    }
    r.sqrt2 = sqrt2_sweep(betas, tol);
  } else if (mode == "golden") {
    std::vector<double> bs;
    if (b) {
      bs.push_back(*b);
    } else {
      for (double d : {0.3, 0.1, 0.03, 0.01, 0.003, 0.001, 0.0003, 0.0001}) bs.push_back(std::numbers::phi - d);
    }
    r.golden = golden_sweep(bs, tol);
  } else {
    throw InputError("unknown extremal mode \"" + mode + "\"");
  }
  return r;
}

void print(const ExtremalReport& r, std::ostream& out) {
  if (r.alpha_star) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", r.alpha_star->value / kDeg);
    out << "alpha* = " << buf << " deg (" << g(r.alpha_star->value, 15) << " rad)\n";
    out << "residual " << e3(r.alpha_star->residual) << "  iterations " << r.alpha_star->iterations << '\n';
  }
  if (!r.sqrt2.empty()) {
    out << pad("beta_deg", 14) << pad("crossing_deg", 22) << pad("crossing_ratio", 18) << "min_ratio\n";
    for (const auto& row : r.sqrt2) {
      out << pad(g(row.beta / kDeg), 14) << pad(g(row.crossing / kDeg, 15), 22) << pad(g(row.crossing_ratio), 18)
          << g(row.min_ratio) << '\n';
    }
    out << "sqrt2 = " << g(std::numbers::sqrt2) << '\n';
  }
  if (!r.golden.empty()) {
    out << pad("b", 16) << pad("c=b^2", 16) << pad("r(b,c)", 16) << "min_ratio\n";
    for (const auto& row : r.golden) {
      out << pad(g(row.b), 16) << pad(g(row.c), 16) << pad(g(row.first_kind_ratio), 16) << g(row.min_ratio)
          << '\n';
    }
    out << "phi = " << g(std::numbers::phi) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-area isosceles containers of triangles"};
  app.name(args.empty() ? "isokit" : args[0]);
  app.require_subcommand(1);

  InputFlags input;
  std::string json_path;
  double tol_rel = Tolerances{}.tie_rel;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", json_path, "Write the machine-readable report to PATH");
    sub->add_option("--tol", tol_rel, "Relative tolerance for ties and numeric comparisons")
        ->check(CLI::Range(1e-15, 1e-3))
        ->capture_default_str();
  };

  auto* containers = app.add_subcommand("containers", "List every special isosceles container");
  input.attach(containers);
  common(containers);

  auto* min = app.add_subcommand("min", "Minimum-area isosceles container(s)");
  input.attach(min);
  common(min);

  VerifySettings vs;
  double step_deg = 0.5, min_angle_deg = 5.0, margin_deg = 1.0;
  int threads = 1;
  CLI::Option* seed_opt = nullptr;
  auto* verify = app.add_subcommand("verify", "Check the closed form against the brute-force oracle");
  verify->add_option("--samples", vs.samples, "Number of random triangles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  seed_opt = verify->add_option("--seed", vs.seed, "RNG seed (default: $ISOKIT_SEED, else 42)");
  verify->add_option("--step", step_deg, "Oracle coarse grid step in degrees")->capture_default_str();
  verify->add_option("--refine", vs.refine, "Oracle refinement passes")->capture_default_str();
  verify->add_option("--min-angle", min_angle_deg, "Smallest sampled angle in degrees")->capture_default_str();
  verify->add_option("--margin", margin_deg, "Smallest sampled gap between angles in degrees")
      ->capture_default_str();
  verify->add_option("--max-gap", vs.max_gap, "Largest accepted relative gap")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  common(verify);

  std::string mode;
  double beta_deg = 0.0, b_value = 0.0;
  auto* extremal = app.add_subcommand("extremal", "Scans toward the sqrt2 and golden-ratio suprema, or alpha*");
  extremal->add_option("mode", mode, "sqrt2 | golden | alpha-star")
      ->required()
      ->transform(CLI::IsMember({"sqrt2", "golden", "alpha-star", "alpha_star"}));
  auto* beta_opt = extremal->add_option("--beta", beta_deg, "sqrt2: single angle beta in degrees");
  auto* b_opt = extremal->add_option("--b", b_value, "golden: single b on the parabola c = b^2");
  common(extremal);

  std::string which = "all", out_path;
  auto* svg = app.add_subcommand("svg", "Write an SVG figure of selected containers");
  input.attach(svg);
  svg->add_option("--which", which, "first | second | third | all | min")
      ->check(CLI::IsMember({"first", "second", "third", "all", "min"}))
      ->capture_default_str();
  svg->add_option("--out", out_path, "Output SVG path")->required();
  common(svg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("isokit");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    Tolerances tol;
    tol.tie_rel = tol_rel;
    tol.num_rel = tol_rel;

    nlohmann::json doc;
    int status = kExitOk;
    if (containers->parsed()) {
      const ContainersReport r = containers_report(input.resolve_canonical(tol), tol);
      print(r, out);
      doc = make_document("containers", r);
    } else if (min->parsed()) {
      const MinReport r = min_report(input.resolve_canonical(tol), tol);
      print(r, out);
      doc = make_document("min", r);
    } else if (verify->parsed()) {
      if (seed_opt->count() == 0) vs.seed = seed_from_env();
      vs.step = step_deg * kDeg;
      vs.min_angle = min_angle_deg * kDeg;
      vs.scalene_margin = margin_deg * kDeg;
      const VerifySummary r = run_verify(vs, threads, tol);
      print(r, out);
      doc = make_document("verify", r);
      if (!r.pass) status = kExitVerificationFailed;
    } else if (extremal->parsed()) {
      if (mode == "alpha_star") mode = "alpha-star";
      if (beta_opt->count() > 0 && mode != "sqrt2") throw InputError("--beta only applies to sqrt2 mode");
      if (b_opt->count() > 0 && mode != "golden") throw InputError("--b only applies to golden mode");
      std::optional<double> beta, b;
      if (beta_opt->count() > 0) beta = beta_deg * kDeg;
      if (b_opt->count() > 0) b = b_value;
      const ExtremalReport r = run_extremal(mode, beta, b, tol);
      print(r, out);
      doc = make_document("extremal", r);
    } else if (svg->parsed()) {
      const CanonicalTriangle ct = input.resolve_canonical(tol);
      const SvgFigure fig = render_svg(ct, *selector_from_name(which), tol);
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw IoError("cannot open " + out_path + " for writing");
      f << fig.text;
      if (!f) throw IoError("write to " + out_path + " failed");
      out << "wrote " << fig.containers << " container" << (fig.containers == 1 ? "" : "s") << " to " << out_path
          << '\n';
      doc = make_document("svg", nlohmann::json{{"path", out_path},
                                                {"which", which},
                                                {"input", ct},
                                                {"containers", fig.containers}});
    }
    if (!json_path.empty()) write_json_file(json_path, doc);
    return status;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const GeometryError& e) {
    err << "invalid input (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace isokit::cli
