#include "isokit/cli/json_io.hpp"

#include <fstream>
#include <numbers>

#include "isokit/error.hpp"

using nlohmann::json;

namespace isokit {
namespace {

std::string_view shape_name(ShapeClass s) {
  switch (s) {
    case ShapeClass::Scalene:
      return "scalene";
    case ShapeClass::Isosceles:
      return "isosceles";
    case ShapeClass::Equilateral:
      return "equilateral";
  }
  return "scalene";
}

ShapeClass shape_from_name(const std::string& s) {
  if (s == "scalene") return ShapeClass::Scalene;
  if (s == "isosceles") return ShapeClass::Isosceles;
  if (s == "equilateral") return ShapeClass::Equilateral;
  throw cli::InputError("unknown shape_class \"" + s + "\"");
}

ContainerVariant variant_or_throw(const std::string& s) {
  const auto v = variant_from_name(s);
  if (!v) throw cli::InputError("unknown container variant \"" + s + "\"");
  return *v;
}

}  // namespace

void to_json(json& j, const Point& p) { j = json::array({p.x, p.y}); }

void from_json(const json& j, Point& p) {
  if (!j.is_array() || j.size() != 2) throw cli::InputError("a point must be [x, y]");
  p = {j[0].get<double>(), j[1].get<double>()};
}

void to_json(json& j, const Triangle& t) { j = json::array({t.A, t.B, t.C}); }

void from_json(const json& j, Triangle& t) {
  if (!j.is_array() || j.size() != 3) throw cli::InputError("a triangle must be [[x,y] x 3]");
  t = {j[0].get<Point>(), j[1].get<Point>(), j[2].get<Point>()};
}

void to_json(json& j, const CanonicalTriangle& ct) {
  j = {{"vertices", ct.tri},
       {"sides", {ct.a, ct.b, ct.c}},
       {"angles", {ct.alpha, ct.beta, ct.gamma}},
       {"area", ct.area},
       {"shape_class", shape_name(ct.shape_class)}};
}

void from_json(const json& j, CanonicalTriangle& ct) {
  ct.tri = j.at("vertices").get<Triangle>();
  const auto& s = j.at("sides");
  ct.a = s.at(0);
  ct.b = s.at(1);
  ct.c = s.at(2);
  const auto& g = j.at("angles");
  ct.alpha = g.at(0);
  ct.beta = g.at(1);
  ct.gamma = g.at(2);
  ct.area = j.at("area");
  ct.shape_class = shape_from_name(j.at("shape_class"));
}

void to_json(json& j, const SpecialContainer& s) {
  j = {{"variant", name(s.variant)},
       {"kind", name(s.kind)},
       {"auxiliary", auxiliary_label(s.variant)},
       {"vertices", s.tri},
       {"area", s.area},
       {"ratio", s.ratio}};
}

void from_json(const json& j, SpecialContainer& s) {
  s.variant = variant_or_throw(j.at("variant"));
  s.kind = kind_of(s.variant);
  if (j.at("kind").get<std::string>() != name(s.kind)) {
    throw cli::InputError("kind does not match variant " + std::string(name(s.variant)));
  }
  s.tri = j.at("vertices").get<Triangle>();
  s.area = j.at("area");
  s.ratio = j.at("ratio");
}

void to_json(json& j, const MinimizerResult& r) {
  j = {{"min_area", r.min_area},
       {"min_ratio", r.min_ratio},
       {"self_container", r.self_container},
       {"count", r.count},
       {"minimizers", r.minimizers},
       {"candidates", r.candidates}};
}

void from_json(const json& j, MinimizerResult& r) {
  r.min_area = j.at("min_area");
  r.min_ratio = j.at("min_ratio");
  r.self_container = j.at("self_container");
  r.count = j.at("count");
  r.minimizers = j.at("minimizers").get<std::vector<SpecialContainer>>();
  r.candidates = j.at("candidates").get<std::vector<SpecialContainer>>();
}

void to_json(json& j, const RootResult& r) {
  j = {{"value", r.value}, {"residual", r.residual}, {"iterations", r.iterations}};
}

void from_json(const json& j, RootResult& r) {
  r.value = j.at("value");
  r.residual = j.at("residual");
  r.iterations = j.at("iterations");
}

void to_json(json& j, const Sqrt2SweepRow& r) {
  j = {{"beta", r.beta},
       {"crossing", r.crossing},
       {"crossing_ratio", r.crossing_ratio},
       {"min_ratio", r.min_ratio}};
}

void from_json(const json& j, Sqrt2SweepRow& r) {
  r.beta = j.at("beta");
  r.crossing = j.at("crossing");
  r.crossing_ratio = j.at("crossing_ratio");
  r.min_ratio = j.at("min_ratio");
}

void to_json(json& j, const GoldenSweepRow& r) {
  j = {{"b", r.b}, {"c", r.c}, {"first_kind_ratio", r.first_kind_ratio}, {"min_ratio", r.min_ratio}};
}

void from_json(const json& j, GoldenSweepRow& r) {
  r.b = j.at("b");
  r.c = j.at("c");
  r.first_kind_ratio = j.at("first_kind_ratio");
  r.min_ratio = j.at("min_ratio");
}

namespace oracle {

void to_json(json& j, const ShapeParams& p) {
  j = {{"apex_angle", p.apex_angle}, {"rotation", p.rotation}};
}

void from_json(const json& j, ShapeParams& p) {
  p.apex_angle = j.at("apex_angle");
  p.rotation = j.at("rotation");
}

void to_json(json& j, const BoundaryChecks& c) {
  j = {{"vertices_on_boundary", c.vertices_on_boundary},
       {"sides_touch", c.sides_touch},
       {"one_vertex_per_arc", c.one_vertex_per_arc},
       {"shared_vertex", c.shared_vertex},
       {"shares_side_and_angle", c.shares_side_and_angle}};
}

void from_json(const json& j, BoundaryChecks& c) {
  c.vertices_on_boundary = j.at("vertices_on_boundary");
  c.sides_touch = j.at("sides_touch");
  c.one_vertex_per_arc = j.at("one_vertex_per_arc");
  c.shared_vertex = j.at("shared_vertex");
  c.shares_side_and_angle = j.at("shares_side_and_angle");
}

void to_json(json& j, const VerificationReport& r) {
  j = {{"input", r.input},
       {"closed_form_area", r.closed_form_area},
       {"oracle_area", r.oracle_area},
       {"relative_gap", r.relative_gap},
       {"boundary_invariants_ok", r.boundary_invariants_ok},
       {"shares_side_and_angle", r.shares_side_and_angle},
       {"checks", r.checks},
       {"witness", r.witness},
       {"witness_params", r.witness_params}};
}

void from_json(const json& j, VerificationReport& r) {
  r.input = j.at("input").get<CanonicalTriangle>();
  r.closed_form_area = j.at("closed_form_area");
  r.oracle_area = j.at("oracle_area");
  r.relative_gap = j.at("relative_gap");
  r.boundary_invariants_ok = j.at("boundary_invariants_ok");
  r.shares_side_and_angle = j.at("shares_side_and_angle");
  r.checks = j.at("checks").get<BoundaryChecks>();
  r.witness = j.at("witness").get<Triangle>();
  r.witness_params = j.at("witness_params").get<ShapeParams>();
}

}  // namespace oracle

namespace cli {

void to_json(json& j, const TriangleInputSpec& spec) {
  if (const auto* v = std::get_if<VerticesInput>(&spec)) {
    j = {{"vertices", v->tri}};
  } else if (const auto* s = std::get_if<SidesInput>(&spec)) {
    j = {{"sides", {s->a, s->b, s->c}}};
  } else {
    const auto& a = std::get<AnglesInput>(spec);
    j = {{"angles", {a.alpha, a.beta}}, {"scale", a.scale}, {"units", "radians"}};
  }
}

void from_json(const json& j, TriangleInputSpec& spec) {
  if (!j.is_object()) throw InputError("\"triangle\" must be an object");
  const int present = int(j.contains("vertices")) + int(j.contains("sides")) + int(j.contains("angles"));
  if (present != 1) {
    throw InputError("\"triangle\" needs exactly one of \"vertices\", \"sides\", \"angles\"");
  }
  if (j.contains("vertices")) {
    spec = VerticesInput{j.at("vertices").get<Triangle>()};
  } else if (j.contains("sides")) {
    const auto& s = j.at("sides");
    if (!s.is_array() || s.size() != 3) throw InputError("\"sides\" must hold three numbers");
    spec = SidesInput{s[0], s[1], s[2]};
  } else {
    const auto& a = j.at("angles");
    if (!a.is_array() || a.size() != 2) throw InputError("\"angles\" must hold two numbers");
    const std::string units = j.value("units", "radians");
    double factor = 1.0;
    if (units == "degrees") {
      factor = std::numbers::pi / 180.0;
    } else if (units != "radians") {
      throw InputError("\"units\" must be \"radians\" or \"degrees\"");
    }
    spec = AnglesInput{factor * a[0].get<double>(), factor * a[1].get<double>(), j.value("scale", 1.0)};
  }
}

void to_json(json& j, const ContainersReport& r) {
  j = {{"input", r.input},
       {"self_container", r.self_container},
       {"near_right_angle", r.near_right_angle},
       {"containers", r.containers}};
}

void from_json(const json& j, ContainersReport& r) {
  r.input = j.at("input").get<CanonicalTriangle>();
  r.self_container = j.at("self_container");
  r.near_right_angle = j.at("near_right_angle");
  r.containers = j.at("containers").get<std::vector<SpecialContainer>>();
}

void to_json(json& j, const MinReport& r) { j = {{"input", r.input}, {"result", r.result}}; }

void from_json(const json& j, MinReport& r) {
  r.input = j.at("input").get<CanonicalTriangle>();
  r.result = j.at("result").get<MinimizerResult>();
}

void to_json(json& j, const VerifySettings& s) {
  j = {{"seed", s.seed},
       {"samples", s.samples},
       {"step", s.step},
       {"refine", s.refine},
       {"min_angle", s.min_angle},
       {"scalene_margin", s.scalene_margin},
       {"max_gap", s.max_gap}};
}

void from_json(const json& j, VerifySettings& s) {
  s.seed = j.at("seed");
  s.samples = j.at("samples");
  s.step = j.at("step");
  s.refine = j.at("refine");
  s.min_angle = j.at("min_angle");
  s.scalene_margin = j.at("scalene_margin");
  s.max_gap = j.at("max_gap");
}

void to_json(json& j, const VerifySummary& s) {
  j = {{"settings", s.settings},
       {"max_gap", s.max_gap},
       {"within_gap", s.within_gap},
       {"boundary_ok", s.boundary_ok},
       {"shares_side_and_angle", s.shares_side_and_angle},
       {"max_min_ratio", s.max_min_ratio},
       {"pass", s.pass},
       {"cases", s.cases}};
}

void from_json(const json& j, VerifySummary& s) {
  s.settings = j.at("settings").get<VerifySettings>();
  s.max_gap = j.at("max_gap");
  s.within_gap = j.at("within_gap");
  s.boundary_ok = j.at("boundary_ok");
  s.shares_side_and_angle = j.at("shares_side_and_angle");
  s.max_min_ratio = j.at("max_min_ratio");
  s.pass = j.at("pass");
  s.cases = j.at("cases").get<std::vector<oracle::VerificationReport>>();
}

void to_json(json& j, const ExtremalReport& r) {
  j = {{"mode", r.mode}, {"sqrt2", r.sqrt2}, {"golden", r.golden}};
  j["alpha_star"] = r.alpha_star ? json(*r.alpha_star) : json(nullptr);
}

void from_json(const json& j, ExtremalReport& r) {
  r.mode = j.at("mode");
  r.sqrt2 = j.at("sqrt2").get<std::vector<Sqrt2SweepRow>>();
  r.golden = j.at("golden").get<std::vector<GoldenSweepRow>>();
  const auto& a = j.at("alpha_star");
  r.alpha_star = a.is_null() ? std::nullopt : std::optional<RootResult>(a.get<RootResult>());
}

template <class Report>
Report parse_document(const json& doc, std::string_view command) {
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw InputError("unsupported schema_version " + doc.at("schema_version").dump());
    }
    if (doc.at("units").get<std::string>() != "radians") throw InputError("units must be \"radians\"");
    if (doc.at("command").get<std::string>() != command) {
      throw InputError("document holds a \"" + doc.at("command").get<std::string>() + "\" report");
    }
    return doc.at("report").get<Report>();
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

template ContainersReport parse_document<ContainersReport>(const json&, std::string_view);
template MinReport parse_document<MinReport>(const json&, std::string_view);
template VerifySummary parse_document<VerifySummary>(const json&, std::string_view);
template ExtremalReport parse_document<ExtremalReport>(const json&, std::string_view);

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << doc.dump(2) << '\n';
  if (!f) throw IoError("write to " + path + " failed");
}

}  // namespace cli
}  // namespace isokit
