#include "isokit/cli/input.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "isokit/cli/json_io.hpp"
#include "isokit/error.hpp"
#include "isokit/min_container.hpp"

namespace isokit::cli {
namespace {

Triangle resolve_one(const VerticesInput& in) {
  if (!is_finite(in.tri)) throw InputError("vertices must be finite numbers");
  if (is_degenerate(in.tri)) throw InputError("vertices are collinear or coincident (zero area)");
  return in.tri;
}

Triangle resolve_one(const SidesInput& in) {
  try {
    return triangle_from_sides(in.a, in.b, in.c);
  } catch (const GeometryError& e) {
    throw InputError(e.what());
  }
}

Triangle resolve_one(const AnglesInput& in) {
  if (!std::isfinite(in.alpha) || !std::isfinite(in.beta) || !std::isfinite(in.scale)) {
    throw InputError("angles and scale must be finite numbers");
  }
  if (!(in.alpha > 0.0) || !(in.beta > 0.0)) throw InputError("angles must be positive");
  if (!(in.alpha + in.beta < std::numbers::pi)) throw InputError("angles must sum to less than 180 degrees");
  if (!(in.scale > 0.0)) throw InputError("scale must be positive");
  return triangle_from_angles(in.alpha, in.beta, in.scale);
}

}  // namespace

Triangle resolve(const TriangleInputSpec& spec) {
  return std::visit([](const auto& in) { return resolve_one(in); }, spec);
}

TriangleInputSpec read_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read input file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("triangle")) {
    throw InputError(path + ": expected an object with a \"triangle\" member");
  }
  try {
    return doc.at("triangle").get<TriangleInputSpec>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace isokit::cli
