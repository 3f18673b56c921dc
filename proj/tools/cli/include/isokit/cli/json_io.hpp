#ifndef ISOKIT_CLI_JSON_IO_HPP
#define ISOKIT_CLI_JSON_IO_HPP

#include <string_view>

#include "json.hpp"

#include "isokit/cli/input.hpp"
#include "isokit/cli/reports.hpp"

// Serializers live in the namespaces of the types so that nlohmann finds
// them by argument-dependent lookup. Angles are stored in radians.

namespace isokit {

void to_json(nlohmann::json& j, const Point& p);
void from_json(const nlohmann::json& j, Point& p);
void to_json(nlohmann::json& j, const Triangle& t);
void from_json(const nlohmann::json& j, Triangle& t);
void to_json(nlohmann::json& j, const CanonicalTriangle& ct);
void from_json(const nlohmann::json& j, CanonicalTriangle& ct);
void to_json(nlohmann::json& j, const SpecialContainer& s);
void from_json(const nlohmann::json& j, SpecialContainer& s);
void to_json(nlohmann::json& j, const MinimizerResult& r);
void from_json(const nlohmann::json& j, MinimizerResult& r);
void to_json(nlohmann::json& j, const RootResult& r);
void from_json(const nlohmann::json& j, RootResult& r);
void to_json(nlohmann::json& j, const Sqrt2SweepRow& r);
void from_json(const nlohmann::json& j, Sqrt2SweepRow& r);
void to_json(nlohmann::json& j, const GoldenSweepRow& r);
void from_json(const nlohmann::json& j, GoldenSweepRow& r);

namespace oracle {
void to_json(nlohmann::json& j, const ShapeParams& p);
void from_json(const nlohmann::json& j, ShapeParams& p);
void to_json(nlohmann::json& j, const BoundaryChecks& c);
void from_json(const nlohmann::json& j, BoundaryChecks& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
}  // namespace oracle

namespace cli {

void to_json(nlohmann::json& j, const TriangleInputSpec& spec);
void from_json(const nlohmann::json& j, TriangleInputSpec& spec);
void to_json(nlohmann::json& j, const ContainersReport& r);
void from_json(const nlohmann::json& j, ContainersReport& r);
void to_json(nlohmann::json& j, const MinReport& r);
void from_json(const nlohmann::json& j, MinReport& r);
void to_json(nlohmann::json& j, const VerifySettings& s);
void from_json(const nlohmann::json& j, VerifySettings& s);
void to_json(nlohmann::json& j, const VerifySummary& s);
void from_json(const nlohmann::json& j, VerifySummary& s);
void to_json(nlohmann::json& j, const ExtremalReport& r);
void from_json(const nlohmann::json& j, ExtremalReport& r);

inline constexpr int kSchemaVersion = 1;

// {"schema_version": 1, "units": "radians", "command": ..., "report": ...}
template <class Report>
nlohmann::json make_document(std::string_view command, const Report& report) {
  return {{"schema_version", kSchemaVersion},
          {"units", "radians"},
          {"command", command},
          {"report", report}};
}

// Checks the envelope and returns the report. Throws InputError.
template <class Report>
Report parse_document(const nlohmann::json& doc, std::string_view command);

// Writes doc with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace cli
}  // namespace isokit

#endif
