#ifndef ISOKIT_CLI_REPORTS_HPP
#define ISOKIT_CLI_REPORTS_HPP

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "isokit/geometry.hpp"
#include "isokit/min_container.hpp"
#include "isokit/oracle.hpp"
#include "isokit/special_containers.hpp"

namespace isokit::cli {

struct ContainersReport {
  CanonicalTriangle input;
  bool self_container = false;  // isosceles input, nothing constructed
  bool near_right_angle = false;
  std::vector<SpecialContainer> containers;

  friend bool operator==(const ContainersReport&, const ContainersReport&) = default;
};

struct MinReport {
  CanonicalTriangle input;
  MinimizerResult result;

  friend bool operator==(const MinReport&, const MinReport&) = default;
};

// Angles in radians.
struct VerifySettings {
  std::uint64_t seed = 42;
  int samples = 1000;
  double step = 0.5 * std::numbers::pi / 180.0;
  int refine = oracle::kDefaultRefineIters;
  double min_angle = 5.0 * std::numbers::pi / 180.0;
  double scalene_margin = 1.0 * std::numbers::pi / 180.0;
  double max_gap = 1e-3;

  friend bool operator==(const VerifySettings&, const VerifySettings&) = default;
};

struct VerifySummary {
  VerifySettings settings;
  double max_gap = 0.0;
  int within_gap = 0;
  int boundary_ok = 0;
  int shares_side_and_angle = 0;
  double max_min_ratio = 0.0;
  bool pass = false;
  std::vector<oracle::VerificationReport> cases;

  friend bool operator==(const VerifySummary&, const VerifySummary&) = default;
};

struct ExtremalReport {
  std::string mode;  // "sqrt2", "golden" or "alpha-star"
  std::optional<RootResult> alpha_star;
  std::vector<Sqrt2SweepRow> sqrt2;
  std::vector<GoldenSweepRow> golden;

  friend bool operator==(const ExtremalReport&, const ExtremalReport&) = default;
};

}  // namespace isokit::cli

#endif
