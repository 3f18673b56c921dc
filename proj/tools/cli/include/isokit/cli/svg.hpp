#ifndef ISOKIT_CLI_SVG_HPP
#define ISOKIT_CLI_SVG_HPP

#include <optional>
#include <string>
#include <string_view>

#include "isokit/geometry.hpp"
#include "isokit/tolerance.hpp"

namespace isokit::cli {

enum class SvgSelector { First, Second, Third, All, Min };

std::optional<SvgSelector> selector_from_name(std::string_view s);
std::string_view name(SvgSelector s);

struct SvgFigure {
  std::string text;
  int containers = 0;  // outlines drawn, not counting the input
};

// Input shaded, selected containers outlined and their auxiliary points
// labeled. Isosceles input is drawn alone. Output bytes depend only on the
// arguments.
SvgFigure render_svg(const CanonicalTriangle& ct, SvgSelector which, const Tolerances& tol = {});

}  // namespace isokit::cli

#endif
