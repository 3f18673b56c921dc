#include "isokit/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "isokit/min_container.hpp"
#include "isokit/special_containers.hpp"

namespace isokit::cli {
namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 48.0;
constexpr double kLegendLine = 18.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000".
  return std::string(buf) == "-0.000" ? "0.000" : buf;
}

const char* kind_color(ContainerKind k) {
  switch (k) {
    case ContainerKind::First:
      return "#c0392b";
    case ContainerKind::Second:
      return "#2471a3";
    case ContainerKind::Third:
      return "#1e8449";
  }
  return "#000000";
}

// B1 -> B with subscript 1, Cbar -> C with an overline.
std::string markup_label(std::string_view label) {
  if (label.size() > 3 && label.substr(label.size() - 3) == "bar") {
    return "<tspan text-decoration=\"overline\">" + std::string(label.substr(0, label.size() - 3)) + "</tspan>";
  }
  if (!label.empty() && label.back() >= '0' && label.back() <= '9') {
    return std::string(label.substr(0, label.size() - 1)) +
           "<tspan baseline-shift=\"sub\" font-size=\"11\">" + label.back() + "</tspan>";
  }
  return std::string(label);
}

std::vector<SpecialContainer> select(const CanonicalTriangle& ct, SvgSelector which,
                                     const Tolerances& tol) {
  if (which == SvgSelector::Min) return minimum_isosceles_container(ct, tol).minimizers;
  std::vector<SpecialContainer> out;
  for (const auto& s : all_special_containers(ct, tol)) {
    const bool keep = which == SvgSelector::All ||
                      (which == SvgSelector::First && s.kind == ContainerKind::First) ||
                      (which == SvgSelector::Second && s.kind == ContainerKind::Second) ||
                      (which == SvgSelector::Third && s.kind == ContainerKind::Third);
    if (keep) out.push_back(s);
  }
  return out;
}

class Frame {
 public:
  explicit Frame(const std::vector<Point>& pts) {
    lo_ = hi_ = pts.front();
    for (const Point& p : pts) {
      lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y)};
      hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y)};
    }
    const double span = std::max(hi_.x - lo_.x, hi_.y - lo_.y);
    scale_ = (kCanvas - 2 * kMargin) / span;
    off_ = {0.5 * (kCanvas - 2 * kMargin - (hi_.x - lo_.x) * scale_),
            0.5 * (kCanvas - 2 * kMargin - (hi_.y - lo_.y) * scale_)};
  }

  Point map(Point p) const {
    return {kMargin + off_.x + (p.x - lo_.x) * scale_,
            kCanvas - kMargin - off_.y - (p.y - lo_.y) * scale_};
  }

 private:
  Point lo_, hi_, off_;
  double scale_ = 1.0;
};

std::string points_attr(const Frame& f, const Triangle& t) {
  std::string s;
  for (const Point& p : t.vertices()) {
    const Point q = f.map(p);
    if (!s.empty()) s += ' ';
    s += num(q.x) + ',' + num(q.y);
  }
  return s;
}

// Label position pushed away from the input centroid, in canvas coordinates.
Point label_anchor(const Frame& f, Point p, Point centroid) {
  const Point q = f.map(p);
  const Point c = f.map(centroid);
  Point d = q - c;
  const double len = norm(d);
  d = len > 1e-9 ? (1.0 / len) * d : Point{0.0, -1.0};
  return q + 14.0 * d + Point{0.0, 5.0};
}

}  // namespace

std::optional<SvgSelector> selector_from_name(std::string_view s) {
  for (SvgSelector v : {SvgSelector::First, SvgSelector::Second, SvgSelector::Third,
                        SvgSelector::All, SvgSelector::Min}) {
    if (name(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view name(SvgSelector s) {
  switch (s) {
    case SvgSelector::First:
      return "first";
    case SvgSelector::Second:
      return "second";
    case SvgSelector::Third:
      return "third";
    case SvgSelector::All:
      return "all";
    case SvgSelector::Min:
      return "min";
  }
  return "all";
}

SvgFigure render_svg(const CanonicalTriangle& ct, SvgSelector which, const Tolerances& tol) {
  const std::vector<SpecialContainer> drawn =
      ct.is_scalene() ? select(ct, which, tol) : std::vector<SpecialContainer>{};

  std::vector<Point> pts;
  for (const Point& p : ct.tri.vertices()) pts.push_back(p);
  for (const auto& s : drawn) {
    for (const Point& p : s.tri.vertices()) pts.push_back(p);
  }
  const Frame frame(pts);
  const Point centroid = (1.0 / 3.0) * (ct.tri.A + ct.tri.B + ct.tri.C);

  const std::size_t legend_rows = drawn.empty() ? 1 : drawn.size();
  const double height = kCanvas + kLegendLine * static_cast<double>(legend_rows) + 12.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kCanvas) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(kCanvas) + ' ' + num(height) + "\">\n";
  out += "<title>isosceles containers (" + std::string(name(which)) + ") of a=" + num(ct.a) +
         " b=" + num(ct.b) + " c=" + num(ct.c) + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += "<polygon id=\"input\" points=\"" + points_attr(frame, ct.tri) +
         "\" fill=\"#d6e4f0\" stroke=\"#1b2631\" stroke-width=\"1.5\"/>\n";

  const char* dashes[] = {"", "8 4", "2 3"};
  int per_kind[3] = {0, 0, 0};
  for (const auto& s : drawn) {
    const int k = static_cast<int>(s.kind);
    const char* dash = dashes[per_kind[k]++ % 3];
    out += "<g id=\"" + std::string(name(s.variant)) + "\" stroke=\"" + kind_color(s.kind) +
           "\" fill=\"" + kind_color(s.kind) + "\">\n";
    out += "  <polygon points=\"" + points_attr(frame, s.tri) + "\" fill=\"none\" stroke-width=\"1.2\"";
    if (*dash) out += std::string(" stroke-dasharray=\"") + dash + '"';
    out += "/>\n";
    const Point aux = frame.map(s.auxiliary_point());
    out += "  <circle cx=\"" + num(aux.x) + "\" cy=\"" + num(aux.y) + "\" r=\"3\" stroke=\"none\"/>\n";
    const Point at = label_anchor(frame, s.auxiliary_point(), centroid);
    out += "  <text x=\"" + num(at.x) + "\" y=\"" + num(at.y) +
           "\" font-family=\"serif\" font-size=\"15\" text-anchor=\"middle\" stroke=\"none\">" +
           markup_label(auxiliary_label(s.variant)) + "</text>\n";
    out += "</g>\n";
  }

  const char* vertex_names[] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    const Point at = label_anchor(frame, ct.tri.vertex(i), centroid);
    out += "<text x=\"" + num(at.x) + "\" y=\"" + num(at.y) +
           "\" font-family=\"serif\" font-size=\"15\" font-style=\"italic\" text-anchor=\"middle\">" +
           vertex_names[i] + "</text>\n";
  }

  double y = kCanvas;
  if (drawn.empty()) {
    out += "<text x=\"" + num(kMargin) + "\" y=\"" + num(y) +
           "\" font-family=\"monospace\" font-size=\"13\">" +
           (ct.is_scalene() ? std::string("no containers selected")
                            : std::string("isosceles: self-container, ratio 1")) +
           "</text>\n";
  }
  for (const auto& s : drawn) {
    out += "<text x=\"" + num(kMargin) + "\" y=\"" + num(y) + "\" font-family=\"monospace\" font-size=\"13\" fill=\"" +
           kind_color(s.kind) + "\">" + std::string(name(s.variant)) + "  " + std::string(name(s.kind)) +
           " kind  ratio " + num(s.ratio) + "</text>\n";
    y += kLegendLine;
  }
  out += "</svg>\n";
  return {out, static_cast<int>(drawn.size())};
}

}  // namespace isokit::cli
