#include "isokit/special_containers.hpp"

#include <numbers>

#include "isokit/error.hpp"

namespace isokit {

ContainerKind kind_of(ContainerVariant v) {
  switch (v) {
    case ContainerVariant::FirstABprimeC:
    case ContainerVariant::FirstABCprime:
    case ContainerVariant::FirstABCdoubleprime:
      return ContainerKind::First;
    case ContainerVariant::SecondAB1C:
    case ContainerVariant::SecondABC1:
    case ContainerVariant::SecondABC2:
      return ContainerKind::Second;
    default:
      return ContainerKind::Third;
  }
}

std::string_view name(ContainerVariant v) {
  switch (v) {
    case ContainerVariant::FirstABprimeC: return "AB'C";
    case ContainerVariant::FirstABCprime: return "ABC'";
    case ContainerVariant::FirstABCdoubleprime: return "ABC''";
    case ContainerVariant::SecondAB1C: return "AB1C";
    case ContainerVariant::SecondABC1: return "ABC1";
    case ContainerVariant::SecondABC2: return "ABC2";
    case ContainerVariant::ThirdAbarBC: return "AbarBC";
    case ContainerVariant::ThirdABbarC: return "ABbarC";
    case ContainerVariant::ThirdABCbar: return "ABCbar";
  }
  return "?";
}

std::optional<ContainerVariant> variant_from_name(std::string_view s) {
  for (ContainerVariant v : kAllVariants) {
    if (name(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view name(ContainerKind k) {
  switch (k) {
    case ContainerKind::First: return "first";
    case ContainerKind::Second: return "second";
    case ContainerKind::Third: return "third";
  }
  return "?";
}

int replaced_vertex(ContainerVariant v) {
  switch (v) {
    case ContainerVariant::ThirdAbarBC:
      return 0;
    case ContainerVariant::FirstABprimeC:
    case ContainerVariant::SecondAB1C:
    case ContainerVariant::ThirdABbarC:
      return 1;
    default:
      return 2;
  }
}

std::string_view auxiliary_label(ContainerVariant v) {
  switch (v) {
    case ContainerVariant::FirstABprimeC: return "B'";
    case ContainerVariant::FirstABCprime: return "C'";
    case ContainerVariant::FirstABCdoubleprime: return "C''";
    case ContainerVariant::SecondAB1C: return "B1";
    case ContainerVariant::SecondABC1: return "C1";
    case ContainerVariant::SecondABC2: return "C2";
    case ContainerVariant::ThirdAbarBC: return "Abar";
    case ContainerVariant::ThirdABbarC: return "Bbar";
    case ContainerVariant::ThirdABCbar: return "Cbar";
  }
  return "?";
}

ContainerVariant second_kind_partner(ContainerVariant third) {
  switch (third) {
    case ContainerVariant::ThirdABCbar: return ContainerVariant::SecondAB1C;
    case ContainerVariant::ThirdABbarC: return ContainerVariant::SecondABC1;
    case ContainerVariant::ThirdAbarBC: return ContainerVariant::SecondABC2;
    default:
      throw GeometryError(ErrorCode::InvalidArgument,
                          std::string(name(third)) + " is not a third-kind container");
  }
}

namespace {

void require_scalene(const CanonicalTriangle& ct) {
  if (!ct.is_scalene()) {
    throw GeometryError(ErrorCode::NotScalene,
                        "special containers are defined for scalene triangles only");
  }
}

// Replace vertex `slot` of ABC by `aux`.
SpecialContainer make(const CanonicalTriangle& ct, ContainerVariant v, Point aux) {
  SpecialContainer s;
  s.variant = v;
  s.kind = kind_of(v);
  s.tri = ct.tri;
  s.tri.vertex(replaced_vertex(v)) = aux;
  s.area = area(s.tri);
  s.ratio = s.area / ct.area;
  return s;
}

// The point `from + t (to - from)`.
Point along(Point from, Point to, double t) { return from + t * (to - from); }

}  // namespace

std::array<SpecialContainer, 3> first_kind(const CanonicalTriangle& ct) {
  require_scalene(ct);
  const auto& [A, B, C] = ct.tri;
  return {
      make(ct, ContainerVariant::FirstABprimeC, along(C, B, ct.b / ct.a)),
      make(ct, ContainerVariant::FirstABCprime, along(A, C, ct.c / ct.b)),
      make(ct, ContainerVariant::FirstABCdoubleprime, along(B, C, ct.c / ct.a)),
  };
}

std::array<SpecialContainer, 3> second_kind(const CanonicalTriangle& ct) {
  require_scalene(ct);
  const auto& [A, B, C] = ct.tri;
  // Each auxiliary point mirrors a vertex across the foot of the altitude
  // dropped onto the ray it travels along.
  const double t_b1 = 2.0 * dot(C - A, B - A) / dot(B - A, B - A);
  const double t_c1 = 2.0 * dot(B - A, C - A) / dot(C - A, C - A);
  const double t_c2 = 2.0 * dot(A - B, C - B) / dot(C - B, C - B);
  return {
      make(ct, ContainerVariant::SecondAB1C, along(A, B, t_b1)),
      make(ct, ContainerVariant::SecondABC1, along(A, C, t_c1)),
      make(ct, ContainerVariant::SecondABC2, along(B, C, t_c2)),
  };
}

ThirdKindSet third_kind(const CanonicalTriangle& ct, const Tolerances& tol) {
  require_scalene(ct);
  const auto& [A, B, C] = ct.tri;
  const double half_pi = std::numbers::pi / 2.0;

  ThirdKindSet out;
  out.near_right_angle = std::abs(ct.gamma - half_pi) < tol.angle;
  const bool acute = ct.gamma < half_pi - tol.angle;

  if (acute) {
    // Abar on line AC, parametrized from C; |Abar B| = |Abar C|.
    const double t_a = dot(B - C, B - C) / (2.0 * dot(A - C, B - C));
    out.containers.push_back(make(ct, ContainerVariant::ThirdAbarBC, along(C, A, t_a)));
    // Bbar on line BC, parametrized from C; |Bbar A| = |Bbar C|.
    const double t_b = dot(A - C, A - C) / (2.0 * dot(B - C, A - C));
    out.containers.push_back(make(ct, ContainerVariant::ThirdABbarC, along(C, B, t_b)));
  }
  // Cbar on line BC, parametrized from B; |Cbar A| = |Cbar B|.
  const double t_c = dot(A - B, A - B) / (2.0 * dot(C - B, A - B));
  out.containers.push_back(make(ct, ContainerVariant::ThirdABCbar, along(B, C, t_c)));
  return out;
}

std::vector<SpecialContainer> all_special_containers(const CanonicalTriangle& ct,
                                                     const Tolerances& tol) {
  std::vector<SpecialContainer> out;
  out.reserve(9);
  for (const auto& s : first_kind(ct)) out.push_back(s);
  for (const auto& s : second_kind(ct)) out.push_back(s);
  for (const auto& s : third_kind(ct, tol).containers) out.push_back(s);
  return out;
}

}  // namespace isokit
