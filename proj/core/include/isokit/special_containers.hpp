#ifndef ISOKIT_SPECIAL_CONTAINERS_HPP
#define ISOKIT_SPECIAL_CONTAINERS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "isokit/geometry.hpp"
#include "isokit/tolerance.hpp"

namespace isokit {

// The nine isosceles containers that share a side and the angle at one of
// its endpoints with a scalene triangle ABC. Each tag names the auxiliary
// point that replaces one vertex:
//
//   first kind   B' on ray CB, |B'C| = b      C' on ray AC, |AC'| = c
//                C'' on ray BC, |BC''| = c
//   second kind  B1 on ray AB, |B1C| = b      C1 on ray AC, |BC1| = c
//                C2 on ray BC, |AC2| = c      (B1 != A, C1 != A, C2 != B)
//   third kind   Abar, Bbar, Cbar on the perpendicular bisectors of BC, AC,
//                AB intersected with lines AC, BC, BC respectively
enum class ContainerVariant {
  FirstABprimeC,
  FirstABCprime,
  FirstABCdoubleprime,
  SecondAB1C,
  SecondABC1,
  SecondABC2,
  ThirdAbarBC,
  ThirdABbarC,
  ThirdABCbar,
};

enum class ContainerKind { First, Second, Third };

inline constexpr std::array<ContainerVariant, 9> kAllVariants = {
    ContainerVariant::FirstABprimeC, ContainerVariant::FirstABCprime,
    ContainerVariant::FirstABCdoubleprime, ContainerVariant::SecondAB1C,
    ContainerVariant::SecondABC1, ContainerVariant::SecondABC2,
    ContainerVariant::ThirdAbarBC, ContainerVariant::ThirdABbarC,
    ContainerVariant::ThirdABCbar};

ContainerKind kind_of(ContainerVariant v);

// Short ASCII name, e.g. "AB'C", "AB1C", "ABCbar".
std::string_view name(ContainerVariant v);
std::optional<ContainerVariant> variant_from_name(std::string_view s);
std::string_view name(ContainerKind k);

// Index (0 = A, 1 = B, 2 = C) of the vertex that the auxiliary point replaces.
int replaced_vertex(ContainerVariant v);

// Label of the auxiliary point, e.g. "B'", "C1", "Cbar".
std::string_view auxiliary_label(ContainerVariant v);

struct SpecialContainer {
  ContainerVariant variant{};
  ContainerKind kind{};
  // Vertices keep the slots of ABC: the auxiliary point sits in the slot of
  // the vertex it replaces, the two shared vertices are bitwise copies.
  Triangle tri;
  double area = 0.0;
  // area / area(ABC)
  double ratio = 0.0;

  Point auxiliary_point() const { return tri.vertex(replaced_vertex(variant)); }

  friend bool operator==(const SpecialContainer&, const SpecialContainer&) = default;
};

// AB'C, ABC', ABC''. Throws NotScalene.
std::array<SpecialContainer, 3> first_kind(const CanonicalTriangle& ct);

// AB1C, ABC1, ABC2. Throws NotScalene.
std::array<SpecialContainer, 3> second_kind(const CanonicalTriangle& ct);

struct ThirdKindSet {
  // ABCbar always; AbarBC and ABbarC only for acute input.
  std::vector<SpecialContainer> containers;
  // gamma within tol.angle of a right angle; the two optional containers
  // are omitted and their existence is tolerance-sensitive.
  bool near_right_angle = false;
};

// Throws NotScalene.
ThirdKindSet third_kind(const CanonicalTriangle& ct, const Tolerances& tol = {});

// All 7 (non-acute) or 9 (acute) special containers in kAllVariants order.
std::vector<SpecialContainer> all_special_containers(const CanonicalTriangle& ct,
                                                     const Tolerances& tol = {});

// The second-kind container that beats a given third-kind one:
// ABCbar -> AB1C, ABbarC -> ABC1, AbarBC -> ABC2.
ContainerVariant second_kind_partner(ContainerVariant third);

}  // namespace isokit

#endif  // ISOKIT_SPECIAL_CONTAINERS_HPP
