#ifndef ISOKIT_TOLERANCE_HPP
#define ISOKIT_TOLERANCE_HPP

namespace isokit {

// Numerical slack used by every predicate in the library. Passed explicitly;
// there is no global tolerance state.
struct Tolerances {
  // Degeneracy / containment slack on signed areas, relative to the squared
  // bounding-box diagonal of the triangle under test.
  double area_rel = 1e-12;
  // Relative slack when deciding whether two side lengths are equal.
  double len_rel = 1e-9;
  // Absolute slack on angles, radians.
  double angle = 1e-9;
  // Generic relative slack for derived quantities.
  double num_rel = 1e-9;
  // Relative slack when two candidate containers count as tied minimizers.
  double tie_rel = 1e-9;
};

}  // namespace isokit

#endif  // ISOKIT_TOLERANCE_HPP
