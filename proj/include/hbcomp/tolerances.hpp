#pragma once

#include <string>

namespace hbcomp {

struct Tolerances {
  double coeff = 1e-12;    // trailing-coefficient trimming
  double cluster = 1e-7;   // root merging
  double circle = 1e-9;    // "on the unit circle"
  double quad = 1e-10;     // relative quadrature target

  // Set a field by its CLI name (coeff_tol, cluster_tol, circle_tol, quad_tol
  // or the short forms). Throws Error(SchemaError) on an unknown name.
  void set(const std::string& name, double value);
};

// Relative location uncertainty assumed for a point when testing whether it is
// a root of a given multiplicity (matches the default cluster tolerance).
inline constexpr double kLocationTol = 1e-7;

}  // namespace hbcomp
