#pragma once

#include <string>
#include <vector>

#include "hbcomp/ratfunc.hpp"

namespace hbcomp {

struct BoundaryZero {
  cplx xi;
  int multiplicity = 1;
};

struct MateData {
  RatFunc b;
  RatFunc a;
  CPoly a1;  // prod (z - xi_j)^{m_j}
  std::vector<BoundaryZero> boundary_zeros;  // sorted by argument in [0, 2pi)
  int N = 0;
  bool norm_below_one = false;  // no boundary zeros: H(b) = H^2 as sets
  double sup_b = 0.0;           // sampled max |b| on the circle
  double identity_residual = 0.0;  // max ||a|^2 + |b|^2 - 1| on 256 samples
  std::vector<std::string> warnings;
};

// Mate a of b (outer, a(0) > 0, |a|^2 + |b|^2 = 1 on the circle).
// Throws NotASelfMap, IsInner, OddCircleMultiplicity.
MateData pythagorean_mate(const RatFunc& b, const Tolerances& tol = {});

// b from a with b(0) >= 0; a is rotated so that a(0) > 0.
// Throws NotOuter, NormExceeded, OddCircleMultiplicity.
MateData mate_from_a(const RatFunc& a, const Tolerances& tol = {});

// Sampled sup of |f| on the circle.
double sup_on_circle(const RatFunc& f, int samples = 4096);

// Spectral factor of a nonnegative trigonometric form: given P = z^M L(z) with
// L >= 0 on the circle, returns r (roots with modulus >= 1, circle roots at
// half multiplicity) and K > 0 with L = K |r|^2 on the circle.
struct FejerRiesz {
  CPoly r;
  double K = 0.0;
  std::vector<BoundaryZero> circle_zeros;
};
FejerRiesz fejer_riesz(const CPoly& P, int M, const Tolerances& tol = {});

}  // namespace hbcomp
