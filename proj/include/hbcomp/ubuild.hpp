#pragma once

#include <optional>
#include <vector>

#include "hbcomp/symbolkit.hpp"

namespace hbcomp {

struct UPack {
  RatFunc u;           // (a1 o phi) prod_{j>p} (phi - lambda_j)^{m_j} / a1
  RatFunc psi_quotient;  // prod_j ((phi - phi(xi_j)) / (z - xi_j))^{m_j}
  RatFunc B;           // Blaschke product on the interior targets lambda_j
  RatFunc psi_w;       // u / prod_{j>p} (1 - conj(lambda_j) phi)^{m_j}
  bool u_in_H2 = false;
  std::optional<cplx> witness_pole;
  // Boundary zeros at which a1 did not cancel: (xi_j, leftover pole order).
  std::vector<BoundaryZero> retained;
};

// Requires a profile without Violation markers.
UPack build_u(const SymbolProfile& s, const MateData& m, const Tolerances& tol = {});

}  // namespace hbcomp
