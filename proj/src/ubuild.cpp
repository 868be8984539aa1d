#include "hbcomp/ubuild.hpp"

#include <cmath>

#include "hbcomp/error.hpp"

namespace hbcomp {

namespace {

std::vector<RootCluster> a1_poles(const MateData& m) {
  std::vector<RootCluster> ps;
  for (const auto& z : m.boundary_zeros) ps.push_back({z.xi, z.multiplicity, 0.0});
  return ps;
}

}  // namespace

UPack build_u(const SymbolProfile& s, const MateData& m, const Tolerances& tol) {
  if (s.has_violation())
    throw Error(ErrorCode::NumericFailure, "build_u needs a profile without boundary violations");
  const RatFunc& phi = s.phi;
  const RatFunc over_a1 = RatFunc::from_poles(CPoly::constant(1.0), a1_poles(m), tol);
  UPack up;

  // Factors are multiplied in one at a time starting from 1/a1, so each zero
  // of phi - lambda cancels against a1 while the degrees are still small.
  RatFunc interior = over_a1;
  RatFunc inv_weight = RatFunc::constant(1.0);  // prod (1 - conj(lambda) phi)^{-m}
  std::vector<cplx> lam;
  std::vector<int> lam_m;
  for (int j : s.interior_indices()) {
    const cplx l = s.images[j].value;
    const int mj = m.boundary_zeros[j].multiplicity;
    const RatFunc f = phi - RatFunc::constant(l);
    for (int k = 0; k < mj; ++k) interior = interior * f;
    // invert each factor separately: root-finding the product would meet m-fold roots
    inv_weight = inv_weight * pow(reciprocal(RatFunc::constant(1.0) - std::conj(l) * phi, tol), mj);
    lam.push_back(l);
    lam_m.push_back(mj);
  }

  // a1 o phi = prod (phi - xi_l)^{m_l}, again one factor at a time
  up.u = interior;
  for (const auto& z : m.boundary_zeros) {
    const RatFunc f = phi - RatFunc::constant(z.xi);
    for (int k = 0; k < z.multiplicity; ++k) up.u = up.u * f;
  }

  RatFunc all = over_a1;
  for (size_t j = 0; j < m.boundary_zeros.size(); ++j) {
    const RatFunc f = phi - RatFunc::constant(s.images[j].value);
    for (int k = 0; k < m.boundary_zeros[j].multiplicity; ++k) all = all * f;
  }
  up.psi_quotient = all;

  // B = prod ((z - l) / (1 - conj(l) z))^m
  {
    CPoly num = CPoly::constant(1.0);
    std::vector<RootCluster> ps;
    for (size_t i = 0; i < lam.size(); ++i) {
      num = num * pow(CPoly::linear_root(lam[i]), lam_m[i]);
      if (std::abs(lam[i]) > 0.0) {
        const cplx c = -std::conj(lam[i]);
        for (int k = 0; k < lam_m[i]; ++k) num = num * (1.0 / c);
        ps.push_back({1.0 / std::conj(lam[i]), lam_m[i], 0.0});
      }
    }
    up.B = RatFunc::from_poles(num, ps, tol);
  }
  up.psi_w = up.u * inv_weight;

  const auto mem = h2_membership(up.u, tol);
  up.u_in_H2 = mem.in_h2;
  up.witness_pole = mem.witness_pole;
  for (const auto& p : up.u.poles())
    for (const auto& z : m.boundary_zeros)
      if (std::abs(p.location - z.xi) < tol.cluster) up.retained.push_back({z.xi, p.multiplicity});
  return up;
}

}  // namespace hbcomp
