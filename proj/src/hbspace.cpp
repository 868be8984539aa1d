#include "hbcomp/hbspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "hbcomp/quadrature.hpp"

namespace hbcomp {

using std::numbers::pi;

const char* to_string(NotInHb::Reason r) {
  return r == NotInHb::Reason::PoleAtBoundaryZero ? "PoleAtBoundaryZero" : "PoleInClosedDisk";
}

HermiteBasis hermite_basis(const std::vector<BoundaryZero>& zeros) {
  HermiteBasis hb;
  int N = 0;
  for (const auto& z : zeros) N += z.multiplicity;
  hb.polys.resize(zeros.size());
  if (N == 0) return hb;

  // rows: (j, l) conditions; columns: monomial powers
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(N, N);
  int row = 0;
  for (const auto& z : zeros)
    for (int l = 0; l < z.multiplicity; ++l, ++row)
      for (int c = l; c < N; ++c) {
        double falling = 1.0;
        for (int t = 0; t < l; ++t) falling *= (c - t);
        V(row, c) = falling * std::pow(z.xi, c - l);
      }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(V);
  const Eigen::MatrixXcd X = lu.solve(Eigen::MatrixXcd::Identity(N, N));
  hb.residual = (V * X - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff();
  hb.condition = V.cwiseAbs().rowwise().sum().maxCoeff() * X.cwiseAbs().rowwise().sum().maxCoeff();
  if (hb.residual > 1e-6)
    throw Error(ErrorCode::IllConditioned,
                "confluent Vandermonde solve residual " + std::to_string(hb.residual));
  int col = 0;
  for (size_t i = 0; i < zeros.size(); ++i)
    for (int k = 0; k < zeros[i].multiplicity; ++k, ++col) {
      std::vector<cplx> c(N);
      for (int r = 0; r < N; ++r) c[r] = X(r, col);
      hb.polys[i].push_back(CPoly(std::move(c)));
    }
  return hb;
}

CPoly hermite_interpolant(const RatFunc& f, const std::vector<BoundaryZero>& zeros,
                          const HermiteBasis& basis) {
  CPoly p;
  for (size_t j = 0; j < zeros.size(); ++j) {
    const auto t = f.taylor_at(zeros[j].xi, zeros[j].multiplicity);
    double fact = 1.0;
    for (int k = 0; k < zeros[j].multiplicity; ++k) {
      if (k > 0) fact *= k;
      p += basis.polys[j][k] * (fact * t[k]);
    }
  }
  return p;
}

DecomposeResult decompose(const RatFunc& f, const MateData& m, const HermiteBasis& basis,
                          const Tolerances& tol) {
  for (const auto& p : f.poles()) {
    if (std::abs(p.location) > 1.0 + tol.circle) continue;
    for (const auto& z : m.boundary_zeros)
      if (std::abs(p.location - z.xi) < tol.cluster)
        return NotInHb{p.location, NotInHb::Reason::PoleAtBoundaryZero};
    return NotInHb{p.location, NotInHb::Reason::PoleInClosedDisk};
  }
  HbDecomposition d;
  d.f = f;
  d.a1 = m.a1;
  d.p_f = hermite_interpolant(f, m.boundary_zeros, basis);
  const CPoly top = f.num() - d.p_f * f.den();
  const auto qr = divrem(top, m.a1);
  d.division_residual = qr.remainder.norm_inf() / std::max(1.0, top.norm_inf());
  d.f_tilde = RatFunc::from_poles(qr.quotient, f.poles(), tol);
  d.norm_sq = h2_norm_sq(d.f_tilde, tol) + std::pow(d.p_f.norm_l2(), 2);
  for (int j = 0; j < 128; ++j) {
    const cplx z = std::polar(0.3 + 0.65 * (j % 8) / 7.0, 2 * pi * j / 128 + 0.1);
    const cplx fz = f(z);
    d.reconstruction_residual = std::max(
        d.reconstruction_residual,
        std::abs(fz - m.a1(z) * d.f_tilde(z) - d.p_f(z)) / std::max(1.0, std::abs(fz)));
  }
  return d;
}

DecomposeResult decompose(const RatFunc& f, const MateData& m, const Tolerances& tol) {
  return decompose(f, m, hermite_basis(m), tol);
}

HbDecomposition decompose_or_throw(const RatFunc& f, const MateData& m, const HermiteBasis& basis,
                                   const Tolerances& tol) {
  auto r = decompose(f, m, basis, tol);
  if (const auto* bad = std::get_if<NotInHb>(&r))
    throw Error(ErrorCode::NotInHb, std::string(to_string(bad->reason)) + " at (" +
                                        std::to_string(bad->witness.real()) + ", " +
                                        std::to_string(bad->witness.imag()) + ")");
  return std::get<HbDecomposition>(std::move(r));
}

cplx hb_inner(const HbDecomposition& f, const HbDecomposition& g, const Tolerances& tol) {
  if (max_coeff_diff(f.a1, g.a1) > 1e-10)
    throw Error(ErrorCode::MateMismatch, "decompositions belong to different H(b) spaces");
  cplx s = 0.0;
  for (int k = 0; k <= std::max(f.p_f.degree(), g.p_f.degree()); ++k) s += f.p_f[k] * std::conj(g.p_f[k]);
  const auto& u = f.f_tilde;
  const auto& v = g.f_tilde;
  if (u.is_zero() || v.is_zero()) return s;
  if (u.is_polynomial() && v.is_polynomial()) {
    for (int k = 0; k <= std::max(u.num().degree(), v.num().degree()); ++k)
      s += u.num()[k] * std::conj(v.num()[k]);
    return s;
  }
  const double re = circle_mean([&](cplx z) { return (u(z) * std::conj(v(z))).real(); }, tol.quad).value;
  const double im = circle_mean([&](cplx z) { return (u(z) * std::conj(v(z))).imag(); }, tol.quad).value;
  return s + cplx(re, im);
}

MultiplierCheck multiplier_inverse_check(const RatFunc& phi, const MateData& m, const Tolerances& tol) {
  MultiplierCheck out;
  const auto basis = hermite_basis(m);
  auto dphi = decompose(phi, m, basis, tol);
  if (std::holds_alternative<NotInHb>(dphi)) {
    out.reason = ErrorCode::NotInHb;
    out.message = "phi is not in H(b)";
    return out;
  }
  for (const auto& c : roots(phi.num(), tol))
    if (std::abs(c.location) <= 1.0 + tol.circle) {
      out.reason = ErrorCode::NotBoundedBelow;
      out.message = "phi vanishes in the closed disk";
      return out;
    }
  // zero-free on the closed disk: the minimum modulus sits on the circle
  out.min_modulus = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 4096; ++j)
    out.min_modulus = std::min(out.min_modulus, std::abs(phi(std::polar(1.0, 2 * pi * j / 4096))));
  if (phi.is_zero() || out.min_modulus <= 1e-6) {
    out.reason = ErrorCode::NotBoundedBelow;
    out.message = "min |phi| <= 1e-6";
    return out;
  }
  out.p_phi = std::get<HbDecomposition>(dphi).p_f;
  out.p_h = hermite_interpolant(reciprocal(phi, tol), m.boundary_zeros, basis);
  const CPoly c = out.p_phi * out.p_h - CPoly::constant(1.0);
  out.remainder_norm = divrem(c, m.a1).remainder.norm_inf();
  out.relative_remainder = out.remainder_norm / std::max(1.0, c.norm_inf());
  out.multiplier = out.relative_remainder <= 1e-8;
  if (!out.multiplier) {
    out.reason = ErrorCode::NumericFailure;
    out.message = "a1 does not divide p_phi p_h - 1";
  }
  return out;
}

}  // namespace hbcomp
