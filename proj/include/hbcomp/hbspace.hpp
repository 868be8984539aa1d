#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hbcomp/error.hpp"
#include "hbcomp/mate.hpp"

namespace hbcomp {

// r_{i,k}: degree <= N-1, r_{i,k}^{(l)}(xi_j) = [i == j][k == l].
struct HermiteBasis {
  std::vector<std::vector<CPoly>> polys;
  double condition = 1.0;  // inf-norm condition estimate of the confluent Vandermonde matrix
  double residual = 0.0;   // max |V X - I|
};

HermiteBasis hermite_basis(const std::vector<BoundaryZero>& zeros);
inline HermiteBasis hermite_basis(const MateData& m) { return hermite_basis(m.boundary_zeros); }

// f = a1 f_tilde + p_f with deg p_f < N.
struct HbDecomposition {
  RatFunc f;
  RatFunc f_tilde;
  CPoly p_f;
  CPoly a1;  // identifies the space
  double norm_sq = 0.0;
  double division_residual = 0.0;        // relative remainder of (f - p_f) / a1
  double reconstruction_residual = 0.0;  // max |f - a1 f_tilde - p_f| on 128 disk points
};

struct NotInHb {
  enum class Reason { PoleAtBoundaryZero, PoleInClosedDisk };
  cplx witness;
  Reason reason;
};
const char* to_string(NotInHb::Reason r);

using DecomposeResult = std::variant<HbDecomposition, NotInHb>;

DecomposeResult decompose(const RatFunc& f, const MateData& m, const HermiteBasis& basis,
                          const Tolerances& tol = {});
DecomposeResult decompose(const RatFunc& f, const MateData& m, const Tolerances& tol = {});
// Throws NotInHb (with the witness in the message) instead of returning the variant.
HbDecomposition decompose_or_throw(const RatFunc& f, const MateData& m, const HermiteBasis& basis,
                                   const Tolerances& tol = {});

// Hermite interpolant of f at the boundary zeros.
CPoly hermite_interpolant(const RatFunc& f, const std::vector<BoundaryZero>& zeros,
                          const HermiteBasis& basis);

// <f~, g~>_{H^2} + <p_f, p_g>_{H^2}. Throws MateMismatch.
cplx hb_inner(const HbDecomposition& f, const HbDecomposition& g, const Tolerances& tol = {});

struct MultiplierCheck {
  bool multiplier = false;
  ErrorCode reason = ErrorCode::NotBoundedBelow;  // meaningful when !multiplier
  std::string message;
  CPoly p_phi, p_h;
  double min_modulus = 0.0;
  double remainder_norm = 0.0;      // |rem((p_phi p_h - 1), a1)|_inf
  double relative_remainder = 0.0;  // remainder_norm / max(1, |p_phi p_h - 1|_inf)
};

MultiplierCheck multiplier_inverse_check(const RatFunc& phi, const MateData& m,
                                         const Tolerances& tol = {});

}  // namespace hbcomp
