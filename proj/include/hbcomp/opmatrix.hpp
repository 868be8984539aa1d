#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "hbcomp/ubuild.hpp"

namespace hbcomp {

enum class Basis { H2Monomials, HbSplit };
const char* to_string(Basis b);

struct TruncatedOperator {
  Eigen::MatrixXcd matrix;  // entry (m, n) = <T e_n, e_m>
  Basis basis = Basis::H2Monomials;
  int K = 0;
  int N = 0;                    // HbSplit: the first N basis vectors are z^k, k < N
  double sampling_radius = 1.0;
  double alias_estimate = 0.0;  // largest coefficient seen in the top quarter of the spectrum
};

// Taylor coefficients 0..count-1 of f from `nodes` samples at radius * e^{i (2 pi j / nodes + phase)}.
// alias, when given, receives the largest coefficient in the top quarter of the spectrum.
std::vector<cplx> sampled_coefficients(const std::function<cplx(cplx)>& f, int count, int nodes,
                                       double radius = 1.0, double phase = 0.0,
                                       double* alias = nullptr);

// Columns are the coefficients of u phi^n, n < K. Throws PoleOnSamplingCircle.
TruncatedOperator truncate_weighted(const RatFunc& u, const RatFunc& phi, int K);

// C_phi in the basis {z^k : k < N} followed by {a1 z^n : n < K}.
TruncatedOperator hb_cphi_matrix(const MateData& m, const SymbolProfile& s, int K);

// max_n of the H(b) norm of (a1 B z^n) o phi - a1 psi_w phi^n, n < K.
double intertwining_defect(const MateData& m, const SymbolProfile& s, const UPack& up, int K,
                  const Tolerances& tol = {});

double frobenius_sq(const TruncatedOperator& t);
std::vector<double> top_singular_values(const TruncatedOperator& t, int count = 8);

}  // namespace hbcomp
