#pragma once

#include <vector>

#include "hbcomp/cpoly.hpp"
#include "hbcomp/tolerances.hpp"

namespace hbcomp {

struct RootCluster {
  cplx location;
  int multiplicity = 1;
  double residual = 0.0;  // max_k<m |t_k| / scale_k at location
};

// Companion-matrix eigenvalues, grouped into clusters of coincident roots.
// Multiplicities sum to deg p; a constant polynomial has no roots.
std::vector<RootCluster> roots(const CPoly& p, const Tolerances& tol = {});

// Largest k <= max_k such that t_0..t_{k-1} of p at z0 all vanish up to
// rounding and a relative location uncertainty loc_tol of z0.
int multiplicity_at(const CPoly& p, cplx z0, int max_k, double loc_tol = kLocationTol);

// Relative size of the first m Taylor coefficients at z0.
double cluster_residual(const CPoly& p, cplx z0, int m);

// Monic product over clusters.
CPoly poly_from_clusters(const std::vector<RootCluster>& cs);

}  // namespace hbcomp
