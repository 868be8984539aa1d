#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hbcomp/quadrature.hpp"
#include "hbcomp/ubuild.hpp"

namespace hbcomp {

struct GridSpec {
  int depth = 12;            // radii 1 - 2^-q, q = 1..depth
  int uniform_angles = 32;
  int generic_traces = 8;    // radial traces away from contact and image angles
};

struct GridPoint {
  cplx w;
  double I = 0.0;
  bool converged = true;
};

struct TracePoint {
  std::string kind;  // "contact", "image" or "generic"
  double direction = 0.0;
  double r = 0.0;
  double I = 0.0;
  bool converged = true;
};

struct WindowRatio {
  cplx xi;
  double r = 0.0;
  double ratio = 0.0;  // mu(S(xi, r)) / r
};

struct ScanData {
  double carleson_sup = 0.0;
  std::vector<GridPoint> grid;
  std::vector<TracePoint> trace;
  std::vector<WindowRatio> windows;
  int unconverged = 0;
};

// Runs body(i) for i in [0, n) on up to HBCOMP_THREADS worker threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);
int worker_count();

// I(w) = int (1 - |w|^2) |u|^2 / |1 - conj(w) phi|^2 dm.
QuadResult carleson_integral(const RatFunc& u, const RatFunc& phi, cplx w,
                             const std::vector<double>& hot_angles, int depth,
                             const Tolerances& tol = {});

// mu(S(xi, r)) with d mu = |u|^2 dm pushed forward by phi; S(xi, r) = {|z - xi| < r}.
double window_measure(const RatFunc& u, const RatFunc& phi, cplx xi, double r,
                      const std::vector<double>& hot_angles, const Tolerances& tol = {});

// Requires u in H^2.
ScanData carleson_scan(const UPack& up, const SymbolProfile& s, const GridSpec& grid = {},
                       const Tolerances& tol = {});

}  // namespace hbcomp
