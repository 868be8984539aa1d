#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace hbcomp {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  long evaluations = 0;
};

// Mean of f(e^{i theta}) over the circle by the trapezoid rule on 2^k nodes,
// doubling k from k_min until successive estimates agree to rel_tol (cap k_max).
template <class F>
QuadResult circle_mean(F&& f, double rel_tol, int k_min = 4, int k_max = 20) {
  using std::numbers::pi;
  long n = 1L << k_min;
  double sum = 0.0;
  for (long j = 0; j < n; ++j) sum += f(std::polar(1.0, 2.0 * pi * j / n));
  double prev = sum / n;
  QuadResult r;
  r.value = prev;
  r.converged = false;
  r.evaluations = n;
  for (int k = k_min + 1; k <= k_max; ++k) {
    // new nodes are the odd ones of the refined grid
    for (long j = 0; j < n; ++j) sum += f(std::polar(1.0, 2.0 * pi * (2 * j + 1) / (2 * n)));
    n *= 2;
    const double cur = sum / n;
    r.value = cur;
    r.evaluations = n;
    if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300)) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

// Integral over [0, 2pi) of g(theta)/(2pi), split into panels that shrink
// geometrically (widths 2^-j, j <= depth) around each singular angle and
// integrated panel-wise with adaptive Gauss-Kronrod.
QuadResult graded_circle_mean(const std::function<double(double)>& g,
                              const std::vector<double>& hot_angles, int depth,
                              double rel_tol);

// Integral of g over [a, b] with adaptive Gauss-Kronrod (no 2pi normalization).
QuadResult interval_integral(const std::function<double(double)>& g, double a, double b,
                             double rel_tol);

}  // namespace hbcomp
