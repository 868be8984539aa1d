#include "hbcomp/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hbcomp {

using std::numbers::pi;

namespace {

struct Panel {
  double a, b, value, error, l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// Globally adaptive Gauss-Kronrod (31 points) over the given breakpoints:
// the panel with the largest error estimate is bisected until the summed
// error meets rel_tol, hits the rounding floor, or the evaluation budget runs out.
QuadResult global_adaptive(const std::function<double(double)>& g, const std::vector<double>& cuts,
                           double rel_tol, long max_evals = 400000) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  long calls = 0;
  auto make = [&](double a, double b) {
    double err = 0.0, l1 = 0.0;
    auto f = [&](double t) {
      ++calls;
      return g(t);
    };
    const double v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
    return Panel{a, b, v, err, l1};
  };
  std::priority_queue<Panel> heap;
  double value = 0.0, error = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    auto p = make(cuts[i], cuts[i + 1]);
    value += p.value;
    error += p.error;
    l1 += p.l1;
    heap.push(p);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  auto done = [&] { return error <= std::max(rel_tol * std::abs(value), 50 * eps * l1); };
  while (!done() && calls < max_evals && !heap.empty()) {
    const Panel p = heap.top();
    if (p.b - p.a < 1e-15 * std::max(1.0, std::abs(p.a))) break;
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    const auto left = make(p.a, m), right = make(m, p.b);
    value += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    l1 += left.l1 + right.l1 - p.l1;
    heap.push(left);
    heap.push(right);
  }
  // re-sum to shed the drift of the running totals
  value = error = 0.0;
  for (auto h = heap; !h.empty(); h.pop()) {
    value += h.top().value;
    error += h.top().error;
  }
  QuadResult r;
  r.value = value;
  r.error = error;
  r.evaluations = calls;
  r.converged = done();
  return r;
}

}  // namespace

QuadResult interval_integral(const std::function<double(double)>& g, double a, double b,
                             double rel_tol) {
  if (!(b > a)) return {};
  return global_adaptive(g, {a, b}, rel_tol);
}

QuadResult graded_circle_mean(const std::function<double(double)>& g,
                              const std::vector<double>& hot_angles, int depth,
                              double rel_tol) {
  std::vector<double> cuts{0.0, 2 * pi};
  auto wrap = [](double t) {
    t = std::fmod(t, 2 * pi);
    return t < 0 ? t + 2 * pi : t;
  };
  for (double h : hot_angles) {
    cuts.push_back(wrap(h));
    for (int j = 1; j <= depth; ++j) {
      const double w = std::ldexp(1.0, -j);
      cuts.push_back(wrap(h - w));
      cuts.push_back(wrap(h + w));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-15; }),
             cuts.end());
  auto r = global_adaptive(g, cuts, rel_tol);
  r.value /= 2 * pi;
  r.error /= 2 * pi;
  return r;
}

}  // namespace hbcomp
