#include "hbcomp/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include <boost/math/tools/roots.hpp>

#include "hbcomp/error.hpp"

namespace hbcomp {

namespace {

using std::numbers::pi;

double wrap(double t) {
  t = std::fmod(t, 2.0 * pi);
  return t < 0 ? t + 2.0 * pi : t;
}

// Smallest distance between two angles on the circle.
double angle_gap(double a, double b) {
  const double d = std::abs(wrap(a - b));
  return std::min(d, 2.0 * pi - d);
}

// Sample angles for locating arc endpoints: uniform plus geometric refinement
// toward the hot angles.
std::vector<double> probe_angles(const std::vector<double>& hot) {
  std::vector<double> t;
  const int n = 4096;
  for (int j = 0; j < n; ++j) t.push_back(2.0 * pi * j / n);
  for (double h : hot) {
    t.push_back(wrap(h));
    for (int j = 1; j <= 30; ++j) {
      for (double f : {1.0, 0.7}) {
        const double d = f * std::ldexp(1.0, -j);
        t.push_back(wrap(h + d));
        t.push_back(wrap(h - d));
      }
    }
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

}  // namespace

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("HBCOMP_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < workers; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
          try {
            body(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

QuadResult carleson_integral(const RatFunc& u, const RatFunc& phi, cplx w,
                             const std::vector<double>& hot_angles, int depth,
                             const Tolerances& tol) {
  const double s = 1.0 - std::norm(w);
  const cplx wc = std::conj(w);
  auto g = [&](double t) {
    const cplx z = std::polar(1.0, t);
    return s * std::norm(u(z)) / std::norm(1.0 - wc * phi(z));
  };
  return graded_circle_mean(g, hot_angles, depth + 2, tol.quad);
}

double window_measure(const RatFunc& u, const RatFunc& phi, cplx xi, double r,
                      const std::vector<double>& hot_angles, const Tolerances& tol) {
  auto h = [&](double t) { return std::abs(phi(std::polar(1.0, t)) - xi) - r; };
  auto density = [&](double t) { return std::norm(u(std::polar(1.0, t))); };
  const auto t = probe_angles(hot_angles);

  std::vector<double> cuts;
  const std::size_t n = t.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double a = t[j];
    const double b = j + 1 < n ? t[j + 1] : t[0] + 2.0 * pi;
    const double ha = h(a), hb = h(b);
    if ((ha < 0) == (hb < 0)) continue;
    auto [lo, hi] = boost::math::tools::bisect(h, a, b, boost::math::tools::eps_tolerance<double>(48));
    cuts.push_back(0.5 * (lo + hi));
  }
  if (cuts.empty()) {
    if (h(0.0) >= 0) return 0.0;
    return interval_integral(density, 0.0, 2.0 * pi, tol.quad).value / (2.0 * pi);
  }
  double mu = 0.0;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const double a = cuts[j];
    const double b = j + 1 < cuts.size() ? cuts[j + 1] : cuts[0] + 2.0 * pi;
    if (h(0.5 * (a + b)) < 0) mu += interval_integral(density, a, b, tol.quad).value;
  }
  return mu / (2.0 * pi);
}

ScanData carleson_scan(const UPack& up, const SymbolProfile& s, const GridSpec& grid,
                       const Tolerances& tol) {
  if (!up.u_in_H2) throw Error(ErrorCode::NotInHardy, "carleson_scan needs u in H^2");
  if (grid.depth < 1 || grid.depth > 30) throw Error(ErrorCode::SchemaError, "grid depth must be in 1..30");

  std::vector<double> hot;
  for (const auto& c : s.contact) hot.push_back(wrap(std::arg(c.zeta)));

  struct Dir {
    std::string kind;
    double angle;
  };
  std::vector<Dir> dirs;
  auto add = [&](const std::string& kind, double a) {
    a = wrap(a);
    for (const auto& d : dirs)
      if (d.kind == kind && angle_gap(d.angle, a) < 1e-12) return;
    dirs.push_back({kind, a});
  };
  for (const auto& c : s.contact) add("contact", std::arg(c.zeta));
  for (const auto& c : s.contact) add("image", std::arg(c.image));
  // generic traces: evenly spread, nudged away from contact and image angles
  std::vector<double> special;
  for (const auto& d : dirs) special.push_back(d.angle);
  for (int k = 0; k < grid.generic_traces; ++k) {
    double a = pi / grid.generic_traces + 2.0 * pi * k / grid.generic_traces;
    for (int tries = 0; tries < 16; ++tries) {
      bool clear = true;
      for (double sp : special) clear = clear && angle_gap(sp, a) > 0.05;
      if (clear) break;
      a += 0.11;
    }
    add("generic", a);
  }
  for (int k = 0; k < grid.uniform_angles; ++k) add("uniform", 2.0 * pi * k / grid.uniform_angles);

  const std::size_t nd = dirs.size(), nq = grid.depth;
  std::vector<GridPoint> pts(nd * nq);
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto& d = dirs[i / nq];
    const int q = static_cast<int>(i % nq) + 1;
    const cplx w = std::polar(1.0 - std::ldexp(1.0, -q), d.angle);
    const auto r = carleson_integral(up.u, s.phi, w, hot, grid.depth, tol);
    pts[i] = {w, std::max(r.value, 0.0), r.converged};
  });

  ScanData out;
  // the uniform and contact directions form the grid; every direction is a grid row
  for (std::size_t k = 0; k < nd; ++k) {
    for (std::size_t q = 0; q < nq; ++q) {
      const auto& p = pts[k * nq + q];
      out.grid.push_back(p);
      out.carleson_sup = std::max(out.carleson_sup, p.I);
      if (!p.converged) ++out.unconverged;
      if (dirs[k].kind != "uniform")
        out.trace.push_back({dirs[k].kind, dirs[k].angle, std::abs(p.w), p.I, p.converged});
    }
  }

  std::vector<cplx> centers;
  for (const auto& c : s.contact) {
    bool dup = false;
    for (auto x : centers) dup = dup || std::abs(x - c.image) < 1e-9;
    if (!dup) centers.push_back(c.image / std::abs(c.image));
  }
  for (int k = 0; k < 8; ++k) centers.push_back(std::polar(1.0, pi / 8 + 2.0 * pi * k / 8));
  const std::size_t nr = std::min(grid.depth, 12);
  out.windows.resize(centers.size() * nr);
  parallel_for(out.windows.size(), [&](std::size_t i) {
    const cplx xi = centers[i / nr];
    const double r = std::ldexp(1.0, -static_cast<int>(i % nr) - 1);
    out.windows[i] = {xi, r, window_measure(up.u, s.phi, xi, r, hot, tol) / r};
  });
  return out;
}

}  // namespace hbcomp
