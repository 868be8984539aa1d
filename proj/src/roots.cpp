#include "hbcomp/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hbcomp {

namespace {

constexpr double kMergeValidation = 1e-10;
constexpr double kLooseRadius = 5e-2;

struct Group {
  std::vector<cplx> members;
  cplx center;
  double residual = 0.0;
};

// Newton on p^{(m-1)}, which has a simple root at an m-fold root of p.
cplx polish(const CPoly& p, cplx z, int m) {
  const CPoly d0 = p.derivative(m - 1);
  const CPoly d1 = d0.derivative();
  cplx best = z;
  double best_val = std::abs(d0(z));
  for (int it = 0; it < 30 && best_val > 0.0; ++it) {
    const cplx dz = d1(z);
    if (dz == cplx(0.0)) break;
    z -= d0(z) / dz;
    const double v = std::abs(d0(z));
    if (!(v < best_val)) {
      if (v > 4 * best_val) break;
      continue;
    }
    best = z;
    best_val = v;
  }
  return best;
}

cplx centroid(const std::vector<cplx>& v) {
  cplx s = 0.0;
  for (const auto& x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::vector<cplx> eigen_roots(const CPoly& p) {
  const int n = p.degree();
  if (n <= 0) return {};
  if (n == 1) return {-p[0] / p[1]};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

// Single-linkage components of the group centers at radius R.
std::vector<std::vector<int>> components(const std::vector<Group>& gs, double R) {
  const int n = static_cast<int>(gs.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double scale = std::max(1.0, std::abs(gs[i].center));
      if (std::abs(gs[i].center - gs[j].center) < R * scale) parent[find(i)] = find(j);
    }
  std::vector<std::vector<int>> comp(n);
  for (int i = 0; i < n; ++i) comp[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& c : comp)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

}  // namespace

double cluster_residual(const CPoly& p, cplx z0, int m) {
  const auto t = p.taylor_at(z0, m);
  double r = 0.0;
  for (int k = 0; k < m; ++k) {
    const double s = p.taylor_scale(z0, k);
    if (s > 0.0) r = std::max(r, std::abs(t[k]) / s);
  }
  return r;
}

int multiplicity_at(const CPoly& p, cplx z0, int max_k, double loc_tol) {
  if (p.is_zero()) return max_k;
  // t_j counts as zero when it is explained by rounding in its evaluation or by
  // moving z0 within its location uncertainty delta (which shifts t_j by about
  // (j+1) t_{j+1} delta).
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double delta = loc_tol * std::max(1.0, std::abs(z0));
  const auto t = p.taylor_at(z0, max_k + 1);
  int k = 0;
  while (k < max_k && k < p.degree()) {
    const double bound = 10.0 * (64.0 * kEps * p.taylor_scale(z0, k) + delta * (k + 1) * std::abs(t[k + 1]));
    if (std::abs(t[k]) > bound) break;
    ++k;
  }
  return k;
}

std::vector<RootCluster> roots(const CPoly& p, const Tolerances& tol) {
  std::vector<RootCluster> out;
  if (p.degree() <= 0) return out;

  // exact zeros at the origin: strip low-order coefficients
  const auto& c = p.coeffs();
  int z0 = 0;
  const double cut = tol.coeff * p.norm_inf();
  while (z0 < p.degree() && std::abs(c[z0]) <= cut) ++z0;
  CPoly q(std::vector<cplx>(c.begin() + z0, c.end()));
  if (z0 > 0) out.push_back({0.0, z0, 0.0});

  std::vector<Group> gs;
  for (const auto& r : eigen_roots(q)) gs.push_back({{r}, polish(q, r, 1), 0.0});

  // Merge ladder: unconditional below cluster_tol, validated above it.
  const double ladder[] = {tol.cluster, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, kLooseRadius};
  for (double R : ladder) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Group> next;
      for (const auto& comp : components(gs, R)) {
        if (comp.size() == 1) {
          next.push_back(gs[comp[0]]);
          continue;
        }
        Group merged;
        for (int i : comp) merged.members.insert(merged.members.end(), gs[i].members.begin(), gs[i].members.end());
        const int m = static_cast<int>(merged.members.size());
        merged.center = polish(q, centroid(merged.members), m);
        merged.residual = cluster_residual(q, merged.center, m);
        if (R <= tol.cluster || merged.residual <= kMergeValidation) {
          next.push_back(std::move(merged));
          changed = true;
        } else {
          for (int i : comp) next.push_back(gs[i]);
        }
      }
      gs = std::move(next);
    }
  }

  for (auto& g : gs) {
    const int m = static_cast<int>(g.members.size());
    out.push_back({g.center, m, m == 1 ? cluster_residual(q, g.center, 1) : g.residual});
  }
  // deterministic order: by modulus, then argument
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    const double ra = std::abs(a.location), rb = std::abs(b.location);
    if (std::abs(ra - rb) > 1e-12) return ra < rb;
    return std::arg(a.location) < std::arg(b.location);
  });
  return out;
}

CPoly poly_from_clusters(const std::vector<RootCluster>& cs) {
  std::vector<cplx> r;
  std::vector<int> m;
  for (const auto& c : cs) {
    r.push_back(c.location);
    m.push_back(c.multiplicity);
  }
  return CPoly::from_roots(r, m);
}

}  // namespace hbcomp
