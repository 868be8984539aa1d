#include "hbcomp/opmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "hbcomp/error.hpp"
#include "hbcomp/hbspace.hpp"
#include "hbcomp/scan.hpp"

namespace hbcomp {

namespace {

using std::numbers::pi;
using Series = std::vector<cplx>;

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// p(s) for a truncated series s.
Series series_compose(const CPoly& p, const Series& s) {
  Series r(s.size(), 0.0);
  for (int k = p.degree(); k >= 0; --k) {
    r = series_mul(r, s);
    r[0] += p[k];
  }
  return r;
}

int pick_nodes(int count) {
  int L = 64;
  while (L < 4 * count) L *= 2;
  return L;
}

// Node phase keeping the sample points as far as possible from the given angles.
double clear_phase(const std::vector<double>& angles, int L) {
  const double h = 2.0 * pi / L;
  double best = 0.0, best_gap = -1.0;
  for (int k = 0; k < 16; ++k) {
    const double ph = h * (k + 0.5) / 16.0;
    double gap = h;
    for (double a : angles) {
      double r = std::fmod(a - ph, h);
      if (r < 0) r += h;
      gap = std::min(gap, std::min(r, h - r));
    }
    if (gap > best_gap) {
      best_gap = gap;
      best = ph;
    }
  }
  return best;
}

}  // namespace

const char* to_string(Basis b) { return b == Basis::H2Monomials ? "H2_monomials" : "Hb_split"; }

std::vector<cplx> sampled_coefficients(const std::function<cplx(cplx)>& f, int count, int nodes,
                                       double radius, double phase, double* alias) {
  std::vector<cplx> vals(nodes), spec;
  for (int j = 0; j < nodes; ++j) vals[j] = f(std::polar(radius, 2.0 * pi * j / nodes + phase));
  Eigen::FFT<double> fft;
  fft.fwd(spec, vals);
  std::vector<cplx> c(count);
  for (int k = 0; k < count; ++k)
    c[k] = spec[k] / static_cast<double>(nodes) * std::polar(std::pow(radius, -k), -k * phase);
  if (alias) {
    *alias = 0.0;
    for (int k = 3 * nodes / 4; k < nodes; ++k) *alias = std::max(*alias, std::abs(spec[k]) / nodes);
  }
  return c;
}

TruncatedOperator truncate_weighted(const RatFunc& u, const RatFunc& phi, int K) {
  if (K < 1 || K > 512) throw Error(ErrorCode::SchemaError, "truncation K must be in 1..512");
  TruncatedOperator t;
  t.basis = Basis::H2Monomials;
  t.K = K;
  // back off the circle only when a pole sits within 1e-6 of it
  double closest = 1e300;
  for (const auto* f : {&u, &phi})
    for (const auto& p : f->poles()) {
      if (std::abs(p.location) <= 1.0) throw Error(ErrorCode::NotInHardy, "pole in the closed disk");
      closest = std::min(closest, std::abs(p.location) - 1.0);
    }
  if (closest < 1e-6) t.sampling_radius = 1.0 - std::ldexp(1.0, -12);
  for (const auto* f : {&u, &phi})
    for (const auto& p : f->poles())
      if (std::abs(std::abs(p.location) - t.sampling_radius) < 1e-12)
        throw Error(ErrorCode::PoleOnSamplingCircle, "pole on the sampling circle");

  const int L = pick_nodes(K);
  std::vector<cplx> uz(L), pz(L);
  for (int j = 0; j < L; ++j) {
    const cplx z = std::polar(t.sampling_radius, 2.0 * pi * j / L);
    uz[j] = u(z);
    pz[j] = phi(z);
  }
  t.matrix.resize(K, K);
  Eigen::FFT<double> fft;
  std::vector<cplx> vals = uz, spec;
  for (int n = 0; n < K; ++n) {
    fft.fwd(spec, vals);
    for (int k = 0; k < K; ++k) t.matrix(k, n) = spec[k] / static_cast<double>(L) * std::pow(t.sampling_radius, -k);
    for (int k = 3 * L / 4; k < L; ++k) t.alias_estimate = std::max(t.alias_estimate, std::abs(spec[k]) / L);
    for (int j = 0; j < L; ++j) vals[j] *= pz[j];
  }
  return t;
}

TruncatedOperator hb_cphi_matrix(const MateData& m, const SymbolProfile& s, int K) {
  if (K < 1 || K > 512) throw Error(ErrorCode::SchemaError, "truncation K must be in 1..512");
  const RatFunc& phi = s.phi;
  const int N = m.N;
  const auto basis = hermite_basis(m);
  TruncatedOperator t;
  t.basis = Basis::HbSplit;
  t.K = K;
  t.N = N;
  t.matrix = Eigen::MatrixXcd::Zero(N + K, N + K);

  // Taylor data of phi at each boundary zero
  std::vector<Series> phis;
  for (const auto& z : m.boundary_zeros) phis.push_back(phi.taylor_at(z.xi, z.multiplicity));
  std::vector<double> angles;
  for (const auto& z : m.boundary_zeros) angles.push_back(std::arg(z.xi));
  const int L = pick_nodes(N + K);
  const double phase = clear_phase(angles, L);
  std::vector<double> aliases(N + K, 0.0);

  // column for g o phi, where g is given by its value map and its action on series
  auto column = [&](int col, const std::function<cplx(cplx)>& g, const std::function<Series(const Series&)>& gs) {
    CPoly pf;
    for (std::size_t j = 0; j < m.boundary_zeros.size(); ++j) {
      const Series t_j = gs(phis[j]);
      double fact = 1.0;
      for (int k = 0; k < m.boundary_zeros[j].multiplicity; ++k) {
        if (k > 0) fact *= k;
        pf += basis.polys[j][k] * (t_j[k] * fact);
      }
    }
    for (int k = 0; k < N; ++k) t.matrix(k, col) = pf[k];
    auto ft = [&](cplx z) { return (g(phi(z)) - pf(z)) / m.a1(z); };
    double alias = 0.0;
    const auto c = sampled_coefficients(ft, K, L, 1.0, phase, &alias);
    for (int n = 0; n < K; ++n) t.matrix(N + n, col) = c[n];
    aliases[col] = alias;
  };

  parallel_for(static_cast<std::size_t>(N + K), [&](std::size_t idx) {
    const int col = static_cast<int>(idx);
    if (col < N) {
      column(col, [col](cplx w) { return std::pow(w, col); },
             [col](const Series& x) {
               Series r(x.size(), 0.0);
               r[0] = 1.0;
               for (int i = 0; i < col; ++i) r = series_mul(r, x);
               return r;
             });
    } else {
      const int n = col - N;
      column(col, [&, n](cplx w) { return m.a1(w) * std::pow(w, n); },
             [&, n](const Series& x) {
               Series r = series_compose(m.a1, x);
               for (int i = 0; i < n; ++i) r = series_mul(r, x);
               return r;
             });
    }
  });
  t.alias_estimate = *std::max_element(aliases.begin(), aliases.end());
  return t;
}

double intertwining_defect(const MateData& m, const SymbolProfile& s, const UPack& up, int K, const Tolerances& tol) {
  const auto basis = hermite_basis(m);
  const RatFunc& phi = s.phi;
  RatFunc left = compose(RatFunc(m.a1) * up.B, phi, tol);
  const int L = 4096;
  double worst = 0.0;
  for (int n = 0; n < K; ++n) {
    if (n > 0) left = left * phi;
    const auto d = decompose_or_throw(left, m, basis, tol);
    // right side: V2 W_{psi,phi} z^n = a1 psi_w phi^n, with empty polynomial part
    double diff = 0.0;
    for (int j = 0; j < L; ++j) {
      const cplx z = std::polar(1.0, 2.0 * pi * (j + 0.5) / L);
      diff += std::norm(d.f_tilde(z) - up.psi_w(z) * std::pow(phi(z), n));
    }
    diff /= L;
    for (const auto& c : d.p_f.coeffs()) diff += std::norm(c);
    worst = std::max(worst, std::sqrt(diff));
  }
  return worst;
}

double frobenius_sq(const TruncatedOperator& t) { return t.matrix.squaredNorm(); }

std::vector<double> top_singular_values(const TruncatedOperator& t, int count) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(t.matrix);
  const auto& sv = svd.singularValues();
  std::vector<double> out;
  for (int i = 0; i < std::min<int>(count, sv.size()); ++i) out.push_back(sv[i]);
  return out;
}

}  // namespace hbcomp
