#include "hbcomp/mate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbcomp/error.hpp"

namespace hbcomp {

using std::numbers::pi;

namespace {

cplx snap_unit(cplx z) {
  z /= std::abs(z);
  double re = z.real(), im = z.imag();
  if (std::abs(re) < 1e-13) re = 0.0;
  if (std::abs(im) < 1e-13) im = 0.0;
  z = cplx(re, im);
  return z / std::abs(z);
}

double angle01(cplx z) {
  const double t = std::arg(z);
  return t < 0 ? t + 2 * pi : t;
}

void sort_zeros(std::vector<BoundaryZero>& zs) {
  std::sort(zs.begin(), zs.end(),
            [](const BoundaryZero& x, const BoundaryZero& y) { return angle01(x.xi) < angle01(y.xi); });
}

CPoly a1_of(const std::vector<BoundaryZero>& zs) {
  std::vector<cplx> r;
  std::vector<int> m;
  for (const auto& z : zs) {
    r.push_back(z.xi);
    m.push_back(z.multiplicity);
  }
  return CPoly::from_roots(r, m);
}

double identity_residual(const RatFunc& a, const RatFunc& b) {
  double worst = 0.0;
  for (int j = 0; j < 256; ++j) {
    const cplx z = std::polar(1.0, 2 * pi * j / 256);
    worst = std::max(worst, std::abs(std::norm(a(z)) + std::norm(b(z)) - 1.0));
  }
  return worst;
}

// Rotate f so that f(0) > 0 (or leave it if f(0) = 0).
RatFunc rotate_positive(const RatFunc& f, bool& rotated) {
  const cplx f0 = f(0.0);
  rotated = false;
  if (std::abs(f0) == 0.0) return f;
  const cplx ph = std::conj(f0) / std::abs(f0);
  if (std::abs(ph - 1.0) > 1e-15) rotated = true;
  return f * ph;
}

void check_analytic_on_closed_disk(const RatFunc& f, const Tolerances& tol, ErrorCode code,
                                   const char* who) {
  for (const auto& p : f.poles())
    if (std::abs(p.location) <= 1.0 + tol.circle)
      throw Error(code, std::string(who) + " has a pole in the closed disk");
}

}  // namespace

double sup_on_circle(const RatFunc& f, int samples) {
  double m = 0.0;
  for (int j = 0; j < samples; ++j) m = std::max(m, std::abs(f(std::polar(1.0, 2 * pi * j / samples))));
  return m;
}

namespace {

using LPoly = std::vector<std::complex<long double>>;

LPoly widen(const CPoly& p) {
  LPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c.real(), c.imag());
  return out;
}

// z^M (A A~ - B B~) in long double; the double version loses the small coefficients to cancellation.
LPoly circle_form_long(const CPoly& A, const CPoly& B) {
  const int M = std::max(A.degree(), B.degree());
  LPoly out(2 * M + 1);
  const auto add = [&](const CPoly& X, long double sign) {
    if (X.is_zero()) return;
    const int shift = M - X.degree();
    for (int i = 0; i <= X.degree(); ++i)
      for (int j = 0; j <= X.degree(); ++j) {
        // (X X~)_{i+d-j} gets X_i conj(X_j)
        const std::complex<long double> xi(X[i].real(), X[i].imag()), xj(X[j].real(), -X[j].imag());
        out[i + X.degree() - j + shift] += sign * xi * xj;
      }
  };
  add(A, 1.0L);
  add(B, -1.0L);
  return out;
}

// A root of multiplicity k is a simple root of P^(k-1); Newton there in long double. Next to a
// high-multiplicity cluster the companion eigenvalues are off by ~1e-7.
cplx refine_root(const LPoly& P, cplx z, int k) {
  using lc = std::complex<long double>;
  LPoly d = P;
  for (int r = 0; r < k - 1; ++r) {
    for (std::size_t j = 1; j < d.size(); ++j) d[j - 1] = d[j] * static_cast<long double>(j);
    if (!d.empty()) d.pop_back();
  }
  if (d.size() < 2) return z;
  lc w(z.real(), z.imag());
  for (int it = 0; it < 10; ++it) {
    lc v = 0, dv = 0;
    for (std::size_t j = d.size(); j-- > 0;) {
      dv = dv * w + v;
      v = v * w + d[j];
    }
    if (std::abs(dv) == 0.0L) break;
    const lc step = v / dv;
    w -= step;
    if (std::abs(step) <= 1e-19L) break;
  }
  const cplx out(static_cast<double>(w.real()), static_cast<double>(w.imag()));
  return std::abs(out - z) <= 1e-4 ? out : z;
}

FejerRiesz fejer_riesz_impl(const CPoly& P, const LPoly& Pl, int M, const Tolerances& tol) {
  FejerRiesz out;
  std::vector<cplx> keep;
  std::vector<int> mult;
  const auto split = split_circle_roots(P, tol);
  for (const auto& c : split.outside) {
    keep.push_back(refine_root(Pl, c.location, c.multiplicity));
    mult.push_back(c.multiplicity);
  }
  for (const auto& c : split.circle) {
    if (c.multiplicity % 2 != 0)
      throw Error(ErrorCode::OddCircleMultiplicity,
                  "circle root of odd multiplicity " + std::to_string(c.multiplicity) +
                      " near arg " + std::to_string(std::arg(c.location)));
    cplx xi = refine_root(Pl, c.location, c.multiplicity);
    xi /= std::abs(xi);
    keep.push_back(xi);
    mult.push_back(c.multiplicity / 2);
    out.circle_zeros.push_back({xi, c.multiplicity / 2});
  }
  sort_zeros(out.circle_zeros);
  out.r = CPoly::from_roots(keep, mult);
  // K from the sample where |r| is largest
  double best = -1.0;
  for (int j = 0; j < 64; ++j) {
    const cplx z = std::polar(1.0, 2 * pi * (j + 0.5) / 64);
    const double rr = std::norm(out.r(z));
    if (rr > best) {
      best = rr;
      out.K = (P(z) * std::pow(z, -M)).real() / rr;
    }
  }
  if (!(out.K > 0.0)) throw Error(ErrorCode::NumericFailure, "Fejer-Riesz constant is not positive");
  return out;
}

}  // namespace

FejerRiesz fejer_riesz(const CPoly& P, int M, const Tolerances& tol) { return fejer_riesz_impl(P, widen(P), M, tol); }

MateData pythagorean_mate(const RatFunc& b, const Tolerances& tol) {
  check_analytic_on_closed_disk(b, tol, ErrorCode::NotASelfMap, "b");
  MateData m;
  m.b = b;
  m.sup_b = sup_on_circle(b);
  if (m.sup_b > 1.0 + 1e-9)
    throw Error(ErrorCode::NotASelfMap, "sup |b| on the circle is " + std::to_string(m.sup_b) + " > 1");

  const CPoly D = b.den();
  const CPoly& Nb = b.num();
  const int M = std::max(D.degree(), Nb.degree());
  const CPoly P = circle_form(D, Nb, 1.0);
  const double scale = std::max((D * D.reversed_conj()).norm_inf(),
                                Nb.is_zero() ? 0.0 : (Nb * Nb.reversed_conj()).norm_inf());
  if (P.norm_inf() <= tol.circle * scale)
    throw Error(ErrorCode::IsInner,
                "1 - |b|^2 vanishes on the circle: b is a finite Blaschke product, which is excluded");

  const auto fr = fejer_riesz_impl(P, circle_form_long(D, Nb), M, tol);
  bool rotated = false;
  m.a = rotate_positive(RatFunc::from_poles(fr.r * std::sqrt(fr.K), b.poles(), tol), rotated);
  m.boundary_zeros = fr.circle_zeros;
  m.a1 = a1_of(m.boundary_zeros);
  for (const auto& z : m.boundary_zeros) m.N += z.multiplicity;
  m.norm_below_one = m.N == 0;
  if (m.sup_b < 1.0 - 1e-6) m.warnings.push_back("norm < 1: H(b) = H^2 case");
  m.identity_residual = identity_residual(m.a, m.b);
  if (m.identity_residual > 1e-6)
    throw Error(ErrorCode::NumericFailure, "pythagorean identity fails after factorization");
  return m;
}

MateData mate_from_a(const RatFunc& a, const Tolerances& tol) {
  if (a.is_zero()) throw Error(ErrorCode::NotOuter, "a is identically zero");
  check_analytic_on_closed_disk(a, tol, ErrorCode::NormExceeded, "a");
  const double sup_a = sup_on_circle(a);
  if (sup_a > 1.0 + 1e-9)
    throw Error(ErrorCode::NormExceeded, "sup |a| on the circle is " + std::to_string(sup_a) + " > 1");

  std::vector<BoundaryZero> zs;
  for (const auto& c : roots(a.num(), tol)) {
    const double r = std::abs(c.location);
    if (r < 1.0 - tol.circle)
      throw Error(ErrorCode::NotOuter, "a vanishes inside the disk (|z| = " + std::to_string(r) + ")");
    if (r <= 1.0 + tol.circle) zs.push_back({snap_unit(c.location), c.multiplicity});
  }
  sort_zeros(zs);

  MateData m;
  bool rotated = false;
  m.a = rotate_positive(a, rotated);
  if (rotated) m.warnings.push_back("a multiplied by a unimodular constant so that a(0) > 0");

  const CPoly D = a.den();
  const CPoly& A = m.a.num();
  const int M = std::max(D.degree(), A.degree());
  const CPoly P = circle_form(D, A, 1.0);
  const double scale = (D * D.reversed_conj()).norm_inf();
  if (P.norm_inf() <= tol.circle * scale) {
    m.b = RatFunc();  // |a| = 1 on the circle
  } else {
    const auto fr = fejer_riesz_impl(P, circle_form_long(D, A), M, tol);
    bool rb = false;
    m.b = rotate_positive(RatFunc::from_poles(fr.r * std::sqrt(fr.K), a.poles(), tol), rb);
  }
  m.sup_b = sup_on_circle(m.b);
  m.boundary_zeros = zs;
  m.a1 = a1_of(zs);
  for (const auto& z : zs) m.N += z.multiplicity;
  m.norm_below_one = m.N == 0;
  if (m.norm_below_one) m.warnings.push_back("norm < 1: H(b) = H^2 case");
  m.identity_residual = identity_residual(m.a, m.b);
  if (m.identity_residual > 1e-6)
    throw Error(ErrorCode::NumericFailure, "pythagorean identity fails after factorization");
  return m;
}

}  // namespace hbcomp
