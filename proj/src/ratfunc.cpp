#include "hbcomp/ratfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hbcomp/error.hpp"
#include "hbcomp/quadrature.hpp"

namespace hbcomp {

namespace {

// Merge clusters whose locations agree to cluster_tol, summing multiplicities.
std::vector<RootCluster> merge_poles(std::vector<RootCluster> ps, double cluster_tol) {
  std::vector<RootCluster> out;
  for (auto& p : ps) {
    if (p.multiplicity <= 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const RootCluster& q) {
      return std::abs(q.location - p.location) < cluster_tol * std::max(1.0, std::abs(p.location));
    });
    if (it == out.end()) out.push_back(p);
    else it->multiplicity += p.multiplicity;
  }
  return out;
}

int find_pole(const std::vector<RootCluster>& ps, cplx z, double cluster_tol) {
  for (size_t i = 0; i < ps.size(); ++i)
    if (std::abs(ps[i].location - z) < cluster_tol * std::max(1.0, std::abs(z))) return static_cast<int>(i);
  return -1;
}

CPoly linear_power(cplx r, int m) { return pow(CPoly::linear_root(r), m); }

// Divide out of num every pole it vanishes at, lowering the pole orders.
void cancel_against(CPoly& num, std::vector<RootCluster>& poles) {
  for (auto& p : poles) {
    if (num.is_zero()) break;
    const int k = multiplicity_at(num, p.location, p.multiplicity);
    if (k > 0) {
      num = divrem(num, linear_power(p.location, k)).quotient;
      p.multiplicity -= k;
    }
  }
  std::erase_if(poles, [](const RootCluster& p) { return p.multiplicity <= 0; });
}

}  // namespace

RatFunc RatFunc::from_poles(CPoly num, std::vector<RootCluster> poles, const Tolerances& tol) {
  RatFunc f;
  f.num_ = std::move(num);
  if (f.num_.is_zero()) return f;
  f.poles_ = merge_poles(std::move(poles), tol.cluster);
  f.reduce(tol);
  return f;
}

RatFunc RatFunc::from_ratio(const CPoly& num, const CPoly& den, const Tolerances& tol) {
  if (den.is_zero()) throw Error(ErrorCode::DivideByZeroPoly, "rational function with zero denominator");
  return from_poles(num * (1.0 / den.leading()), roots(den, tol), tol);
}

void RatFunc::reduce(const Tolerances& tol) {
  (void)tol;
  cancel_against(num_, poles_);
  if (num_.is_zero()) poles_.clear();
}

int RatFunc::den_degree() const {
  int d = 0;
  for (const auto& p : poles_) d += p.multiplicity;
  return d;
}

cplx RatFunc::den_at(cplx z) const {
  cplx d = 1.0;
  for (const auto& p : poles_) {
    const cplx f = z - p.location;
    for (int j = 0; j < p.multiplicity; ++j) d *= f;
  }
  return d;
}

cplx RatFunc::operator()(cplx z) const {
  const cplx d = den_at(z);
  if (d == cplx(0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
  return num_(z) / d;
}

RatFunc RatFunc::derivative() const {
  if (poles_.empty()) return RatFunc(num_.derivative());
  // D'/D = sum m_i/(z - p_i); with R = prod (z - p_i):
  // f' = (N' R - N sum m_i R/(z - p_i)) / (D R)
  CPoly R = CPoly::constant(1.0);
  for (const auto& p : poles_) R = R * CPoly::linear_root(p.location);
  CPoly s;
  for (size_t i = 0; i < poles_.size(); ++i) {
    CPoly Ri = CPoly::constant(static_cast<double>(poles_[i].multiplicity));
    for (size_t k = 0; k < poles_.size(); ++k)
      if (k != i) Ri = Ri * CPoly::linear_root(poles_[k].location);
    s += Ri;
  }
  auto ps = poles_;
  for (auto& p : ps) p.multiplicity += 1;
  return from_poles(num_.derivative() * R - num_ * s, ps);
}

std::vector<cplx> RatFunc::taylor_at(cplx z0, int count) const {
  const auto n = num_.taylor_at(z0, count);
  const auto d = den().taylor_at(z0, count);
  if (d.empty() || std::abs(d[0]) == 0.0) throw Error(ErrorCode::NotInHb, "Taylor expansion at a pole");
  std::vector<cplx> q(count, 0.0);
  for (int k = 0; k < count; ++k) {
    cplx s = n[k];
    for (int j = 1; j <= k; ++j) s -= d[j] * q[k - j];
    q[k] = s / d[0];
  }
  return q;
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const double ct = Tolerances{}.cluster;
  std::vector<RootCluster> common = f.poles();
  for (const auto& p : g.poles()) {
    const int i = find_pole(common, p.location, ct);
    if (i < 0) common.push_back(p);
    else common[i].multiplicity = std::max(common[i].multiplicity, p.multiplicity);
  }
  auto lift = [&](const RatFunc& h) {
    CPoly n = h.num();
    for (const auto& c : common) {
      const int i = find_pole(h.poles(), c.location, ct);
      const int have = i < 0 ? 0 : h.poles()[i].multiplicity;
      if (c.multiplicity > have) n = n * linear_power(c.location, c.multiplicity - have);
    }
    return n;
  };
  return RatFunc::from_poles(lift(f) + lift(g), common);
}

RatFunc operator-(const RatFunc& f) { return f * cplx(-1.0); }
RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero() || g.is_zero()) return RatFunc();
  // both factors are reduced, so only cross cancellations remain; do them
  // while the numerators are still of low degree
  CPoly fn = f.num(), gn = g.num();
  std::vector<RootCluster> fp = f.poles(), gp = g.poles();
  cancel_against(fn, gp);
  cancel_against(gn, fp);
  fp.insert(fp.end(), gp.begin(), gp.end());
  return RatFunc::from_poles(fn * gn, fp);
}

RatFunc operator*(const RatFunc& f, cplx s) {
  if (s == cplx(0.0)) return RatFunc();
  return RatFunc::from_poles(f.num() * s, f.poles());
}
RatFunc operator*(cplx s, const RatFunc& f) { return f * s; }

RatFunc reciprocal(const RatFunc& f, const Tolerances& tol) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "reciprocal of the zero function");
  return RatFunc::from_poles(f.den() * (1.0 / f.num().leading()), roots(f.num(), tol), tol);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) { return f * reciprocal(g); }

RatFunc pow(const RatFunc& f, int n) {
  if (n < 0) return pow(reciprocal(f), -n);
  if (f.is_zero()) return n == 0 ? RatFunc::constant(1.0) : RatFunc();
  std::vector<RootCluster> ps = f.poles();
  for (auto& p : ps) p.multiplicity *= n;
  return RatFunc::from_poles(pow(f.num(), n), ps);
}

RatFunc compose(const RatFunc& f, const RatFunc& phi, const Tolerances& tol) {
  if (f.is_zero()) return RatFunc();
  const CPoly& N = phi.num();
  const CPoly D = phi.den();
  const CPoly& A = f.num();
  const int alpha = A.degree();
  int beta = 0;
  for (const auto& e : f.poles()) beta += e.multiplicity;

  // sum a_k N^k D^{alpha-k}, Horner in the homogeneous form
  CPoly top;
  {
    std::vector<CPoly> Dp(alpha + 1);
    Dp[0] = CPoly::constant(1.0);
    for (int k = 1; k <= alpha; ++k) Dp[k] = Dp[k - 1] * D;
    CPoly Nk = CPoly::constant(1.0);
    for (int k = 0; k <= alpha; ++k) {
      top += Nk * Dp[alpha - k] * A[k];
      Nk = Nk * N;
    }
  }
  std::vector<RootCluster> poles;
  cplx scale = 1.0;
  for (const auto& e : f.poles()) {
    const CPoly g = N - D * e.location;
    if (g.is_zero()) throw Error(ErrorCode::NumericFailure, "composition lands on a pole identically");
    for (int j = 0; j < e.multiplicity; ++j) scale *= g.leading();
    for (auto c : roots(g, tol)) {
      c.multiplicity *= e.multiplicity;
      poles.push_back(c);
    }
  }
  if (beta >= alpha) {
    top = top * pow(D, beta - alpha);
  } else {
    for (auto c : phi.poles()) {
      c.multiplicity *= (alpha - beta);
      poles.push_back(c);
    }
  }
  return RatFunc::from_poles(top * (1.0 / scale), poles, tol);
}

RatFunc reflect(const RatFunc& f) {
  if (f.is_zero()) return RatFunc();
  const int n = f.num().degree();
  const int d = f.den_degree();
  CPoly nstar = f.num().reversed_conj();
  std::vector<RootCluster> ps;
  cplx scale = 1.0;
  for (const auto& p : f.poles()) {
    if (p.location == cplx(0.0)) continue;
    for (int j = 0; j < p.multiplicity; ++j) scale *= -std::conj(p.location);
    ps.push_back({1.0 / std::conj(p.location), p.multiplicity, p.residual});
  }
  if (d >= n) nstar = nstar.shifted(d - n);
  else ps.push_back({0.0, n - d, 0.0});
  return RatFunc::from_poles(nstar * (1.0 / scale), ps);
}

int order_at(const RatFunc& f, cplx z0, const Tolerances& tol) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "order of the zero function");
  const int i = find_pole(f.poles(), z0, tol.cluster);
  if (i >= 0) return -f.poles()[i].multiplicity;
  return multiplicity_at(f.num(), z0, std::max(f.num().degree(), 0));
}

H2Membership h2_membership(const RatFunc& f, const Tolerances& tol) {
  H2Membership r;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : f.poles()) {
    const double m = std::abs(p.location);
    if (m <= 1.0 + tol.circle && m < best) {
      best = m;
      r.in_h2 = false;
      r.witness_pole = p.location;
    }
  }
  return r;
}

double h2_norm_sq(const RatFunc& f, const Tolerances& tol) {
  const auto mem = h2_membership(f, tol);
  if (!mem.in_h2) throw Error(ErrorCode::NotInHardy, "function has a pole in the closed disk");
  if (f.is_polynomial()) {
    double s = 0.0;
    for (const auto& c : f.num().coeffs()) s += std::norm(c);
    return s;
  }
  return circle_mean([&](cplx z) { return std::norm(f(z)); }, tol.quad).value;
}

CPoly circle_form(const CPoly& A, const CPoly& B, double s) {
  const int M = std::max(A.degree(), B.degree());
  CPoly out;
  if (!A.is_zero()) out += (A * A.reversed_conj()).shifted(M - A.degree());
  if (!B.is_zero() && s != 0.0) out -= (B * B.reversed_conj()).shifted(M - B.degree()) * s;
  return out;
}

CircleSplit split_circle_roots(const CPoly& P, const Tolerances& tol) {
  constexpr double kNearCircle = 1e-4;
  CircleSplit out;
  const auto rs = roots(P, tol);
  for (size_t i = 0; i < rs.size(); ++i) {
    const auto& c = rs[i];
    const double r = std::abs(c.location);
    bool on_circle = std::abs(r - 1.0) <= tol.circle;
    if (!on_circle && std::abs(r - 1.0) <= kNearCircle && r > 0.0) {
      const cplx mirror = 1.0 / std::conj(c.location);
      const double gap = std::abs(mirror - c.location);
      bool partnered = false;
      for (size_t j = 0; j < rs.size(); ++j)
        if (j != i && rs[j].multiplicity == c.multiplicity && std::abs(rs[j].location - mirror) < 0.5 * gap)
          partnered = true;
      on_circle = !partnered;
    }
    if (on_circle) {
      RootCluster u = c;
      u.location /= r;
      double re = u.location.real(), im = u.location.imag();
      if (std::abs(re) < 1e-13) re = 0.0;
      if (std::abs(im) < 1e-13) im = 0.0;
      u.location = cplx(re, im) / std::abs(cplx(re, im));
      out.circle.push_back(u);
    } else if (r < 1.0) {
      out.inside.push_back(c);
    } else {
      out.outside.push_back(c);
    }
  }
  return out;
}

double coeff_distance(const RatFunc& f, const RatFunc& g) {
  return std::max(max_coeff_diff(f.num(), g.num()), max_coeff_diff(f.den(), g.den()));
}

}  // namespace hbcomp
