#include "hbcomp/cpoly.hpp"

#include <algorithm>
#include <cmath>

#include "hbcomp/error.hpp"
#include "hbcomp/tolerances.hpp"

namespace hbcomp {

CPoly::CPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

void CPoly::trim() {
  double scale = 1.0;
  for (const auto& c : c_) scale = std::max(scale, std::abs(c));
  const double cut = Tolerances{}.coeff * scale;
  while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
}

CPoly CPoly::monomial(int k, cplx c) {
  std::vector<cplx> v(k + 1, 0.0);
  v[k] = c;
  return CPoly(std::move(v));
}

CPoly CPoly::from_roots(std::span<const cplx> roots, std::span<const int> mult) {
  std::vector<cplx> v{1.0};
  for (size_t i = 0; i < roots.size(); ++i) {
    const int m = mult.empty() ? 1 : mult[i];
    for (int j = 0; j < m; ++j) {
      v.push_back(0.0);
      for (size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - roots[i] * v[k];
      v[0] = -roots[i] * v[0];
    }
  }
  return CPoly(std::move(v));
}

cplx CPoly::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

CPoly CPoly::derivative(int k) const {
  if (degree() < k) return CPoly();
  std::vector<cplx> v(c_.size() - k);
  for (size_t i = k; i < c_.size(); ++i) {
    double f = 1.0;
    for (int j = 0; j < k; ++j) f *= static_cast<double>(i - j);
    v[i - k] = f * c_[i];
  }
  return CPoly(std::move(v));
}

std::vector<cplx> CPoly::taylor_at(cplx z0, int count) const {
  // repeated synthetic division (Taylor shift)
  std::vector<cplx> a = c_;
  std::vector<cplx> out(std::max(count, 0), 0.0);
  const int n = static_cast<int>(a.size());
  for (int k = 0; k < count && k < n; ++k) {
    for (int i = n - 2; i >= k; --i) a[i] += z0 * a[i + 1];
    out[k] = a[k];
  }
  return out;
}

double CPoly::taylor_scale(cplx z0, int k) const {
  const double r = std::abs(z0);
  double s = 0.0;
  for (int i = k; i <= degree(); ++i) {
    double binom = 1.0;
    for (int j = 0; j < k; ++j) binom = binom * (i - j) / (j + 1);
    s += binom * std::abs(c_[i]) * std::pow(r, i - k);
  }
  return s;
}

CPoly CPoly::reversed_conj() const {
  std::vector<cplx> v(c_.rbegin(), c_.rend());
  for (auto& x : v) x = std::conj(x);
  return CPoly(std::move(v));
}

CPoly CPoly::conj_coeffs() const {
  std::vector<cplx> v = c_;
  for (auto& x : v) x = std::conj(x);
  return CPoly(std::move(v));
}

CPoly CPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<cplx> v(k, 0.0);
  v.insert(v.end(), c_.begin(), c_.end());
  return CPoly(std::move(v));
}

CPoly CPoly::compose(const CPoly& q) const {
  CPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + CPoly::constant(*it);
  return acc;
}

double CPoly::norm_inf() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

double CPoly::norm_l2() const {
  double s = 0.0;
  for (const auto& c : c_) s += std::norm(c);
  return std::sqrt(s);
}

CPoly& CPoly::operator+=(const CPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

CPoly& CPoly::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

CPoly operator+(const CPoly& p, const CPoly& q) { CPoly r = p; r += q; return r; }
CPoly operator-(const CPoly& p, const CPoly& q) { CPoly r = p; r -= q; return r; }
CPoly operator-(const CPoly& p) { return p * cplx(-1.0); }
CPoly operator*(const CPoly& p, cplx s) { CPoly r = p; r *= s; return r; }
CPoly operator*(cplx s, const CPoly& p) { return p * s; }

CPoly operator*(const CPoly& p, const CPoly& q) {
  if (p.is_zero() || q.is_zero()) return CPoly();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<cplx> v(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  return CPoly(std::move(v));
}

CPoly pow(const CPoly& p, int n) {
  CPoly r = CPoly::constant(1.0), base = p;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

DivRem divrem(const CPoly& p, const CPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivideByZeroPoly, "divrem by the zero polynomial");
  const int dp = p.degree(), dq = q.degree();
  if (dp < dq) return {CPoly(), p};
  std::vector<cplx> r = p.coeffs();
  std::vector<cplx> quo(dp - dq + 1, 0.0);
  const cplx lead = q.leading();
  for (int k = dp - dq; k >= 0; --k) {
    const cplx t = r[k + dq] / lead;
    quo[k] = t;
    for (int j = 0; j <= dq; ++j) r[k + j] -= t * q[j];
  }
  r.resize(dq);
  // remainder trimming is relative to the dividend's size, not its own
  const double cut = Tolerances{}.coeff * std::max(1.0, p.norm_inf());
  while (!r.empty() && std::abs(r.back()) <= cut) r.pop_back();
  return {CPoly(std::move(quo)), CPoly(std::move(r))};
}

double max_coeff_diff(const CPoly& p, const CPoly& q) {
  double m = 0.0;
  const int d = std::max(p.degree(), q.degree());
  for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(p[k] - q[k]));
  return m;
}

}  // namespace hbcomp
