#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hbcomp {

using cplx = std::complex<double>;

// Dense complex polynomial, ascending coefficients. Trailing coefficients with
// modulus <= 1e-12 * max(1, |coeffs|_inf) are dropped; the zero polynomial has
// no coefficients and degree -1.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<cplx> coeffs);
  CPoly(std::initializer_list<cplx> coeffs) : CPoly(std::vector<cplx>(coeffs)) {}

  static CPoly constant(cplx c) { return CPoly(std::vector<cplx>{c}); }
  static CPoly monomial(int k, cplx c = 1.0);
  // Monic product prod (z - r_i)^{m_i}.
  static CPoly from_roots(std::span<const cplx> roots, std::span<const int> mult);
  static CPoly linear_root(cplx r) { return CPoly{-r, 1.0}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx operator[](int k) const { return (k >= 0 && k <= degree()) ? c_[k] : cplx(0.0); }
  cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }

  cplx operator()(cplx z) const;
  CPoly derivative(int k = 1) const;
  // Taylor coefficients t_k = p^{(k)}(z0)/k!, k < count.
  std::vector<cplx> taylor_at(cplx z0, int count) const;
  // Sum_i binom(i,k) |a_i| |z0|^{i-k}: natural size of t_k, used for relative tests.
  double taylor_scale(cplx z0, int k) const;
  // z^deg * conj(p(1/conj z)).
  CPoly reversed_conj() const;
  CPoly conj_coeffs() const;
  CPoly shifted(int k) const;  // z^k p
  CPoly compose(const CPoly& q) const;

  double norm_inf() const;
  double norm_l2() const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(cplx s);

 private:
  void trim();
  std::vector<cplx> c_;
};

CPoly operator+(const CPoly& p, const CPoly& q);
CPoly operator-(const CPoly& p, const CPoly& q);
CPoly operator-(const CPoly& p);
CPoly operator*(const CPoly& p, const CPoly& q);
CPoly operator*(const CPoly& p, cplx s);
CPoly operator*(cplx s, const CPoly& p);
CPoly pow(const CPoly& p, int n);

struct DivRem {
  CPoly quotient;
  CPoly remainder;
};
DivRem divrem(const CPoly& p, const CPoly& q);

// Largest coefficient difference.
double max_coeff_diff(const CPoly& p, const CPoly& q);

}  // namespace hbcomp
