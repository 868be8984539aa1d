#pragma once

#include <optional>
#include <vector>

#include "hbcomp/cpoly.hpp"
#include "hbcomp/roots.hpp"
#include "hbcomp/tolerances.hpp"

namespace hbcomp {

// Reduced rational function num / den with den monic. The poles are kept as
// explicit clusters and den is evaluated in factored form.
class RatFunc {
 public:
  RatFunc() = default;  // zero
  RatFunc(CPoly num) : num_(std::move(num)) {}  // NOLINT: polynomials are rational

  static RatFunc constant(cplx c) { return RatFunc(CPoly::constant(c)); }
  static RatFunc identity() { return RatFunc(CPoly{0.0, 1.0}); }
  // num / prod (z - p)^m, reduced.
  static RatFunc from_poles(CPoly num, std::vector<RootCluster> poles, const Tolerances& tol = {});
  // num / den for arbitrary nonzero den (roots of den located numerically), reduced.
  static RatFunc from_ratio(const CPoly& num, const CPoly& den, const Tolerances& tol = {});

  const CPoly& num() const { return num_; }
  CPoly den() const { return poly_from_clusters(poles_); }
  const std::vector<RootCluster>& poles() const { return poles_; }
  int den_degree() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return poles_.empty(); }
  // Constant within coeff tolerance (polynomial of degree <= 0).
  bool is_constant() const { return poles_.empty() && num_.degree() <= 0; }

  cplx operator()(cplx z) const;
  cplx den_at(cplx z) const;
  RatFunc derivative() const;
  // t_k = f^{(k)}(z0)/k!, z0 not a pole.
  std::vector<cplx> taylor_at(cplx z0, int count) const;

 private:
  void reduce(const Tolerances& tol);
  CPoly num_;
  std::vector<RootCluster> poles_;
};

RatFunc operator+(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f);
RatFunc operator*(const RatFunc& f, const RatFunc& g);
RatFunc operator*(const RatFunc& f, cplx s);
RatFunc operator*(cplx s, const RatFunc& f);
RatFunc operator/(const RatFunc& f, const RatFunc& g);
RatFunc reciprocal(const RatFunc& f, const Tolerances& tol = {});
RatFunc pow(const RatFunc& f, int n);

// f o phi, with the poles of the result found as roots of N - e D for the poles e of f.
RatFunc compose(const RatFunc& f, const RatFunc& phi, const Tolerances& tol = {});

// g(z) = conj(f(1/conj z)); on the unit circle g = conj f.
RatFunc reflect(const RatFunc& f);

// Vanishing order (>0), 0, or minus the pole order of f at z0. Throws ZeroFunction.
int order_at(const RatFunc& f, cplx z0, const Tolerances& tol = {});

struct H2Membership {
  bool in_h2 = true;
  std::optional<cplx> witness_pole;
};
H2Membership h2_membership(const RatFunc& f, const Tolerances& tol = {});

// (1/2pi) int |f|^2 over the circle. Throws NotInHardy.
double h2_norm_sq(const RatFunc& f, const Tolerances& tol = {});

// z^M (A A~ - s B B~) with M = max(deg A, deg B). On |z| = 1 this equals
// z^M (|A|^2 - s |B|^2).
CPoly circle_form(const CPoly& A, const CPoly& B, double s);

// Roots of a Hermitian-symmetric form P (P = z^deg conj P(1/conj z)) split by
// position relative to the circle. A near-circle cluster (within 1e-4) that
// has no mirror partner at 1/conj(rho) is classified as a circle root and
// snapped to modulus one: off-circle roots of such forms always come in pairs.
struct CircleSplit {
  std::vector<RootCluster> inside, outside, circle;
};
CircleSplit split_circle_roots(const CPoly& P, const Tolerances& tol = {});

// Largest |coefficient difference| after bringing both to a common pole list;
// used by tests to compare reduced functions.
double coeff_distance(const RatFunc& f, const RatFunc& g);

}  // namespace hbcomp
