#include "doctest.h"
#include "generators.hpp"
#include "hbcomp/ubuild.hpp"

using namespace hbcomp;
using oracle::cplx;

namespace {
CPoly P(std::vector<cplx> c) { return CPoly(std::move(c)); }
const double ca = 3 * std::sqrt(3.0) / 16;
const MateData& m_cubic() {
  static const MateData m = mate_from_a(RatFunc(P({-1, 1}) * pow(P({1, 1}), 2) * cplx(ca)));
  return m;
}
RatFunc blaschke(double r) { return RatFunc::from_ratio(P({-r, 1}), P({1, -r})); }

UPack run(const RatFunc& phi, const MateData& m) { return build_u(profile(phi, m), m); }

// Direct numeric evaluation of the defining formula at z.
cplx u_direct(const RatFunc& phi, const MateData& m, const SymbolProfile& s, cplx z) {
  const cplx w = phi(z);
  cplx v = m.a1(w) / m.a1(z);
  for (int j : s.interior_indices()) v *= std::pow(w - s.images[j].value, m.boundary_zeros[j].multiplicity);
  return v;
}

}  // namespace

TEST_CASE("u for cubic a") {
  const auto ua = run(RatFunc(P({0.5, 0.5})), m_cubic());
  CHECK(coeff_distance(ua.u, RatFunc(pow(P({3, 1}), 2) * (1.0 / 32))) <= 1e-9);
  CHECK(ua.u_in_H2);

  const double r = 0.5;
  const auto ub = run(blaschke(r), m_cubic());
  const auto want_b = RatFunc::from_ratio(P({(1 - r * r) * (1 - r)}), pow(P({1, -r}), 3));
  CHECK(coeff_distance(ub.u, want_b) <= 1e-9);
  CHECK(ub.u_in_H2);

  const auto uc = run(RatFunc(P({0, 0, 1})), m_cubic());
  const auto want_c = RatFunc::from_ratio(pow(P({1, 0, 1}), 2), P({1, 1}));
  CHECK(coeff_distance(uc.u, want_c) <= 1e-9);
  CHECK_FALSE(uc.u_in_H2);
  CHECK(std::abs(*uc.witness_pole + 1.0) < 1e-9);
  REQUIRE(uc.retained.size() == 1);
  CHECK(uc.retained[0].multiplicity == 1);

  const auto id = run(RatFunc::identity(), m_cubic());
  CHECK(coeff_distance(id.u, RatFunc::constant(1.0)) <= 1e-12);
}

TEST_CASE("u conventions p = 0 and p = n") {
  // p = 0: b = (1+z^2)/2, phi = (1-z^2)/2 maps +-1 to 0
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0, 0.5})));
  const auto s = profile(RatFunc(P({0.5, 0, -0.5})), m);
  CHECK(s.p == 0);
  const auto up = build_u(s, m);
  for (int j = 0; j < 16; ++j) {
    const cplx z = 0.7 * oracle::circle_point(j, 16);
    CHECK(std::abs(up.u(z) - u_direct(s.phi, m, s, z)) < 1e-12);
  }
  CHECK(coeff_distance(up.B, RatFunc(P({0, 0, 1}))) < 1e-14);  // lambda = 0 twice
  // p = n: phi = z
  const auto si = profile(RatFunc::identity(), m);
  CHECK(si.p == 2);
  CHECK(build_u(si, m).B.is_constant());
}

TEST_CASE("ubuild invariants, random") {
  std::mt19937 rng(99);
  for (int t = 0; t < 80; ++t) {
    const auto m = gen::random_mate(rng);
    const auto phi = gen::random_symbol(rng, m);
    const auto s = profile(phi, m);
    if (s.has_violation()) continue;
    const auto up = build_u(s, m);
    CHECK(h2_membership(up.psi_quotient).in_h2);
    for (int j = 0; j < 128; ++j) {
      const cplx z = std::polar(0.2 + 0.7 * (j % 5) / 4.0, 0.37 + 2 * oracle::pi * j / 128);
      const cplx direct = u_direct(phi, m, s, z);
      CHECK(std::abs(up.u(z) - direct) <= 1e-8 * std::max(1.0, std::abs(direct)));
      // u = psi39 (a1 o phi) / prod_{j<=p} (phi - phi(xi_j))^{m_j}
      cplx den = 1.0;
      for (int k : s.boundary_indices()) den *= std::pow(phi(z) - s.images[k].value, m.boundary_zeros[k].multiplicity);
      if (std::abs(den) > 1e-6) {
        const cplx alt = up.psi_quotient(z) * m.a1(phi(z)) / den;
        CHECK(std::abs(up.u(z) - alt) <= 1e-7 * std::max(1.0, std::abs(direct)));
      }
      cplx w = up.psi_w(z);
      for (int k : s.interior_indices())
        w *= std::pow(1.0 - std::conj(s.images[k].value) * phi(z), m.boundary_zeros[k].multiplicity);
      CHECK(std::abs(w - up.u(z)) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
    for (int j = 0; j < 128; ++j) CHECK(std::abs(std::abs(up.B(oracle::circle_point(j, 128))) - 1.0) <= 1e-9);
    for (int k : s.interior_indices()) CHECK(std::abs(up.B(s.images[k].value)) < 1e-9);
  }
}
