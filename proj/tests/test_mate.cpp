#include <random>

#include "doctest.h"
#include "hbcomp/error.hpp"
#include "hbcomp/mate.hpp"
#include "oracles.hpp"

using namespace hbcomp;
using oracle::cplx;

namespace {
const cplx I(0.0, 1.0);
CPoly P(std::vector<cplx> c) { return CPoly(std::move(c)); }

double sup_a_oracle(double c) {
  // |c (z-1)(z+1)^2| at z = e^{it}: 8 c s (1 - s^2) with s = sin(t/2); dense scan
  double m = 0.0;
  for (int j = 0; j <= 200000; ++j) {
    const double s = j / 200000.0;
    m = std::max(m, 8 * c * s * (1 - s * s));
  }
  return m;
}

// Random outer polynomial/rational a with sup |a| = 0.9 and one or two circle zeros.
RatFunc random_outer(std::mt19937& rng) {
  std::uniform_real_distribution<double> ang(0.0, 6.283), rad(1.1, 3.0);
  std::uniform_int_distribution<int> nz(1, 2), nout(0, 3), npole(0, 2), mult(1, 2);
  std::vector<cplx> rs;
  std::vector<int> ms;
  // circle zeros at least 0.5 rad apart (desk-scale gaps)
  std::uniform_real_distribution<double> gap(0.5, 6.283 - 0.5);
  const int k = nz(rng);
  const double t0 = ang(rng);
  for (int i = 0; i < k; ++i) {
    rs.push_back(std::polar(1.0, t0 + (i ? gap(rng) : 0.0)));
    ms.push_back(mult(rng));
  }
  const int o = nout(rng);
  for (int i = 0; i < o; ++i) {
    rs.push_back(std::polar(rad(rng), ang(rng)));
    ms.push_back(1);
  }
  std::vector<RootCluster> poles;
  const int np = npole(rng);
  for (int i = 0; i < np; ++i) poles.push_back({std::polar(rad(rng), ang(rng)), 1, 0.0});
  auto f = RatFunc::from_poles(CPoly::from_roots(rs, ms), poles);
  double s = 0.0;
  for (int j = 0; j < 1 << 14; ++j) s = std::max(s, std::abs(f(oracle::circle_point(j, 1 << 14))));
  return f * cplx(0.9 / s);
}
}  // namespace

TEST_CASE("mate of (1+z)/2") {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0.5})));
  CHECK(coeff_distance(m.a, RatFunc(P({0.5, -0.5}))) <= 1e-10);
  CHECK(m.a(0.0).real() > 0);
  CHECK(std::abs(m.a(0.0) - 0.5) < 1e-12);
  REQUIRE(m.boundary_zeros.size() == 1);
  CHECK(m.boundary_zeros[0].xi == cplx(1.0));
  CHECK(m.boundary_zeros[0].multiplicity == 1);
  CHECK(m.N == 1);
  CHECK(max_coeff_diff(m.a1, P({-1, 1})) == 0.0);
  CHECK(m.identity_residual <= 1e-9);
}

TEST_CASE("mate of (1+z^2)/2 and (1-z^2)/2") {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0, 0.5})));
  CHECK(coeff_distance(m.a, RatFunc(P({0.5, 0, -0.5}))) <= 1e-10);
  REQUIRE(m.boundary_zeros.size() == 2);
  CHECK(std::abs(m.boundary_zeros[0].xi - 1.0) < 1e-14);
  CHECK(std::abs(m.boundary_zeros[1].xi + 1.0) < 1e-14);
  CHECK(m.N == 2);

  const auto n = pythagorean_mate(RatFunc(P({0.5, 0, -0.5})));
  CHECK(coeff_distance(n.a, RatFunc(P({0.5, 0, 0.5}))) <= 1e-10);
  REQUIRE(n.boundary_zeros.size() == 2);
  CHECK(std::abs(n.boundary_zeros[0].xi - I) < 1e-14);
  CHECK(std::abs(n.boundary_zeros[1].xi + I) < 1e-14);
}

TEST_CASE("mate_from_a") {
  const auto m = mate_from_a(RatFunc(P({0.5, -0.5})));
  CHECK(m.identity_residual <= 1e-9);
  for (int j = 0; j < 64; ++j) {
    const cplx z = oracle::circle_point(j, 64);
    CHECK(std::abs(std::norm(m.b(z)) - (1 - std::norm(1.0 - z) / 4)) < 1e-9);
  }
  CHECK(m.b(0.0).real() >= 0);
  CHECK(std::abs(m.b(0.0).imag()) < 1e-14);

  const double c = 3 * std::sqrt(3.0) / 16;
  CHECK(std::abs(sup_a_oracle(c) - 1.0) < 1e-9);
  const auto a = RatFunc(P({-1, 1}) * pow(P({1, 1}), 2) * cplx(c));
  const auto e = mate_from_a(a);
  REQUIRE(e.boundary_zeros.size() == 2);
  CHECK(std::abs(e.boundary_zeros[0].xi - 1.0) < 1e-12);
  CHECK(e.boundary_zeros[0].multiplicity == 1);
  CHECK(std::abs(e.boundary_zeros[1].xi + 1.0) < 1e-12);
  CHECK(e.boundary_zeros[1].multiplicity == 2);
  CHECK(e.N == 3);
  CHECK(e.identity_residual <= 1e-9);
  CHECK(e.a(0.0).real() > 0);  // rotated: c(z-1)(z+1)^2 has value -c at 0
  CHECK(std::abs(e.a(0.0) - c) < 1e-12);

  const auto f = mate_from_a(RatFunc(P({0.5, 0, 0.5})));
  CHECK(coeff_distance(f.b, RatFunc(P({0.5, 0, -0.5}))) < 1e-10);
}

TEST_CASE("mate errors") {
  CHECK_THROWS_AS(pythagorean_mate(RatFunc(P({0, 1}))), Error);
  try {
    pythagorean_mate(RatFunc(P({0, 1})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsInner);
  }
  try {
    pythagorean_mate(RatFunc(P({0, 2})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASelfMap);
  }
  try {
    mate_from_a(RatFunc(P({-0.25, 0.5})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOuter);
  }
  try {
    mate_from_a(RatFunc(P({1, 1})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NormExceeded);
  }
  const auto d = pythagorean_mate(RatFunc(P({0.25, 0.25})));
  CHECK(d.norm_below_one);
  CHECK(d.N == 0);
}

TEST_CASE("Fejer-Riesz roundtrip, random") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_outer(rng);
    const auto m = mate_from_a(a);
    CHECK(m.identity_residual <= 1e-9);
    CHECK(m.a(0.0).real() > 0);
    for (const auto& c : roots(m.b.num())) CHECK(std::abs(c.location) >= 1 - 1e-7);
    const auto back = pythagorean_mate(m.b);
    CHECK(back.identity_residual <= 1e-9);
    CHECK(back.N == m.N);
    double worst = 0.0;
    for (int j = 0; j < 256; ++j) {
      const cplx z = oracle::circle_point(j, 256);
      worst = std::max(worst, std::abs(back.a(z) - m.a(z)));
    }
    CHECK(worst <= 1e-8);
    CHECK(back.a1.degree() == back.N);
    CHECK(back.a1.leading() == cplx(1.0));
  }
}
