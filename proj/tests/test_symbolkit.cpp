#include "doctest.h"
#include "generators.hpp"
#include "hbcomp/error.hpp"
#include "hbcomp/symbolkit.hpp"

using namespace hbcomp;
using oracle::cplx;

namespace {
const cplx I(0.0, 1.0);
CPoly P(std::vector<cplx> c) { return CPoly(std::move(c)); }
const double ca = 3 * std::sqrt(3.0) / 16;
MateData m_cubic() { return mate_from_a(RatFunc(P({-1, 1}) * pow(P({1, 1}), 2) * cplx(ca))); }
RatFunc blaschke(double r) { return RatFunc::from_ratio(P({-r, 1}), P({1, -r})); }
}  // namespace

TEST_CASE("admit_symbol") {
  CHECK(admit_symbol(RatFunc(P({0.5, 0.5}))).self_map);
  const auto two = admit_symbol(RatFunc(P({0, 2})));
  CHECK_FALSE(two.self_map);
  CHECK(std::abs(std::abs(*two.witness) - 1.0) < 1e-12);
  const auto pole = admit_symbol(RatFunc::from_ratio(P({1}), P({-1, 1})));
  CHECK_FALSE(pole.self_map);
  CHECK(std::abs(*pole.witness - 1.0) < 1e-12);
  CHECK(admit_symbol(RatFunc(P({0, 0.5}))).strictly_inside);
  CHECK_FALSE(admit_symbol(RatFunc(P({0.5, 0.5}))).strictly_inside);
  CHECK_FALSE(admit_symbol(RatFunc::identity()).strictly_inside);
  CHECK_FALSE(admit_symbol(RatFunc::constant(I)).self_map);
  CHECK(admit_symbol(RatFunc::constant(0.3)).strictly_inside);
}

TEST_CASE("profile: cubic a data") {
  const auto m = m_cubic();
  REQUIRE(m.boundary_zeros.size() == 2);
  const auto s = profile(RatFunc(P({0.5, 0.5})), m);
  CHECK(std::abs(s.images[0].value - 1.0) < 1e-14);
  CHECK(std::abs(s.images[1].value) < 1e-14);
  CHECK(s.p == 1);
  CHECK(s.images[0].kind == ImageKind::Boundary);
  CHECK(s.images[0].target == 0);
  CHECK(s.images[1].kind == ImageKind::Interior);
  REQUIRE(s.contact.size() == 1);
  CHECK(std::abs(s.contact[0].zeta - 1.0) < 1e-12);
  CHECK(s.contact[0].half_order == 1);

  const auto t = profile(RatFunc(P({0, 0, 1})), m);
  CHECK(t.p == 2);
  CHECK(t.images[0].target == 0);
  CHECK(t.images[1].target == 0);
  CHECK(t.is_inner);
}

TEST_CASE("profile: final compactness example") {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0, 0.5})));
  const auto s = profile(RatFunc(P({0.5, 0, -0.5})), m);
  CHECK(s.p == 0);
  REQUIRE(s.contact.size() == 2);
  CHECK(std::abs(s.contact[0].zeta - I) < 1e-12);
  CHECK(std::abs(s.contact[1].zeta + I) < 1e-12);
  for (const auto& c : s.contact) CHECK(std::abs(c.image - 1.0) < 1e-12);
}

TEST_CASE("profile: split involution and violation handling") {
  // boundary zeros 1, i, -1, -i ; phi = -z maps 1 -> -1 etc.
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0, 0, 0, 0.5})));
  REQUIRE(m.boundary_zeros.size() == 4);
  const auto s = profile(RatFunc(P({0.3, 0.0, 0.0, 0.0, 0.0, 0.7}) ), m);
  for (int i = 0; i < 4; ++i) CHECK(s.split[s.split[i]] == i);
  for (int k = 0; k < s.p; ++k) CHECK(s.images[s.split[k]].kind != ImageKind::Interior);
  for (int k = s.p; k < 4; ++k) CHECK(s.images[s.split[k]].kind == ImageKind::Interior);

  const auto mh = pythagorean_mate(RatFunc(P({0.5, 0.5})));
  const auto v = profile(RatFunc::constant(-1.0) * RatFunc::identity(), mh);
  CHECK(v.has_violation());
  const auto mix = profile(RatFunc(P({0.25, 0.25, 0.5})), m);  // phi(1) = 1, phi(-1) = 1/2, phi(+-i) = (-1 +- i)/4
  CHECK(mix.p == 1);
  for (int i = 0; i < 4; ++i) CHECK(mix.split[mix.split[i]] == i);
  CHECK(mix.images[mix.split[0]].index == 0);
}

TEST_CASE("profile: ambiguous boundary value") {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0.5})));
  // phi(1) = e^{i 1e-6}: on the circle, 1e-6 away from the zero
  const cplx w = std::polar(1.0, 1e-6);
  const auto phi = RatFunc(P({0, w}));
  CHECK_THROWS_AS(profile(phi, m), Error);
}

TEST_CASE("contact order parity and adc") {
  std::mt19937 rng(12);
  for (int t = 0; t < 60; ++t) {
    // phi = b of a random mate: |phi| = 1 exactly at the circle zeros of a
    const auto m = gen::random_mate(rng);
    const auto phi = m.b;
    const auto s = profile(phi, mate_from_a(RatFunc(P({0.5, -0.5}))));
    REQUIRE(s.contact.size() == m.boundary_zeros.size());
    for (size_t i = 0; i < s.contact.size(); ++i) {
      CHECK(std::abs(s.contact[i].zeta - m.boundary_zeros[i].xi) < 1e-9);
      CHECK(s.contact[i].half_order == m.boundary_zeros[i].multiplicity);
    }
    for (const auto& c : s.contact) {
      const auto one = RatFunc::constant(1.0) - phi * reflect(phi);
      if (!one.is_zero()) CHECK(order_at(one, c.zeta) == 2 * c.half_order);
      const auto adc = adc_data(phi, c.zeta);
      CHECK(std::abs(adc.caratheodory_quotient - std::abs(adc.derivative)) <=
            1e-3 * std::abs(adc.derivative));
    }
  }
  const auto id = adc_data(RatFunc::identity(), 1.0);
  CHECK(std::abs(id.derivative - 1.0) < 1e-14);
  CHECK(std::abs(id.caratheodory_quotient - 1.0) < 1e-6);
  const auto bl = adc_data(blaschke(0.5), 1.0);
  CHECK(std::abs(bl.derivative - 3.0) < 1e-12);
  CHECK(std::abs(bl.caratheodory_quotient - 3.0) < 1e-3 * 3);
  const auto sq = adc_data(RatFunc(P({0, 0, 1})), 1.0);
  CHECK(std::abs(sq.derivative - 2.0) < 1e-14);
  CHECK(std::abs(sq.caratheodory_quotient - 2.0) < 2e-3);
  CHECK_THROWS_AS(adc_data(RatFunc(P({0, 0.5})), 1.0), Error);
}
