// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "generators.hpp"
#include "hbcomp/error.hpp"
#include "hbcomp/gallery.hpp"
#include "hbcomp/hbspace.hpp"
#include "hbcomp/opmatrix.hpp"
#include "hbcomp/pipeline.hpp"

using namespace hbcomp;
using oracle::cplx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << what << "; ";
    }
  }
};

CPoly P(std::vector<cplx> c) { return CPoly(std::move(c)); }
CPoly ppow(const CPoly& p, int n) {
  CPoly r = P({1});
  for (int k = 0; k < n; ++k) r = r * p;
  return r;
}
RatFunc blaschke(double r) { return RatFunc::from_ratio(P({-r, 1}), P({1, -r})); }

const double ca = 3 * std::sqrt(3.0) / 16;
const MateData& m_cubic() {
  static const MateData m = mate_from_a(RatFunc(P({-1, 1}) * ppow(P({1, 1}), 2) * cplx(ca)));
  return m;
}

bool fired(const Verdict& v, const std::string& id) {
  for (const auto& r : v.fired_rules)
    if (r.id == id) return true;
  return false;
}

// Coefficients of a polynomial-valued RatFunc, normalized by its constant denominator.
std::vector<cplx> poly_coeffs(const RatFunc& f) {
  const CPoly d = f.den();
  std::vector<cplx> c = f.num().coeffs();
  for (auto& x : c) x /= d[0];
  return d.degree() == 0 ? c : std::vector<cplx>{};
}

double coeff_gap(const std::vector<cplx>& got, const std::vector<cplx>& want) {
  if (got.empty()) return HUGE_VAL;
  double g = 0.0;
  for (std::size_t k = 0; k < std::max(got.size(), want.size()); ++k) {
    const cplx x = k < got.size() ? got[k] : 0.0, y = k < want.size() ? want[k] : 0.0;
    g = std::max(g, std::abs(x - y));
  }
  return g;
}

// l-th derivative at z from raw coefficients.
cplx deriv_oracle(const CPoly& p, cplx z, int l) {
  cplx s = 0.0;
  for (int c = l; c <= p.degree(); ++c) {
    double f = 1.0;
    for (int t = 0; t < l; ++t) f *= (c - t);
    s += f * p[c] * std::pow(z, c - l);
  }
  return s;
}

void c1_mate(Outcome& o) {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0.5})));
  const double g = coeff_gap(poly_coeffs(m.a), {0.5, -0.5});
  o.require(g <= 1e-10, "a for (1+z)/2 off by " + std::to_string(g));
  o.require(std::abs(m.a(0.0) - 0.5) <= 1e-10 && m.a(0.0).real() > 0, "a(0) != 1/2");
  const auto m2 = pythagorean_mate(RatFunc(P({0.5, 0, 0.5})));
  const double g2 = coeff_gap(poly_coeffs(m2.a), {0.5, 0, -0.5});
  o.require(g2 <= 1e-10, "a for (1+z^2)/2 off by " + std::to_string(g2));
  const auto m3 = mate_from_a(RatFunc(P({0.5, 0, -0.5})));
  for (int j = 0; j < 256; ++j) {
    const cplx z = oracle::circle_point(j, 256);
    if (std::abs(std::abs(m3.b(z)) - std::abs(0.5 + 0.5 * z * z)) > 1e-10) {
      o.require(false, "|b| from a = (1-z^2)/2 differs from |(1+z^2)/2|");
      break;
    }
  }
}

void c2_u(Outcome& o) {
  struct Case {
    const char* name;
    RatFunc phi, want;
  };
  const double r = 0.5;
  const Case cases[] = {
      {"affine", RatFunc(P({0.5, 0.5})), RatFunc(ppow(P({3, 1}), 2) * cplx(1.0 / 32))},
      {"blaschke", blaschke(r), RatFunc::from_ratio(P({(1 - r * r) * (1 - r)}), ppow(P({1, -r}), 3))},
      {"square", RatFunc(P({0, 0, 1})), RatFunc::from_ratio(ppow(P({1, 0, 1}), 2), P({1, 1}))},
  };
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto up = build_u(profile(c.phi, m_cubic()), m_cubic());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double d = coeff_distance(up.u, c.want);
    o.require(d <= 1e-9, std::string("u for ") + c.name + " off by " + std::to_string(d));
    o.require(secs < 1.0, std::string(c.name) + " took " + std::to_string(secs) + " s");
    // pointwise oracle straight from the formula
    for (int j = 0; j < 16; ++j) {
      const cplx z = 0.6 * oracle::circle_point(j, 16);
      if (std::abs(up.u(z) - c.want(z)) > 1e-12 * std::max(1.0, std::abs(c.want(z)))) {
        o.require(false, std::string("u for ") + c.name + " disagrees pointwise");
        break;
      }
    }
  }
}

void c3_verdicts(Outcome& o) {
  const auto a = analyze(m_cubic(), RatFunc(P({0.5, 0.5}))).verdict;
  o.require(a.bounded == Bounded::Yes, "affine not bounded");
  o.require(fired(a, "R4"), "affine without R4");
  const auto b = analyze(m_cubic(), blaschke(0.5)).verdict;
  o.require(b.bounded == Bounded::Yes, "blaschke not bounded");
  o.require(b.compact == Decision::No && fired(b, "C2"), "blaschke not compact-No via C2");
  const auto c = analyze(m_cubic(), RatFunc(P({0, 0, 1}))).verdict;
  o.require(c.bounded == Bounded::No, "square bounded");
  o.require(fired(c, "R3") && fired(c, "R2"), "square without both R3 and R2");
}

void c4_hs_quarter(Outcome& o) {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0.5})));
  const auto phi = RatFunc(P({0.5, -0.5}));
  const auto an = analyze(m, phi);
  o.require(an.verdict.hilbert_schmidt == Decision::Yes, "HS verdict not yes");
  const auto hs = hs_integral(*an.upack, *an.profile);
  const auto* f = std::get_if<HsFinite>(&hs);
  o.require(f && std::abs(f->value - 0.25) <= 1e-8, "integral not 1/4 within 1e-8");
  const auto J = hs_integrand(*an.upack, *an.profile);
  double worst = 0.0, worst_direct = 0.0;
  for (int j = 0; j < 1024; ++j) {
    const cplx z = oracle::circle_point(j, 1024);
    worst = std::max(worst, std::abs(J(z) - 0.25));
    const double defect = 1.0 - std::norm(phi(z));
    if (defect > 1e-6) worst_direct = std::max(worst_direct, std::abs(std::norm(0.25 + 0.25 * z) / defect - 0.25));
  }
  o.require(worst <= 1e-9, "integrand deviates by " + std::to_string(worst));
  o.require(worst_direct <= 1e-9, "direct |u|^2/(1-|phi|^2) deviates by " + std::to_string(worst_direct));
}

void c5_hs_divergent(Outcome& o) {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0, -0.5})));
  const auto an = analyze(m, RatFunc(P({0.5, 0, 0.5})));
  o.require(an.verdict.bounded == Bounded::Yes, "not bounded");
  o.require(an.verdict.hilbert_schmidt == Decision::No, "HS verdict not no");
  const auto hs = hs_integral(*an.upack, *an.profile);
  const auto* d = std::get_if<HsDivergent>(&hs);
  o.require(d && d->points.size() == 2, "not divergent at two points");
  if (!d) return;
  bool plus = false, minus = false;
  for (const auto& p : d->points) {
    o.require(p.local_order == -2, "local order " + std::to_string(p.local_order));
    plus = plus || std::abs(p.zeta - 1.0) < 1e-9;
    minus = minus || std::abs(p.zeta + 1.0) < 1e-9;
  }
  o.require(plus && minus, "divergence points are not +-1");
}

void c6_compact(Outcome& o) {
  const auto m = pythagorean_mate(RatFunc(P({0.5, 0, 0.5})));
  const auto an = analyze(m, RatFunc(P({0.5, 0, -0.5})), {{12, 32, 8}, true});
  o.require(an.verdict.compact == Decision::Yes, "compact not yes");
  o.require(fired(an.verdict, "C3"), "C3 did not fire");
  if (!an.verdict.scans) {
    o.require(false, "no scan data");
    return;
  }
  // traces are stored direction by direction with increasing r
  const auto& tr = an.verdict.scans->trace;
  int checked = 0;
  for (std::size_t i = 1; i < tr.size(); ++i) {
    if (tr[i].direction != tr[i - 1].direction || tr[i].kind != tr[i - 1].kind) continue;
    const double q0 = -std::log2(1 - tr[i - 1].r), q1 = -std::log2(1 - tr[i].r);
    if (q0 < 4 - 1e-9 || q1 > 12 + 1e-9) continue;
    ++checked;
    if (!(tr[i].I < tr[i - 1].I)) {
      std::ostringstream s;
      s << tr[i].kind << " trace at direction " << tr[i].direction << " rises from q = " << q0;
      o.require(false, s.str());
      return;
    }
  }
  o.require(checked >= 8 * 8, "too few trace steps checked (" + std::to_string(checked) + ")");
}

void c7_hs_contact(Outcome& o) {
  const auto an = analyze(m_cubic(), RatFunc(P({-0.5, -0.5})));
  o.require(an.verdict.hilbert_schmidt == Decision::Yes, "HS verdict not yes");
  o.require(an.profile && !an.profile->contact.empty(), "no contact point");
  bool note = false;
  for (const auto& n : an.verdict.notes) note = note || n.find("not compact on H^2") != std::string::npos;
  o.require(note, "report lacks the H^2 contrast note");
}

void c8_structural(Outcome& o) {
  int bounded = 0;
  for (const auto& c : gallery_cases()) {
    if (c.error) continue;
    const MateData m = c.b ? pythagorean_mate(*c.b) : mate_from_a(*c.a);
    const Analysis an = analyze(m, c.phi);
    if (an.verdict.bounded != Bounded::Yes || !an.upack) continue;
    ++bounded;
    const double dev = intertwining_defect(m, *an.profile, *an.upack, 16);
    o.require(dev <= 1e-6, c.name + ": deviation " + std::to_string(dev));
  }
  o.require(bounded >= 6, "only " + std::to_string(bounded) + " bounded gallery cases");
}

void c9_convergence(Outcome& o) {
  int hs_cases = 0;
  for (const auto& c : gallery_cases()) {
    if (c.error) continue;
    const MateData m = c.b ? pythagorean_mate(*c.b) : mate_from_a(*c.a);
    const Analysis an = analyze(m, c.phi);
    if (an.verdict.hilbert_schmidt != Decision::Yes || !an.upack) continue;
    ++hs_cases;
    const double hs = std::get<HsFinite>(*an.verdict.hs_value).value;
    double prev = 0.0;
    std::ostringstream row;
    row << c.name << ": integral " << hs;
    bool ok = true;
    for (int K : {64, 128, 256}) {
      const double f = frobenius_sq(truncate_weighted(an.upack->u, c.phi, K));
      row << ", K=" << K << " " << f;
      ok = ok && f >= prev;
      prev = f;
    }
    const double rel = std::abs(prev - hs) / hs;
    row << " (gap " << 100 * rel << "%)";
    ok = ok && rel <= 0.02;
    std::printf("    %s\n", row.str().c_str());
    o.require(ok, c.name + " gap " + std::to_string(100 * rel) + "%");
  }
  o.require(hs_cases >= 3, "fewer than three HS gallery cases");
}

void c10_invariants(Outcome& o) {
  std::mt19937 rng(20240);
  std::uniform_real_distribution<double> ang(0.0, 6.283), rad(1.2, 3.0);
  std::uniform_int_distribution<int> gdeg(0, 6);
  int cases = 0;
  double herm = 0, roundtrip = 0, pyth = 0, fr = 0, mult = 0;
  for (int t = 0; t < 220; ++t) {
    const auto a = gen::random_outer(rng);
    const auto m = mate_from_a(a);
    ++cases;
    // Hermite delta conditions
    const auto hb = hermite_basis(m);
    for (std::size_t i = 0; i < m.boundary_zeros.size(); ++i)
      for (int k = 0; k < m.boundary_zeros[i].multiplicity; ++k)
        for (std::size_t j = 0; j < m.boundary_zeros.size(); ++j)
          for (int l = 0; l < m.boundary_zeros[j].multiplicity; ++l) {
            const cplx want = (i == j && k == l) ? 1.0 : 0.0;
            herm = std::max(herm, std::abs(deriv_oracle(hb.polys[i][k], m.boundary_zeros[j].xi, l) - want));
          }
    // decomposition roundtrip f = a1 g + p
    const CPoly g(oracle::random_coeffs(rng, gdeg(rng)));
    const CPoly p = CPoly(oracle::random_coeffs(rng, m.N - 1));
    const auto d = std::get<HbDecomposition>(decompose(RatFunc(m.a1 * g + p), m, hb));
    for (int k = 0; k <= std::max(g.degree(), d.f_tilde.num().degree()); ++k)
      roundtrip = std::max(roundtrip, std::abs(d.f_tilde.num()[k] / d.f_tilde.den()[0] - g[k]));
    for (int k = 0; k < m.N; ++k) roundtrip = std::max(roundtrip, std::abs(d.p_f[k] - p[k]));
    // pythagorean identity on samples
    for (int j = 0; j < 512; ++j) {
      const cplx z = oracle::unit(2 * oracle::pi * (j + 0.37) / 512);
      pyth = std::max(pyth, std::abs(std::norm(m.a(z)) + std::norm(m.b(z)) - 1.0));
    }
    // Fejer-Riesz roundtrip: b -> a again
    const auto back = pythagorean_mate(m.b);
    for (int j = 0; j < 256; ++j) {
      const cplx z = oracle::circle_point(j, 256);
      fr = std::max(fr, std::abs(back.a(z) - m.a(z)));
    }
    // multiplier certificate: p_phi p_h - 1 has vanishing jets at the zeros of a1
    std::vector<cplx> zs{std::polar(rad(rng), ang(rng)), std::polar(rad(rng), ang(rng))};
    const auto phi = RatFunc::from_poles(CPoly::from_roots(zs, {}), {{std::polar(rad(rng), ang(rng)), 1, 0.0}});
    const auto mc = multiplier_inverse_check(phi, m);
    if (!mc.multiplier) {
      mult = HUGE_VAL;
      continue;
    }
    const CPoly q = mc.p_phi * mc.p_h - P({1});
    const double scale = std::max(1.0, q.norm_inf());
    for (const auto& z : m.boundary_zeros)
      for (int l = 0; l < z.multiplicity; ++l)
        mult = std::max(mult, std::abs(deriv_oracle(q, z.xi, l)) / scale);
  }
  std::printf("    %d cases: hermite %.2e, roundtrip %.2e, identity %.2e, fejer-riesz %.2e, multiplier %.2e\n",
              cases, herm, roundtrip, pyth, fr, mult);
  o.require(cases >= 200, "fewer than 200 cases");
  o.require(herm <= 1e-9, "hermite delta conditions");
  o.require(roundtrip <= 1e-8, "decomposition roundtrip");
  o.require(pyth <= 1e-9, "pythagorean identity");
  o.require(fr <= 1e-8, "Fejer-Riesz roundtrip");
  o.require(mult <= 1e-8, "multiplier certificate");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;  // seconds
    std::function<void(Outcome&)> run;
  };
  const Criterion all[] = {
      {1, "mate exactness", 1, c1_mate},
      {2, "u regression", 3, c2_u},
      {3, "verdict regression", 5, c3_verdicts},
      {4, "HS quantitative", 2, c4_hs_quarter},
      {5, "HS divergence", 2, c5_hs_divergent},
      {6, "compactness sufficient", 10, c6_compact},
      {7, "HS contact exhibit", 5, c7_hs_contact},
      {8, "structural identity", 30, c8_structural},
      {9, "HS convergence of truncations", 60, c9_convergence},
      {10, "invariant suites", 60, c10_invariants},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) o.require(false, "over the " + std::to_string(c.budget) + " s budget");
    failed += !o.pass;
    std::printf("criterion %2d %-32s %s  %7.3f s  %s\n", c.id, c.title, o.pass ? "PASS" : "FAIL", secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
