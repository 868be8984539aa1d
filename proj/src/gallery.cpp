#include "hbcomp/gallery.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hbcomp/opmatrix.hpp"

namespace hbcomp {

namespace {

RatFunc poly(std::vector<cplx> c) { return RatFunc(CPoly(std::move(c))); }

CPoly ppow(const CPoly& p, int n) {
  CPoly r = CPoly::constant(1.0);
  for (int k = 0; k < n; ++k) r = r * p;
  return r;
}

RatFunc blaschke(double r) { return RatFunc::from_ratio(CPoly{-r, 1.0}, CPoly{1.0, -r}); }

std::vector<GalleryCase> build_cases() {
  const double ca = 3 * std::sqrt(3.0) / 16;
  const RatFunc a_cubic = RatFunc(CPoly{-1.0, 1.0} * ppow(CPoly{1.0, 1.0}, 2) * cplx(ca));
  const RatFunc b_half = poly({0.5, 0.5});
  std::vector<GalleryCase> v;

  GalleryCase c;
  c.name = "cubic-a-affine";
  c.tags = "bounded u";
  c.a = a_cubic;
  c.phi = poly({0.5, 0.5});
  c.bounded = Bounded::Yes;
  c.compact = Decision::No;
  c.hilbert_schmidt = Decision::No;
  c.rules = {"R4"};
  c.u = RatFunc(ppow(CPoly{3.0, 1.0}, 2) * cplx(1.0 / 32));
  v.push_back(c);

  c = {};
  c.name = "cubic-a-blaschke";
  c.tags = "bounded compact u";
  c.a = a_cubic;
  c.phi = blaschke(0.5);
  c.bounded = Bounded::Yes;
  c.compact = Decision::No;
  c.hilbert_schmidt = Decision::No;
  c.rules = {"C2"};
  c.u = RatFunc::from_ratio(CPoly{0.75 * 0.5}, ppow(CPoly{1.0, -0.5}, 3));
  v.push_back(c);

  c = {};
  c.name = "cubic-a-square";
  c.tags = "bounded u";
  c.a = a_cubic;
  c.phi = poly({0, 0, 1});
  c.bounded = Bounded::No;
  c.compact = Decision::No;
  c.hilbert_schmidt = Decision::No;
  c.rules = {"R3", "R2"};
  c.u = RatFunc::from_ratio(ppow(CPoly{1.0, 0.0, 1.0}, 2), CPoly{1.0, 1.0});
  v.push_back(c);

  c = {};
  c.name = "hs-quarter";
  c.tags = "hs compact";
  c.b = b_half;
  c.phi = poly({0.5, -0.5});
  c.bounded = Bounded::Yes;
  c.compact = Decision::Yes;
  c.hilbert_schmidt = Decision::Yes;
  c.rules = {"C1"};
  c.hs_value = 0.25;
  v.push_back(c);

  c = {};
  c.name = "hs-divergent";
  c.tags = "hs";
  c.b = poly({0.5, 0, -0.5});
  c.phi = poly({0.5, 0, 0.5});
  c.bounded = Bounded::Yes;
  c.compact = Decision::No;
  c.hilbert_schmidt = Decision::No;
  c.rules = {"R5", "C5"};
  v.push_back(c);

  c = {};
  c.name = "compact-zero-set";
  c.tags = "compact";
  c.b = poly({0.5, 0, 0.5});
  c.phi = poly({0.5, 0, -0.5});
  c.bounded = Bounded::Yes;
  c.compact = Decision::Yes;
  c.rules = {"C3"};
  v.push_back(c);

  c = {};
  c.name = "hs-contact";
  c.tags = "hs compact";
  c.a = a_cubic;
  c.phi = poly({-0.5, -0.5});
  c.bounded = Bounded::Yes;
  c.compact = Decision::Yes;
  c.hilbert_schmidt = Decision::Yes;
  v.push_back(c);

  c = {};
  c.name = "strict-half";
  c.tags = "hs compact";
  c.b = b_half;
  c.phi = poly({0, 0.5});
  c.bounded = Bounded::Yes;
  c.compact = Decision::Yes;
  c.hilbert_schmidt = Decision::Yes;
  c.rules = {"H1"};
  c.hs_value = 5.0 / 12;
  v.push_back(c);

  c = {};
  c.name = "blaschke-local-dirichlet";
  c.tags = "bounded compact";
  c.b = b_half;
  c.phi = blaschke(0.5);
  c.bounded = Bounded::Yes;
  c.compact = Decision::No;
  c.hilbert_schmidt = Decision::No;
  v.push_back(c);

  c = {};
  c.name = "identity";
  c.tags = "bounded";
  c.a = a_cubic;
  c.phi = RatFunc::identity();
  c.bounded = Bounded::Yes;
  c.compact = Decision::No;
  c.hilbert_schmidt = Decision::No;
  c.u = RatFunc::constant(1.0);
  v.push_back(c);

  c = {};
  c.name = "inner-b";
  c.tags = "errors";
  c.b = RatFunc::identity();
  c.phi = poly({0, 0.5});
  c.error = ErrorCode::IsInner;
  v.push_back(c);

  c = {};
  c.name = "not-self-map";
  c.tags = "errors";
  c.b = b_half;
  c.phi = poly({0, 2});
  c.error = ErrorCode::NotASelfMap;
  v.push_back(c);
  return v;
}

bool fired(const Verdict& v, const std::string& id) {
  for (const auto& r : v.fired_rules)
    if (r.id == id) return true;
  return false;
}

std::string run_case(const GalleryCase& c, const Tolerances& tol) {
  std::ostringstream bad;
  try {
    const MateData m = c.b ? pythagorean_mate(*c.b, tol) : mate_from_a(*c.a, tol);
    const Analysis an = analyze(m, c.phi, {}, tol);
    if (c.error) return std::string("expected ") + to_string(*c.error) + ", got a verdict";
    const Verdict& v = an.verdict;
    if (c.bounded && v.bounded != *c.bounded) bad << "bounded " << to_string(v.bounded) << "; ";
    if (c.compact && v.compact != *c.compact) bad << "compact " << to_string(v.compact) << "; ";
    if (c.hilbert_schmidt && v.hilbert_schmidt != *c.hilbert_schmidt)
      bad << "hs " << to_string(v.hilbert_schmidt) << "; ";
    for (const auto& id : c.rules)
      if (!fired(v, id)) bad << id << " did not fire; ";
    if (c.hs_value) {
      const HsFinite* f = v.hs_value ? std::get_if<HsFinite>(&*v.hs_value) : nullptr;
      const double limit = std::max(1e-8, 10 * tol.quad);
      if (!f) bad << "hs integral not finite; ";
      else if (std::abs(f->value - *c.hs_value) > limit) bad << "hs integral " << f->value << "; ";
    }
    if (c.u) {
      if (!an.upack) bad << "u not built; ";
      else if (coeff_distance(an.upack->u, *c.u) > 1e-9) bad << "u differs; ";
    }
    if (v.bounded == Bounded::Yes && an.upack) {
      const double dev = intertwining_defect(m, *an.profile, *an.upack, 16, tol);
      if (!(dev <= 1e-6)) bad << "matrix identity deviation " << dev << "; ";
    }
  } catch (const Error& e) {
    if (c.error && e.code() == *c.error) return "";
    return e.what();
  }
  return bad.str();
}

}  // namespace

const std::vector<GalleryCase>& gallery_cases() {
  static const std::vector<GalleryCase> cases = build_cases();
  return cases;
}

bool gallery_selects(const GalleryCase& c, const std::string& filter) {
  if (filter.empty() || c.name == filter) return true;
  std::istringstream in(c.tags);
  for (std::string t; in >> t;)
    if (t == filter) return true;
  return false;
}

std::vector<GalleryRow> run_gallery(const std::string& filter, const Tolerances& tol) {
  std::vector<GalleryRow> rows;
  for (const auto& c : gallery_cases()) {
    if (!gallery_selects(c, filter)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    GalleryRow r{c.name, c.tags, false, run_case(c, tol), 0.0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = r.detail.empty();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string gallery_table(const std::vector<GalleryRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-26s %-20s %-6s %8s  %s\n", "case", "tags", "result", "seconds", "detail");
  out << line;
  int passed = 0;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-26s %-20s %-6s %8.3f  ", r.name.c_str(), r.tags.c_str(),
                  r.passed ? "PASS" : "FAIL", r.seconds);
    out << line << r.detail << "\n";
    passed += r.passed;
  }
  out << passed << "/" << rows.size() << " passed\n";
  return out.str();
}

}  // namespace hbcomp
