#include "hbcomp/symbolkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbcomp/error.hpp"

namespace hbcomp {

using std::numbers::pi;

namespace {

constexpr double kViolationGap = 1e-4;

double angle01(cplx z) {
  const double t = std::arg(z);
  return t < 0 ? t + 2 * pi : t;
}

struct ContactAnalysis {
  CPoly form;
  bool inner = false;
  std::vector<ContactPoint> points;
};

ContactAnalysis contact_analysis(const RatFunc& phi, const Tolerances& tol) {
  ContactAnalysis out;
  const CPoly D = phi.den();
  const CPoly& N = phi.num();
  out.form = circle_form(D, N, 1.0);
  const double scale = std::max((D * D.reversed_conj()).norm_inf(),
                                N.is_zero() ? 0.0 : (N * N.reversed_conj()).norm_inf());
  if (out.form.norm_inf() <= tol.circle * scale) {
    out.inner = true;
    return out;
  }
  for (const auto& c : split_circle_roots(out.form, tol).circle) {
    if (c.multiplicity % 2 != 0)
      throw Error(ErrorCode::OddCircleMultiplicity,
                  "1 - |phi|^2 changes sign near arg " + std::to_string(std::arg(c.location)));
    out.points.push_back({c.location, c.multiplicity / 2, phi(c.location)});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const ContactPoint& a, const ContactPoint& b) { return angle01(a.zeta) < angle01(b.zeta); });
  return out;
}

}  // namespace

const char* to_string(ImageKind k) {
  switch (k) {
    case ImageKind::Interior: return "interior";
    case ImageKind::Boundary: return "boundary";
    case ImageKind::Violation: return "violation";
  }
  return "?";
}

SelfMapCheck admit_symbol(const RatFunc& phi, const Tolerances& tol) {
  SelfMapCheck r;
  for (const auto& p : phi.poles())
    if (std::abs(p.location) <= 1.0 + tol.circle) {
      r.witness = p.location;
      r.reason = "pole in the closed disk";
      return r;
    }
  double best = -1.0;
  cplx arg_max = 1.0;
  for (int j = 0; j < 4096; ++j) {
    const cplx z = std::polar(1.0, 2 * pi * j / 4096);
    const double v = std::abs(phi(z));
    if (v > best) {
      best = v;
      arg_max = z;
    }
  }
  r.sup_modulus = best;
  if (best > 1.0 + 1e-9) {
    r.witness = arg_max;
    r.reason = "|phi| exceeds 1 on the circle";
    return r;
  }
  if (phi.is_constant() && std::abs(std::abs(phi(0.0)) - 1.0) <= tol.circle) {
    r.witness = phi(0.0);
    r.reason = "unimodular constant does not map the disk into the disk";
    return r;
  }
  r.self_map = true;
  if (best <= 1.0 - 1e-9) {
    const auto ca = contact_analysis(phi, tol);
    r.strictly_inside = !ca.inner && ca.points.empty();
  }
  return r;
}

bool SymbolProfile::has_violation() const {
  return std::any_of(images.begin(), images.end(),
                     [](const BoundaryImage& b) { return b.kind == ImageKind::Violation; });
}

std::vector<int> SymbolProfile::boundary_indices() const {
  return std::vector<int>(split.begin(), split.begin() + p);
}

std::vector<int> SymbolProfile::interior_indices() const {
  return std::vector<int>(split.begin() + p, split.end());
}

SymbolProfile profile(const RatFunc& phi, const MateData& m, const Tolerances& tol) {
  const auto adm = admit_symbol(phi, tol);
  if (!adm.self_map) throw Error(ErrorCode::NotASelfMap, adm.reason);
  SymbolProfile s;
  s.phi = phi;
  s.sup_modulus = adm.sup_modulus;
  s.is_constant = phi.is_constant();
  const int n = static_cast<int>(m.boundary_zeros.size());
  for (int j = 0; j < n; ++j) {
    BoundaryImage bi;
    bi.index = j;
    bi.value = phi(m.boundary_zeros[j].xi);
    if (std::abs(bi.value) >= 1.0 - tol.circle) {
      int best = -1;
      double dist = std::numeric_limits<double>::infinity();
      for (int l = 0; l < n; ++l) {
        const double d = std::abs(bi.value - m.boundary_zeros[l].xi);
        if (d < dist) {
          dist = d;
          best = l;
        }
      }
      if (dist < tol.cluster) {
        bi.kind = ImageKind::Boundary;
        bi.target = best;
      } else if (dist >= kViolationGap) {
        bi.kind = ImageKind::Violation;
      } else {
        throw Error(ErrorCode::AmbiguousBoundaryValue,
                    "phi(xi_" + std::to_string(j) + ") lies " + std::to_string(dist) +
                        " from a boundary zero of a: neither a match nor clearly separated");
      }
    }
    s.images.push_back(bi);
  }
  // partition by transpositions
  s.split.resize(n);
  for (int j = 0; j < n; ++j) s.split[j] = j;
  int lo = 0, hi = n - 1;
  auto boundaryish = [&](int j) { return s.images[j].kind != ImageKind::Interior; };
  while (true) {
    while (lo < n && boundaryish(lo)) ++lo;
    while (hi >= 0 && !boundaryish(hi)) --hi;
    if (lo >= hi) break;
    std::swap(s.split[lo], s.split[hi]);
    ++lo;
    --hi;
  }
  s.p = static_cast<int>(std::count_if(s.images.begin(), s.images.end(),
                                       [&](const BoundaryImage& b) { return b.kind != ImageKind::Interior; }));

  const auto ca = contact_analysis(phi, tol);
  s.contact_form = ca.form;
  s.is_inner = ca.inner;
  s.contact = ca.points;
  s.strictly_inside = adm.strictly_inside;
  return s;
}

AdcData adc_data(const RatFunc& phi, cplx zeta, const Tolerances& tol) {
  if (std::abs(phi(zeta)) < 1.0 - tol.circle)
    throw Error(ErrorCode::NotContactPoint, "|phi(zeta)| < 1");
  AdcData d;
  d.derivative = phi.derivative()(zeta);
  const double r = 1.0 - 1e-6;
  d.caratheodory_quotient = (1.0 - std::abs(phi(r * zeta))) / (1.0 - r);
  return d;
}

}  // namespace hbcomp
