#include "hbcomp/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "hbcomp/error.hpp"

namespace hbcomp {

namespace {

using std::numbers::pi;

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  return os.str();
}

FiredRule rule(const std::string& id, std::string evidence) {
  return {id, rule_citation(id), std::move(evidence)};
}

double angle01(cplx z) {
  double t = std::arg(z);
  return t < 0 ? t + 2.0 * pi : t;
}

std::vector<double> contact_angles(const SymbolProfile& s) {
  std::vector<double> hot;
  for (const auto& c : s.contact) hot.push_back(angle01(c.zeta));
  return hot;
}

bool hits_zero_set(cplx v, const MateData& m, const Tolerances& tol) {
  for (const auto& z : m.boundary_zeros)
    if (std::abs(v - z.xi) <= tol.cluster) return true;
  return false;
}

// Order of r = 1 in Q(r) = (1 - |phi(r zeta)|^2) |D(r zeta)|^2, a polynomial in real r.
int radial_order_of_defect(const RatFunc& phi, cplx zeta) {
  const CPoly D = phi.den();
  const CPoly& N = phi.num();
  auto along = [&](const CPoly& p) {
    std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
    cplx zk = 1.0;
    for (auto& x : c) {
      x *= zk;
      zk *= zeta;
    }
    return CPoly(c);
  };
  const CPoly Dz = along(D), Nz = along(N);
  // Taylor coefficients of Q(r) = |Dz(r)|^2 - |Nz(r)|^2 at r = 1, compared
  // against the size of the products they cancel from.
  const int count = 2 * std::max(Dz.degree(), Nz.degree()) + 1;
  const auto d = Dz.taylor_at(1.0, count), n = Nz.taylor_at(1.0, count);
  for (int k = 0; k < count; ++k) {
    cplx t = 0.0;
    double floor = 0.0;
    for (int i = 0; i <= k; ++i) {
      t += d[i] * std::conj(d[k - i]) - n[i] * std::conj(n[k - i]);
      floor += std::abs(d[i]) * std::abs(d[k - i]) + std::abs(n[i]) * std::abs(n[k - i]);
    }
    if (std::abs(t) > 1e-9 * std::max(floor, 1e-300)) return k;
  }
  return count;
}

}  // namespace

const char* to_string(Bounded b) {
  switch (b) {
    case Bounded::Yes: return "yes";
    case Bounded::No: return "no";
    case Bounded::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "?";
}

std::string rule_citation(const std::string& id) {
  static const std::map<std::string, std::string> table = {
      {"R1", "boundedness forces phi(xi_j) to lie in the open disk or in the zero set of a on the circle"},
      {"R2", "boundedness forces m_k <= m_l whenever phi(xi_k) = xi_l"},
      {"R3", "boundedness forces u = (a1 o phi) prod_{j>p} (phi - lambda_j)^{m_j} / a1 into H^2"},
      {"R4", "C_phi is bounded on H(b) iff W_{u,phi} is bounded on H^2; rational u in H^2 is bounded, "
             "so W_{u,phi} is bounded by Littlewood subordination"},
      {"R5", "if limsup |phi| < 1 at every zero of a on the circle then C_phi is bounded"},
      {"H1", "|phi|_inf < 1 with phi analytic on the closed disk gives a Hilbert-Schmidt operator"},
      {"H2", "C_phi is Hilbert-Schmidt iff int |u|^2 / (1 - |phi|^2) dm < inf; the integrand is "
             "infinite everywhere for inner phi"},
      {"H3", "C_phi is Hilbert-Schmidt iff int |u|^2 / (1 - |phi|^2) dm < inf; for rational data "
             "this is a local order count at the contact points"},
      {"C1", "Hilbert-Schmidt operators are compact"},
      {"C2", "compactness forces m_k < m_l whenever phi(xi_k) = xi_l"},
      {"C3", "p = 0 and phi(closure of D) meets the circle only inside the zero set of a gives compactness"},
      {"C4", "u in H^2 vanishing at every contact point gives a vanishing Carleson measure, hence compactness"},
      {"C5", "compactness forces (1 - |z|^2) |u(z)|^2 / (1 - |phi(z)|^2) -> 0 at the contact points"},
      {"C6", "no exact rule decides compactness; Carleson scan data attached"},
      {"L1", "an unbounded operator is neither compact nor Hilbert-Schmidt"},
      {"K0", "a constant symbol gives a rank one operator"},
      {"D0", "a has no zeros on the circle: H(b) equals H^2 with an equivalent norm"},
  };
  auto it = table.find(id);
  return it == table.end() ? std::string() : it->second;
}

BoundedDecision decide_bounded(const SymbolProfile& s, const UPack* up, const MateData& m,
                               const Tolerances& tol) {
  BoundedDecision out;
  const auto& bz = m.boundary_zeros;
  for (const auto& img : s.images) {
    if (img.kind == ImageKind::Violation) {
      out.rules.push_back(rule("R1", "phi(xi_" + std::to_string(img.index + 1) + ") = " + fmt(img.value) +
                                         " is on the circle but not a zero of a"));
    } else if (img.kind == ImageKind::Boundary) {
      const int mk = bz[img.index].multiplicity, ml = bz[img.target].multiplicity;
      if (mk > ml)
        out.rules.push_back(rule("R2", "phi(xi_" + std::to_string(img.index + 1) + ") = xi_" +
                                           std::to_string(img.target + 1) + " with multiplicities " +
                                           std::to_string(mk) + " > " + std::to_string(ml)));
    }
  }
  if (up && !up->u_in_H2) {
    std::string ev = "u is not in H^2";
    if (up->witness_pole) ev += ": pole at " + fmt(*up->witness_pole);
    out.rules.push_back(rule("R3", ev));
  }
  if (!out.rules.empty()) {
    out.verdict = Bounded::No;
    return out;
  }
  if (!up) throw Error(ErrorCode::NumericFailure, "decide_bounded: u missing for an admissible profile");
  std::string ev = "u in H^2";
  if (up->u.is_polynomial()) {
    ev += " is a polynomial";
  } else {
    double r = 1e300;
    for (const auto& p : up->u.poles()) r = std::min(r, std::abs(p.location));
    std::ostringstream os;
    os.precision(6);
    os << " has all poles in |z| >= " << r;
    ev += os.str();
  }
  ev += ", so u is bounded on the disk and W_{u,phi} is bounded";
  out.rules.push_back(rule("R4", ev));
  if (s.p == 0 && !s.images.empty()) {
    double worst = 0.0;
    for (const auto& img : s.images) worst = std::max(worst, std::abs(img.value));
    std::ostringstream os;
    os.precision(6);
    os << "max |phi(xi_j)| = " << worst << " < 1";
    out.rules.push_back(rule("R5", os.str()));
  }
  (void)tol;
  out.verdict = Bounded::Yes;
  return out;
}

int hs_local_order(const UPack& up, const ContactPoint& c, const Tolerances& tol) {
  return 2 * order_at(up.u, c.zeta, tol) - 2 * c.half_order;
}

Decided decide_hs(const SymbolProfile& s, const UPack& up, const MateData& m, const Tolerances& tol) {
  (void)m;
  Decided out;
  if (up.u.is_zero()) {
    out.verdict = Decision::Yes;
    out.rules.push_back(rule("H3", "u vanishes identically"));
    return out;
  }
  if (s.is_inner) {
    out.verdict = Decision::No;
    out.rules.push_back(rule("H2", "phi is inner and u is not identically zero"));
    return out;
  }
  if (s.strictly_inside) {
    std::ostringstream os;
    os.precision(6);
    os << "sup |phi| on the circle = " << s.sup_modulus;
    out.verdict = Decision::Yes;
    out.rules.push_back(rule("H1", os.str()));
    return out;
  }
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : s.contact) {
    const int ord = hs_local_order(up, c, tol);
    os << "zeta = " << fmt(c.zeta) << ": ord u = " << order_at(up.u, c.zeta, tol) << ", k = " << c.half_order
       << ", integrand order " << ord << "; ";
    ok = ok && ord >= 0;
  }
  if (s.contact.empty()) os << "no contact points";
  out.verdict = ok ? Decision::Yes : Decision::No;
  out.rules.push_back(rule("H3", os.str()));
  return out;
}

Decided decide_compact(const SymbolProfile& s, const UPack& up, const MateData& m, Decision hs,
                       const Tolerances& tol) {
  Decided out;
  bool yes = false, no = false;
  if (hs == Decision::Yes) {
    out.rules.push_back(rule("C1", "Hilbert-Schmidt"));
    yes = true;
  }
  const auto& bz = m.boundary_zeros;
  for (const auto& img : s.images) {
    if (img.kind != ImageKind::Boundary) continue;
    const int mk = bz[img.index].multiplicity, ml = bz[img.target].multiplicity;
    if (mk == ml) {
      out.rules.push_back(rule("C2", "phi(xi_" + std::to_string(img.index + 1) + ") = xi_" +
                                         std::to_string(img.target + 1) + " with equal multiplicities " +
                                         std::to_string(mk)));
      no = true;
    }
  }
  if (!s.is_inner && !up.u.is_zero()) {
    if (s.p == 0) {
      bool all = true;
      for (const auto& c : s.contact) all = all && hits_zero_set(c.image, m, tol);
      if (all) {
        out.rules.push_back(rule("C3", s.contact.empty()
                                           ? "p = 0 and phi has no contact points"
                                           : "p = 0 and every contact point is mapped into the zero set of a"));
        yes = true;
      }
    }
    if (up.u_in_H2 && !s.contact.empty()) {
      bool all = true;
      for (const auto& c : s.contact) all = all && order_at(up.u, c.zeta, tol) >= 1;
      if (all) {
        out.rules.push_back(rule("C4", "u vanishes at every contact point"));
        yes = true;
      }
    }
    if (up.u_in_H2) {
      for (const auto& c : s.contact) {
        const int ou = order_at(up.u, c.zeta, tol);
        const int top = 1 + 2 * ou;
        const int bottom = radial_order_of_defect(s.phi, c.zeta);
        if (top <= bottom) {
          out.rules.push_back(rule("C5", "at zeta = " + fmt(c.zeta) + " the radial kernel ratio has order " +
                                             std::to_string(top) + " - " + std::to_string(bottom) +
                                             " <= 0 in (1 - r)"));
          no = true;
        }
      }
    }
  } else if (up.u.is_zero()) {
    out.rules.push_back(rule("C4", "u vanishes identically"));
    yes = true;
  }
  if (yes && no) {
    out.verdict = Decision::Unknown;
    out.rules.push_back(rule("C6", "sufficient and necessary rules disagree; numerical evidence needed"));
  } else if (yes) {
    out.verdict = Decision::Yes;
  } else if (no) {
    out.verdict = Decision::No;
  } else {
    out.verdict = Decision::Unknown;
    out.rules.push_back(rule("C6", "no exact rule applies"));
  }
  return out;
}

RatFunc hs_integrand(const UPack& up, const SymbolProfile& s, const Tolerances& tol) {
  if (s.is_inner) throw Error(ErrorCode::NumericFailure, "hs_integrand: 1 - |phi|^2 vanishes on the circle");
  const CPoly D = s.phi.den();
  const int M = std::max(D.degree(), s.phi.num().degree());
  const CPoly num = (D * D.reversed_conj()).shifted(M - D.degree());
  const RatFunc inv_defect = RatFunc::from_ratio(num, s.contact_form, tol);
  return up.u * reflect(up.u) * inv_defect;
}

HsIntegral hs_integral(const UPack& up, const SymbolProfile& s, const Tolerances& tol) {
  if (up.u.is_zero()) return HsFinite{0.0, 0.0, true};
  if (!up.u_in_H2) throw Error(ErrorCode::NotInHardy, "hs_integral needs u in H^2");
  if (s.is_inner) return HsDivergent{{}, true};
  HsDivergent div;
  for (const auto& c : s.contact) {
    const int ord = hs_local_order(up, c, tol);
    if (ord < 0) div.points.push_back({c.zeta, ord});
  }
  if (!div.points.empty()) return div;
  const RatFunc J = hs_integrand(up, s, tol);
  // the direct quotient is better conditioned; the reduced J takes over where
  // 1 - |phi|^2 is small and the quotient would be 0/0
  auto g = [&](double t) {
    const cplx z = std::polar(1.0, t);
    const double defect = 1.0 - std::norm(s.phi(z));
    return defect > 1e-3 ? std::norm(up.u(z)) / defect : J(z).real();
  };
  const auto q = graded_circle_mean(g, contact_angles(s), 8, tol.quad);
  return HsFinite{q.value, q.error, q.converged};
}

double hs_truncated(const UPack& up, const SymbolProfile& s, double eps, const Tolerances& tol) {
  const auto hot = contact_angles(s);
  auto g = [&](double t) {
    const cplx z = std::polar(1.0, t);
    return std::norm(up.u(z)) / (1.0 - std::norm(s.phi(z)));
  };
  if (hot.empty()) return interval_integral(g, 0.0, 2.0 * pi, tol.quad).value / (2.0 * pi);
  std::vector<double> h = hot;
  std::sort(h.begin(), h.end());
  double total = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    const double a = h[j] + eps;
    const double b = (j + 1 < h.size() ? h[j + 1] : h[0] + 2.0 * pi) - eps;
    if (b > a) total += interval_integral(g, a, b, tol.quad).value;
  }
  return total / (2.0 * pi);
}

void check_lattice(const Verdict& v) {
  auto fail = [](const char* what) { throw Error(ErrorCode::NumericFailure, std::string("verdict lattice: ") + what); };
  if (v.hilbert_schmidt == Decision::Yes && v.compact != Decision::Yes) fail("Hilbert-Schmidt but not compact");
  if (v.compact == Decision::Yes && v.bounded != Bounded::Yes) fail("compact but not bounded");
  if (v.bounded == Bounded::No && (v.compact != Decision::No || v.hilbert_schmidt != Decision::No))
    fail("unbounded but compact or Hilbert-Schmidt not ruled out");
  const bool decided = v.bounded != Bounded::Degenerate || v.compact != Decision::Unknown ||
                       v.hilbert_schmidt != Decision::Unknown;
  if (decided && v.fired_rules.empty()) fail("decision without a fired rule");
  for (const auto& r : v.fired_rules)
    if (r.citation.empty()) fail("rule without a citation");
}

}  // namespace hbcomp
