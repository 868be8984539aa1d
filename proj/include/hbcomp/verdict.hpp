#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hbcomp/scan.hpp"

namespace hbcomp {

enum class Bounded { Yes, No, Degenerate };
enum class Decision { Yes, No, Unknown };
const char* to_string(Bounded b);
const char* to_string(Decision d);

struct FiredRule {
  std::string id;
  std::string citation;
  std::string evidence;
};

// Statement backing a rule id; empty for unknown ids.
std::string rule_citation(const std::string& id);

struct HsFinite {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};
struct HsDivergence {
  cplx zeta;
  int local_order = 0;  // order of the integrand at zeta (negative)
};
struct HsDivergent {
  std::vector<HsDivergence> points;
  bool everywhere = false;  // inner symbol: 1 - |phi|^2 vanishes on the whole circle
};
using HsIntegral = std::variant<HsFinite, HsDivergent>;

struct Verdict {
  Bounded bounded = Bounded::Degenerate;
  Decision compact = Decision::Unknown;
  Decision hilbert_schmidt = Decision::Unknown;
  std::vector<FiredRule> fired_rules;
  std::optional<ScanData> scans;
  std::optional<HsIntegral> hs_value;
  std::vector<std::string> notes;
};

struct BoundedDecision {
  Bounded verdict = Bounded::Yes;
  std::vector<FiredRule> rules;
};
struct Decided {
  Decision verdict = Decision::Unknown;
  std::vector<FiredRule> rules;
};

// up may be null when the profile has a violation (u is then not built).
BoundedDecision decide_bounded(const SymbolProfile& s, const UPack* up, const MateData& m,
                               const Tolerances& tol = {});
// Assumes bounded != No.
Decided decide_hs(const SymbolProfile& s, const UPack& up, const MateData& m,
                  const Tolerances& tol = {});
// Assumes bounded != No; hs is the Hilbert-Schmidt decision already made.
Decided decide_compact(const SymbolProfile& s, const UPack& up, const MateData& m, Decision hs,
                       const Tolerances& tol = {});

// J = u u~ / (1 - phi phi~); on the circle J = |u|^2 / (1 - |phi|^2).
RatFunc hs_integrand(const UPack& up, const SymbolProfile& s, const Tolerances& tol = {});
// Local order of J at a contact point: 2 ord(u, zeta) - 2 k.
int hs_local_order(const UPack& up, const ContactPoint& c, const Tolerances& tol = {});
HsIntegral hs_integral(const UPack& up, const SymbolProfile& s, const Tolerances& tol = {});
// Integral of |u|^2/(1-|phi|^2) with arcs of half-width eps removed around each contact point.
double hs_truncated(const UPack& up, const SymbolProfile& s, double eps, const Tolerances& tol = {});

// Throws NumericFailure if the implication lattice is broken.
void check_lattice(const Verdict& v);

}  // namespace hbcomp
