#include "hbcomp/commands.hpp"

#include <cstdio>

#include "hbcomp/error.hpp"

namespace hbcomp {

namespace {

const RatFunc& need(const std::optional<RatFunc>& v, const char* field, const char* cmd) {
  if (!v) throw Error(ErrorCode::SchemaError, std::string(cmd) + " needs \"" + field + "\"");
  return *v;
}

Analysis run_analysis(const ProblemSpec& spec, bool force_scan, const char* cmd) {
  const RatFunc& phi = need(spec.phi, "phi", cmd);
  return analyze(mate_of(spec), phi, {spec.grid, force_scan}, spec.tol);
}

}  // namespace

Json mate_command(const ProblemSpec& spec) { return to_json(mate_of(spec)); }

Json membership_command(const ProblemSpec& spec) {
  const RatFunc& fn = need(spec.f, "f", "hb-membership");
  const MateData m = mate_of(spec);
  const auto r = decompose(fn, m, spec.tol);
  return std::visit([](const auto& x) { return to_json(x); }, r);
}

Json u_command(const ProblemSpec& spec) {
  const RatFunc& phi = need(spec.phi, "phi", "u");
  const MateData m = mate_of(spec);
  const auto adm = admit_symbol(phi, spec.tol);
  if (!adm.self_map) throw Error(ErrorCode::NotASelfMap, adm.reason);
  if (phi.is_constant() || m.boundary_zeros.empty())
    throw Error(ErrorCode::SchemaError, "u is defined only for a non-constant phi and a with zeros on the circle");
  const SymbolProfile s = profile(phi, m, spec.tol);
  if (s.has_violation())
    return {{"u", nullptr}, {"in_H2", false}, {"witness_pole", nullptr},
            {"note", "phi maps a zero of a onto the circle away from the zeros of a; u is undefined and C_phi is unbounded"}};
  return to_json(build_u(s, m, spec.tol));
}

Json analyze_command(const ProblemSpec& spec, bool force_scan) {
  const Analysis an = run_analysis(spec, force_scan, "analyze");
  std::optional<TruncatedOperator> t;
  if (spec.trunc && an.verdict.bounded == Bounded::Yes && an.profile)
    t = hb_cphi_matrix(an.mate, *an.profile, *spec.trunc);
  return analysis_report(an, spec, t);
}

std::string scan_csv(const ProblemSpec& spec) {
  const Analysis an = run_analysis(spec, true, "scan");
  if (!an.verdict.scans)
    throw Error(ErrorCode::SchemaError, std::string("no scan: the operator is ") +
                                            (an.verdict.bounded == Bounded::No ? "unbounded" : "degenerate") +
                                            " or phi is constant");
  std::string out = "re_w,im_w,I_w\n";
  char line[96];
  const auto row = [&](cplx w, double I) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", w.real(), w.imag(), I);
    out += line;
  };
  for (const auto& g : an.verdict.scans->grid) row(g.w, g.I);
  for (const auto& t : an.verdict.scans->trace) row(std::polar(t.r, t.direction), t.I);
  return out;
}

Json matrix_command(const ProblemSpec& spec, Basis basis) {
  const RatFunc& phi = need(spec.phi, "phi", "matrix");
  const int K = spec.trunc.value_or(64);
  const MateData m = mate_of(spec);
  const auto adm = admit_symbol(phi, spec.tol);
  if (!adm.self_map) throw Error(ErrorCode::NotASelfMap, adm.reason);
  const SymbolProfile s = profile(phi, m, spec.tol);
  TruncatedOperator t;
  if (basis == Basis::HbSplit) {
    t = hb_cphi_matrix(m, s, K);
  } else {
    if (s.has_violation()) throw Error(ErrorCode::NotInHardy, "u is undefined for this symbol");
    t = truncate_weighted(build_u(s, m, spec.tol).u, phi, K);
  }
  Json j = {{"version", HBCOMP_VERSION}, {"tolerances", to_json(spec.tol)}};
  const Json tj = to_json(t, true);
  for (auto it = tj.begin(); it != tj.end(); ++it) j[it.key()] = *it;
  return j;
}

}  // namespace hbcomp
