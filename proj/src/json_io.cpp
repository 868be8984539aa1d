#include "hbcomp/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "hbcomp/error.hpp"

namespace hbcomp {

namespace {

void emit(const Json& j, int indent, int level, std::string& out) {
  const auto pad = [&](int l) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * l), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(level + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        emit(it.value(), indent, level + 1, out);
      }
      pad(level);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short numeric arrays ([re, im] pairs) stay on one line
      bool flat = j.size() <= 2;
      for (const auto& e : j) flat = flat && e.is_number();
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) pad(level + 1);
        emit(e, indent, level + 1, out);
      }
      if (!flat) pad(level);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>() + 0.0;  // -0 prints as 0
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

Json opt_cplx(const std::optional<cplx>& z) { return z ? to_json(*z) : Json(nullptr); }

Json zeros_json(const std::vector<BoundaryZero>& zs) {
  Json arr = Json::array();
  for (const auto& z : zs) arr.push_back({{"xi", to_json(z.xi)}, {"multiplicity", z.multiplicity}});
  return arr;
}

Json strings(const std::vector<std::string>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(s);
  return arr;
}

int get_int(const Json& j, const std::string& where, int lo, int hi) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) schema(where + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  return out;
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  if (arr.empty()) arr.push_back(to_json(cplx(0.0)));
  return arr;
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Tolerances& t) {
  return {{"coeff_tol", t.coeff}, {"cluster_tol", t.cluster}, {"circle_tol", t.circle}, {"quad_tol", t.quad}};
}

Json to_json(const MateData& m) {
  return {{"b", to_json(m.b)},
          {"a", to_json(m.a)},
          {"a1", to_json(m.a1)},
          {"boundary_zeros", zeros_json(m.boundary_zeros)},
          {"N", m.N},
          {"norm_below_one", m.norm_below_one},
          {"sup_b", m.sup_b},
          {"identity_residual", m.identity_residual},
          {"warnings", strings(m.warnings)}};
}

Json to_json(const SymbolProfile& s) {
  Json images = Json::array();
  for (const auto& im : s.images)
    images.push_back({{"index", im.index},
                      {"value", to_json(im.value)},
                      {"kind", to_string(im.kind)},
                      {"target", im.target >= 0 ? Json(im.target) : Json(nullptr)}});
  Json contact = Json::array();
  for (const auto& c : s.contact)
    contact.push_back({{"zeta", to_json(c.zeta)}, {"half_order", c.half_order}, {"image", to_json(c.image)}});
  return {{"phi", to_json(s.phi)},
          {"images", images},
          {"split", s.split},
          {"p", s.p},
          {"contact", contact},
          {"is_inner", s.is_inner},
          {"strictly_inside", s.strictly_inside},
          {"sup_modulus", s.sup_modulus}};
}

Json to_json(const UPack& up) {
  return {{"u", to_json(up.u)},
          {"in_H2", up.u_in_H2},
          {"witness_pole", opt_cplx(up.witness_pole)},
          {"psi_w", to_json(up.psi_w)},
          {"B", to_json(up.B)},
          {"retained", zeros_json(up.retained)}};
}

Json to_json(const HsIntegral& hs) {
  if (const auto* f = std::get_if<HsFinite>(&hs))
    return {{"kind", "finite"}, {"value", f->value}, {"error", f->error}, {"converged", f->converged}};
  const auto& d = std::get<HsDivergent>(hs);
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back({{"zeta", to_json(p.zeta)}, {"local_order", p.local_order}});
  return {{"kind", "divergent"}, {"points", pts}, {"everywhere", d.everywhere}};
}

Json to_json(const ScanData& d) {
  Json grid = Json::array(), trace = Json::array(), windows = Json::array();
  for (const auto& g : d.grid) grid.push_back({{"w", to_json(g.w)}, {"I", g.I}, {"converged", g.converged}});
  for (const auto& t : d.trace)
    trace.push_back({{"kind", t.kind}, {"direction", t.direction}, {"r", t.r}, {"I", t.I}, {"converged", t.converged}});
  for (const auto& w : d.windows) windows.push_back({{"xi", to_json(w.xi)}, {"r", w.r}, {"ratio", w.ratio}});
  return {{"carleson_sup", d.carleson_sup},
          {"unconverged", d.unconverged},
          {"grid", grid},
          {"trace", trace},
          {"windows", windows}};
}

Json to_json(const Verdict& v) {
  Json rules = Json::array();
  for (const auto& r : v.fired_rules)
    rules.push_back({{"id", r.id}, {"citation", r.citation}, {"evidence", r.evidence}});
  return {{"bounded", to_string(v.bounded)},
          {"compact", to_string(v.compact)},
          {"hilbert_schmidt", to_string(v.hilbert_schmidt)},
          {"fired_rules", rules},
          {"hs_integral", v.hs_value ? to_json(*v.hs_value) : Json(nullptr)},
          {"notes", strings(v.notes)}};
}

Json to_json(const HbDecomposition& d) {
  return {{"member", true},
          {"p_f", to_json(d.p_f)},
          {"f_tilde", to_json(d.f_tilde)},
          {"norm_sq", d.norm_sq},
          {"division_residual", d.division_residual},
          {"reconstruction_residual", d.reconstruction_residual}};
}

Json to_json(const NotInHb& n) {
  return {{"member", false}, {"reason", to_string(n.reason)}, {"witness", to_json(n.witness)}};
}

Json to_json(const SarasonSilvaReport& r) {
  Json adc = nullptr;
  if (r.adc) adc = {{"derivative", to_json(r.adc->derivative)}, {"caratheodory_quotient", r.adc->caratheodory_quotient}};
  return {{"phi_at_one", to_json(r.phi_at_one)},
          {"verdict", to_json(r.verdict)},
          {"adc", adc},
          {"local_integral", r.local_integral ? Json(*r.local_integral) : Json(nullptr)},
          {"hs_value", r.hs_value ? Json(*r.hs_value) : Json(nullptr)},
          {"consistent", r.consistent},
          {"notes", strings(r.notes)}};
}

Json to_json(const TruncatedOperator& t, bool full) {
  Json j = {{"basis", to_string(t.basis)},
            {"K", t.K},
            {"N", t.N},
            {"rows", static_cast<int>(t.matrix.rows())},
            {"sampling_radius", t.sampling_radius},
            {"alias_estimate", t.alias_estimate},
            {"frobenius_sq", frobenius_sq(t)},
            {"singular_values", top_singular_values(t, 8)}};
  if (full) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < t.matrix.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < t.matrix.cols(); ++k) row.push_back(to_json(t.matrix(i, k)));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  return j;
}

cplx cplx_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  schema(where + ": expected a number or an [re, im] pair");
}

CPoly poly_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of coefficients, lowest degree first");
  if (j.empty()) schema(where + ": polynomial has no coefficients");
  std::vector<cplx> c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    c.push_back(cplx_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    if (!std::isfinite(c.back().real()) || !std::isfinite(c.back().imag()))
      schema(where + ": non-finite coefficient");
  }
  return CPoly(std::move(c));
}

RatFunc ratfunc_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) return RatFunc(poly_from_json(j, where));
  if (!j.is_object()) schema(where + ": expected {\"num\": [...], \"den\": [...]} or a coefficient array");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "num" && it.key() != "den") schema(where + ": unknown field '" + it.key() + "'");
  if (!j.contains("num")) schema(where + ": missing \"num\"");
  const CPoly num = poly_from_json(j["num"], where + ".num");
  if (!j.contains("den")) return RatFunc(num);
  const CPoly den = poly_from_json(j["den"], where + ".den");
  if (den.is_zero()) schema(where + ".den: the zero polynomial");
  return RatFunc::from_ratio(num, den);
}

ProblemSpec parse_problem(const Json& j) {
  if (!j.is_object()) schema("problem file must be a JSON object");
  static const char* known[] = {"b", "a", "phi", "f", "grid", "trunc", "tol"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) schema("unknown field '" + it.key() + "' (expected b or a, phi, f, grid, trunc, tol)");
  }
  ProblemSpec s;
  if (j.contains("tol")) {
    if (!j["tol"].is_object()) schema("tol must be an object of name: value");
    for (auto it = j["tol"].begin(); it != j["tol"].end(); ++it) {
      if (!it.value().is_number()) schema("tol." + it.key() + " must be a number");
      s.tol.set(it.key(), it.value().get<double>());
    }
  }
  const bool hb = j.contains("b"), ha = j.contains("a");
  if (hb == ha) schema("give exactly one of \"b\" or \"a\"");
  if (hb) s.b = ratfunc_from_json(j["b"], "b");
  if (ha) s.a = ratfunc_from_json(j["a"], "a");
  if (j.contains("phi")) s.phi = ratfunc_from_json(j["phi"], "phi");
  if (j.contains("f")) s.f = ratfunc_from_json(j["f"], "f");
  if (j.contains("grid")) {
    const Json& g = j["grid"];
    if (!g.is_object()) schema("grid must be an object");
    for (auto it = g.begin(); it != g.end(); ++it) {
      if (it.key() == "depth") s.grid.depth = get_int(it.value(), "grid.depth", 1, 30);
      else if (it.key() == "uniform_angles") s.grid.uniform_angles = get_int(it.value(), "grid.uniform_angles", 1, 4096);
      else if (it.key() == "generic_traces") s.grid.generic_traces = get_int(it.value(), "grid.generic_traces", 0, 256);
      else schema("grid: unknown field '" + it.key() + "'");
    }
  }
  if (j.contains("trunc")) s.trunc = get_int(j["trunc"], "trunc", 1, 512);
  return s;
}

MateData mate_of(const ProblemSpec& spec) {
  return spec.b ? pythagorean_mate(*spec.b, spec.tol) : mate_from_a(*spec.a, spec.tol);
}

Json analysis_report(const Analysis& an, const ProblemSpec& spec, const std::optional<TruncatedOperator>& matrix) {
  Json input = Json::object();
  if (spec.b) input["b"] = to_json(*spec.b);
  if (spec.a) input["a"] = to_json(*spec.a);
  if (spec.phi) input["phi"] = to_json(*spec.phi);
  input["grid"] = {{"depth", spec.grid.depth},
                   {"uniform_angles", spec.grid.uniform_angles},
                   {"generic_traces", spec.grid.generic_traces}};
  Json admission = nullptr;
  if (an.admission)
    admission = {{"self_map", an.admission->self_map},
                 {"sup_modulus", an.admission->sup_modulus},
                 {"strictly_inside", an.admission->strictly_inside}};
  return {{"version", HBCOMP_VERSION},
          {"tolerances", to_json(spec.tol)},
          {"input", input},
          {"mate", to_json(an.mate)},
          {"admission", admission},
          {"profile", an.profile ? to_json(*an.profile) : Json(nullptr)},
          {"u", an.upack ? to_json(*an.upack) : Json(nullptr)},
          {"verdict", to_json(an.verdict)},
          {"scans", an.verdict.scans ? to_json(*an.verdict.scans) : Json(nullptr)},
          {"matrix", matrix ? to_json(*matrix, false) : Json(nullptr)}};
}

}  // namespace hbcomp
