#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hbcomp/hbspace.hpp"
#include "hbcomp/opmatrix.hpp"
#include "hbcomp/pipeline.hpp"

namespace hbcomp {

using Json = nlohmann::ordered_json;

// Deterministic text: keys in insertion order, doubles as %.17g, non-finite doubles as null.
std::string dump(const Json& j, int indent = 2);

Json to_json(cplx z);  // [re, im]
Json to_json(const CPoly& p);
Json to_json(const RatFunc& f);  // {"num": [...], "den": [...]}
Json to_json(const Tolerances& t);
Json to_json(const MateData& m);
Json to_json(const SymbolProfile& s);
Json to_json(const UPack& up);
Json to_json(const HsIntegral& hs);
Json to_json(const ScanData& d);
Json to_json(const Verdict& v);
Json to_json(const HbDecomposition& d);
Json to_json(const NotInHb& n);
Json to_json(const SarasonSilvaReport& r);
// summary: Frobenius^2 and the top 8 singular values; full adds the matrix itself.
Json to_json(const TruncatedOperator& t, bool full);

// Coefficients are numbers or [re, im] pairs. Throws SchemaError.
cplx cplx_from_json(const Json& j, const std::string& where);
CPoly poly_from_json(const Json& j, const std::string& where);
RatFunc ratfunc_from_json(const Json& j, const std::string& where);

// Input file for every subcommand: exactly one of b or a, plus whatever the subcommand needs.
struct ProblemSpec {
  std::optional<RatFunc> b;
  std::optional<RatFunc> a;
  std::optional<RatFunc> phi;
  std::optional<RatFunc> f;
  GridSpec grid;
  std::optional<int> trunc;
  Tolerances tol;
};

// Throws SchemaError on unknown keys, missing or conflicting fields and bad values.
ProblemSpec parse_problem(const Json& j);
MateData mate_of(const ProblemSpec& spec);

Json analysis_report(const Analysis& an, const ProblemSpec& spec,
                     const std::optional<TruncatedOperator>& matrix = std::nullopt);

}  // namespace hbcomp
