#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbcomp/verdict.hpp"

namespace hbcomp {

struct AnalyzeOptions {
  GridSpec grid;
  bool force_scan = false;  // attach scans even when compactness is decided
};

struct Analysis {
  MateData mate;
  std::optional<SelfMapCheck> admission;
  std::optional<SymbolProfile> profile;
  std::optional<UPack> upack;
  Verdict verdict;
};

// Full decision pipeline for C_phi on H(b). Throws NotASelfMap and the
// profile errors; everything else ends in a verdict.
Analysis analyze(const MateData& m, const RatFunc& phi, const AnalyzeOptions& opt = {},
                 const Tolerances& tol = {});

// The b = (1 + z)/2 special case, where H(b) is the local Dirichlet space at 1.
struct SarasonSilvaReport {
  cplx phi_at_one;
  Verdict verdict;
  std::optional<AdcData> adc;           // when phi(1) = 1
  std::optional<double> local_integral;  // int |phi-1|^2 |phi-phi(1)|^2 / (|z-1|^2 (1-|phi|^2)) dm
  std::optional<double> hs_value;
  bool consistent = true;
  std::vector<std::string> notes;
};
// Throws WrongSpace unless m is the mate data of b = (1 + z)/2.
SarasonSilvaReport sarason_silva_check(const RatFunc& phi, const MateData& m, const Tolerances& tol = {});

}  // namespace hbcomp
