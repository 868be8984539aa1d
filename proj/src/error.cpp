#include "hbcomp/error.hpp"
#include "hbcomp/tolerances.hpp"

namespace hbcomp {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivideByZeroPoly: return "DivideByZeroPoly";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NotInHardy: return "NotInHardy";
    case ErrorCode::NotASelfMap: return "NotASelfMap";
    case ErrorCode::IsInner: return "IsInner";
    case ErrorCode::OddCircleMultiplicity: return "OddCircleMultiplicity";
    case ErrorCode::NotOuter: return "NotOuter";
    case ErrorCode::NormExceeded: return "NormExceeded";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::MateMismatch: return "MateMismatch";
    case ErrorCode::NotBoundedBelow: return "NotBoundedBelow";
    case ErrorCode::NotInHb: return "NotInHb";
    case ErrorCode::AmbiguousBoundaryValue: return "AmbiguousBoundaryValue";
    case ErrorCode::NotContactPoint: return "NotContactPoint";
    case ErrorCode::PoleOnSamplingCircle: return "PoleOnSamplingCircle";
    case ErrorCode::WrongSpace: return "WrongSpace";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NumericFailure: return "NumericFailure";
  }
  return "Unknown";
}

void Tolerances::set(const std::string& name, double value) {
  if (!(value > 0.0)) throw Error(ErrorCode::SchemaError, "tolerance " + name + " must be positive");
  if (name == "coeff_tol" || name == "coeff") coeff = value;
  else if (name == "cluster_tol" || name == "cluster") cluster = value;
  else if (name == "circle_tol" || name == "circle") circle = value;
  else if (name == "quad_tol" || name == "quad") quad = value;
  else throw Error(ErrorCode::SchemaError, "unknown tolerance '" + name + "'");
}

}  // namespace hbcomp
