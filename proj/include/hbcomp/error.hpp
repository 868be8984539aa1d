#pragma once

#include <stdexcept>
#include <string>

namespace hbcomp {

enum class ErrorCode {
  DivideByZeroPoly,
  ZeroFunction,
  NotInHardy,
  NotASelfMap,
  IsInner,
  OddCircleMultiplicity,
  NotOuter,
  NormExceeded,
  IllConditioned,
  MateMismatch,
  NotBoundedBelow,
  NotInHb,
  AmbiguousBoundaryValue,
  NotContactPoint,
  PoleOnSamplingCircle,
  WrongSpace,
  SchemaError,
  NumericFailure,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hbcomp
