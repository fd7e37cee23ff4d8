#ifndef FUZZFRAC_ERRORS_HPP
#define FUZZFRAC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzfrac {

enum class ErrorCode {
  NegativeSpread,
  NegativeScalar,
  LambdaOutOfRange,
  InvalidProfile,
  HukuharaNotExist,
  TooFewPoints,
  NotIncreasing,
  InvalidAddress,
  SizeMismatch,
  InvalidScalingFactor,
  XOutOfDomain,
  XOutOfRange,
  ScalingConditionsViolated,
  DanglingInterval,
  NotIrreducible,
  NotContractive,
  MaxIterExceeded,
  InvalidArgument,
  EndpointMoved,
  DegenerateHolderExponent,
  InadmissiblePerturbation,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. The code is stable and meant to be
// switched on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fuzzfrac

#endif  // FUZZFRAC_ERRORS_HPP
