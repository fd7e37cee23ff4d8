#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeSpread: return "NegativeSpread";
    case ErrorCode::NegativeScalar: return "NegativeScalar";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::HukuharaNotExist: return "HukuharaNotExist";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::InvalidAddress: return "InvalidAddress";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidScalingFactor: return "InvalidScalingFactor";
    case ErrorCode::XOutOfDomain: return "XOutOfDomain";
    case ErrorCode::XOutOfRange: return "XOutOfRange";
    case ErrorCode::ScalingConditionsViolated: return "ScalingConditionsViolated";
    case ErrorCode::DanglingInterval: return "DanglingInterval";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EndpointMoved: return "EndpointMoved";
    case ErrorCode::DegenerateHolderExponent: return "DegenerateHolderExponent";
    case ErrorCode::InadmissiblePerturbation: return "InadmissiblePerturbation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace fuzzfrac
