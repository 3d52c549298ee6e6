#pragma once

#include <stdexcept>
#include <string>

namespace linehyp {

// Stable numeric values: these are mirrored by the LH_ERR_* codes of the C API.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParse = 2,
  kNearParallel = 10,
  kDegenerateTriangle = 11,
  kDegenerateContact = 12,
  kGeneralPositionViolation = 20,
  kQueryDegenerate = 21,
  kQueryOutsideBox = 22,
  kValidationFailed = 30,
  kUnknownVertex = 31,
  kCapExceeded = 32,
  kWitnessLocalizationFailed = 33,
  kGenerationRetriesExhausted = 40,
  kParameterMismatch = 41,
  kTooFewLines = 50,
  kOrderInconsistency = 51,
  kIntervalViolation = 52,
  kUnattributedEdge = 53,
  kShrinkMismatch = 54,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace linehyp
