#pragma once

#include <stdexcept>
#include <string>

namespace hilb {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  NonUnitConstantTerm,
  BadConstantTerm,
  NonzeroConstantTerm,
  NonUnitLinearTerm,
  ConstantTermPresent,
  NotFactorable,
  WeightTooLarge,
  DegenerateSlope,
  InsufficientCap,
  UnknownSurface,
  BadDivisorData,
  NonConstantResult,
  PoleSurvived,
  SlopeDependence,
  NonIntegerVerlinde,
  TruncationTooSmall,
  RankDeficientMatrix,
  NonzeroResidual,
  Mismatch,
  ValidationFailure,
  SquareRootObstruction,
  RootObstruction,
  InvalidArgument,
};

const char* errorName(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorName(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hilb
