#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwtail {

enum class Errc {
  // offspring validation
  EmptyDistribution,
  NonzeroP0,
  P1OutOfRange,
  NegativeProbability,
  NotNormalized,
  DegenerateP1One,
  DegreeTooLarge,
  // configuration / interface guards
  InvalidArgument,
  ConfigError,
  SupportMismatch,
  // numerical failures
  DivisorUnderflow,
  NoConvergence,
  OutsideTrustedRadius,
  UnsupportedRegion,
  BasinViolation,
  AliasingDetected,
  PoleArgument,
  NonPositiveX,
  TruncationExceeded,
  HypothesisViolated,
  SlowDecay,
  PopulationCapExceeded,
  ImaginaryResidue,
};

std::string_view to_string(Errc code) noexcept;

enum class ErrorCategory { Config, Numerical };

ErrorCategory category(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gwtail
