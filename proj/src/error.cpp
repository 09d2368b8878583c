#include "gwtail/error.hpp"

namespace gwtail {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyDistribution: return "EmptyDistribution";
    case Errc::NonzeroP0: return "NonzeroP0";
    case Errc::P1OutOfRange: return "P1OutOfRange";
    case Errc::NegativeProbability: return "NegativeProbability";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::DegenerateP1One: return "DegenerateP1One";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ConfigError: return "ConfigError";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::DivisorUnderflow: return "DivisorUnderflow";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::OutsideTrustedRadius: return "OutsideTrustedRadius";
    case Errc::UnsupportedRegion: return "UnsupportedRegion";
    case Errc::BasinViolation: return "BasinViolation";
    case Errc::AliasingDetected: return "AliasingDetected";
    case Errc::PoleArgument: return "PoleArgument";
    case Errc::NonPositiveX: return "NonPositiveX";
    case Errc::TruncationExceeded: return "TruncationExceeded";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SlowDecay: return "SlowDecay";
    case Errc::PopulationCapExceeded: return "PopulationCapExceeded";
    case Errc::ImaginaryResidue: return "ImaginaryResidue";
  }
  return "Unknown";
}

ErrorCategory category(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyDistribution:
    case Errc::NonzeroP0:
    case Errc::P1OutOfRange:
    case Errc::NegativeProbability:
    case Errc::NotNormalized:
    case Errc::DegenerateP1One:
    case Errc::DegreeTooLarge:
    case Errc::InvalidArgument:
    case Errc::ConfigError:
    case Errc::SupportMismatch:
      return ErrorCategory::Config;
    default:
      return ErrorCategory::Numerical;
  }
}

}  // namespace gwtail
