#include "celab/error.hpp"
#include "celab/limits.hpp"

#include <cstdlib>
#include <string>

namespace celab {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ScalarMismatch: return "ScalarMismatch";
    case ErrorCode::CharacteristicZero: return "CharacteristicZero";
    case ErrorCode::NoSuchDerivation: return "NoSuchDerivation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::UnsupportedScalars: return "UnsupportedScalars";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::InvalidUnit: return "InvalidUnit";
    case ErrorCode::NotASubspace: return "NotASubspace";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAMonoid: return "NotAMonoid";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotASemigroup: return "NotASemigroup";
    case ErrorCode::NotASemiring: return "NotASemiring";
    case ErrorCode::AlphaNotUnit: return "AlphaNotUnit";
    case ErrorCode::AlphaNotCentral: return "AlphaNotCentral";
    case ErrorCode::AlphaNotSymmetric: return "AlphaNotSymmetric";
    case ErrorCode::MissingUnit: return "MissingUnit";
    case ErrorCode::MissingInvolution: return "MissingInvolution";
    case ErrorCode::UnsupportedParameter: return "UnsupportedParameter";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::StrategyInapplicable: return "StrategyInapplicable";
    case ErrorCode::InvalidJson: return "InvalidJson";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::QuotientNotAField: return "QuotientNotAField";
  }
  return "Unknown";
}

Limits &limits() {
  static Limits value = [] {
    Limits l;
    if (const char *env = std::getenv("CE_LAB_MAX_ENUM")) {
      try {
        l.max_enum = std::stoull(env);
      } catch (...) {
      }
    }
    return l;
  }();
  return value;
}

}  // namespace celab
