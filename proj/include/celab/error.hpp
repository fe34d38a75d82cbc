#ifndef CELAB_ERROR_HPP
#define CELAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace celab {

enum class ErrorCode {
  NonPrimeModulus,
  ReduciblePolynomial,
  InvalidModulus,
  DivisionByZero,
  NotAUnit,
  ScalarMismatch,
  CharacteristicZero,
  NoSuchDerivation,
  ParseError,
  DimensionMismatch,
  DimensionTooLarge,
  UnsupportedScalars,
  InconsistentSystem,
  InvalidTable,
  NotAnInvolution,
  InvalidUnit,
  NotASubspace,
  NotAnIdeal,
  NotAGroup,
  NotAMonoid,
  NotAHomomorphism,
  NotAnAutomorphism,
  NotASemigroup,
  NotASemiring,
  AlphaNotUnit,
  AlphaNotCentral,
  AlphaNotSymmetric,
  MissingUnit,
  MissingInvolution,
  UnsupportedParameter,
  TooLargeToEnumerate,
  StrategyInapplicable,
  InvalidJson,
  NotLocal,
  NotNilpotent,
  QuotientNotAField,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace celab

#endif
