#ifndef CELAB_ORACLE_HPP
#define CELAB_ORACLE_HPP

#include "celab/algebra.hpp"
#include "celab/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace celab {

struct OracleOptions {
  std::size_t count = 200;
  /// Dimensions are drawn uniformly from 2..dim (1 when dim = 1).
  int dim = 3;
  std::string scalar = "F2";
  std::uint64_t seed = 7;
  /// Test hook: negate the socle verdict so the run must fail.
  bool inject_disagreement = false;
};

struct OracleResult {
  bool passed = true;
  /// Deterministic for fixed options; contains no timing.
  Json report;
  /// Smallest failing algebra after removing structure constants while the failure persists.
  std::optional<Algebra> minimized;
};

/// Random unital algebras checked for: enumerate and socle agree; CE implies central idempotents,
/// equal left and right zero-divisor sets, and a nonzero center nilradical when non-commutative.
OracleResult run_oracle(const OracleOptions &options);

}  // namespace celab

#endif
