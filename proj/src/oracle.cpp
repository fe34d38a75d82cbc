#include "celab/oracle.hpp"

#include "celab/analyzers.hpp"
#include "celab/builders.hpp"
#include "celab/error.hpp"

#include <random>

namespace celab {

namespace {

// Names of the invariants violated by A; empty when all hold.
std::vector<std::string> violations(const Algebra &A, bool inject) {
  std::vector<std::string> out;
  Verdict enumerated = is_centrally_essential(A, Strategy::Enumerate).verdict;
  Verdict socle = is_centrally_essential(A, Strategy::Socle).verdict;
  if (inject) socle = socle == Verdict::True ? Verdict::False : Verdict::True;
  if (enumerated != socle) out.push_back("enumerate-vs-socle");
  if (enumerated == Verdict::True) {
    if (!all_idempotents_central(A)) out.push_back("idempotents-central");
    if (!zero_divisor_sets_equal(A)) out.push_back("zero-divisor-symmetry");
    if (!A.is_commutative() && nilradical_in(A, center(A)).is_zero()) out.push_back("center-nilradical");
  }
  return out;
}

// A with the structure constant list of basis pair p emptied, if still associative and unital.
std::optional<Algebra> without_pair(const Algebra &A, std::size_t p) {
  std::size_t n = A.dim();
  std::vector<std::vector<Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i * n + j != p) products[i * n + j] = A.terms(i, j);
  try {
    Algebra B(A.ring(), A.labels(), std::move(products), A.unit());
    if (!B.is_associative()) return std::nullopt;
    return B;
  } catch (const Error &) {
    return std::nullopt;
  }
}

Algebra minimize(Algebra A, bool inject) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t p = 0; p < A.dim() * A.dim(); ++p) {
      if (A.terms(p / A.dim(), p % A.dim()).empty()) continue;
      auto B = without_pair(A, p);
      if (B && !violations(*B, inject).empty()) {
        A = *B;
        progress = true;
      }
    }
  }
  return A;
}

}  // namespace

OracleResult run_oracle(const OracleOptions &options) {
  if (options.dim < 1 || options.dim > 4) throw Error(ErrorCode::UnsupportedParameter, "oracle dimension must be 1..4");
  ScalarRing F = ScalarRing::from_name(options.scalar);
  if (!F.is_field() || !F.is_finite()) throw Error(ErrorCode::UnsupportedParameter, "oracle scalars must be a finite field");
  std::mt19937_64 rng(options.seed);
  int low = options.dim == 1 ? 1 : 2;
  std::uniform_int_distribution<int> pick_dim(low, options.dim);

  OracleResult result;
  Json algebras = Json::array(), failures = Json::array();
  std::size_t ce = 0, noncommutative_ce = 0;
  for (std::size_t index = 0; index < options.count; ++index) {
    Algebra A = random_unital_algebra(F, pick_dim(rng), rng);
    auto bad = violations(A, options.inject_disagreement);
    bool is_ce = is_centrally_essential(A, Strategy::Enumerate).holds();
    ce += is_ce;
    noncommutative_ce += is_ce && !A.is_commutative();
    algebras.push_back(Json{{"index", index}, {"dim", A.dim()}, {"ce", is_ce}, {"commutative", A.is_commutative()}});
    if (!bad.empty()) {
      failures.push_back(Json{{"index", index}, {"violations", bad}, {"algebra", algebra_to_json(A)}});
      if (!result.minimized) result.minimized = minimize(A, options.inject_disagreement);
    }
  }
  result.passed = failures.empty();
  Json &r = result.report;
  r["options"] = Json{{"count", options.count}, {"dim", options.dim}, {"scalar", options.scalar}, {"seed", options.seed},
                      {"inject_disagreement", options.inject_disagreement}};
  r["passed"] = result.passed;
  r["ce_count"] = ce;
  r["noncommutative_ce_count"] = noncommutative_ce;
  r["failures"] = failures;
  if (result.minimized) r["minimized"] = algebra_to_json(*result.minimized);
  r["algebras"] = algebras;
  return result;
}

}  // namespace celab
