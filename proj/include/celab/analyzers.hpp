#ifndef CELAB_ANALYZERS_HPP
#define CELAB_ANALYZERS_HPP

#include "celab/algebra.hpp"
#include "celab/groups.hpp"
#include "celab/io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace celab {

enum class Verdict { True, False, Unknown };
enum class Strategy { Auto, Enumerate, PerElementLinear, Socle, UniserialCriterion };
enum class Flavor { Ce, Strong, Weak, NEssential, KEssential };
enum class Side { Left, Right, TwoSided };

const char *verdict_name(Verdict v);
const char *strategy_name(Strategy s);
const char *flavor_name(Flavor f);
Strategy parse_strategy(const std::string &name);

/// a * x = y with x acting from the given flavor's multiplier set, y in the target set.
struct CEWitness {
  Vec a;
  /// Multiplier as an element of A; empty for centroid multipliers.
  Vec x;
  /// Coefficient of the formally adjoined unit (non-unital case).
  Scalar unit_coeff;
  Vec y;
  Flavor flavor = Flavor::Ce;
  std::string x_text;
};

struct Report {
  std::string predicate;
  Verdict verdict = Verdict::Unknown;
  std::string strategy;
  /// "exact", "certified-by-sufficient-criterion" or "sampled".
  std::string certification = "exact";
  std::optional<CEWitness> witness;
  std::optional<Vec> counterexample;
  Json details = Json::object();
  double millis = 0;

  bool holds() const { return verdict == Verdict::True; }
};

Json report_to_json(const Algebra &A, const Report &r);

/// Additive endomorphisms commuting with all left and right multiplications.
struct EndoSpace {
  Algebra algebra;
  std::vector<Matrix> basis;
};

Subspace center(const Algebra &A);
Subspace associative_center(const Algebra &A);
Subspace commutative_center(const Algebra &A);
EndoSpace centroid(const Algebra &A);
/// Left: {x : x S = 0}; right: {x : S x = 0}.
Subspace annihilator(const Algebra &A, const Subspace &S, Side side);
Subspace integer_annihilator(const Algebra &A, std::int64_t m);
Subspace commutator_ideal(const Algebra &A);

/// Nilpotent elements of a commutative associative subring U of A.
Subspace nilradical_in(const Algebra &A, const Subspace &U);
Subspace nilradical_commutative(const Algebra &C);
/// {a : a J(C) = 0} for C = Z(A).
Subspace socle_over_center(const Algebra &A);
/// Socle of the S-module M for a commutative subring S containing the unit.
Subspace socle_over(const Algebra &A, const Subspace &S, const Subspace &M);

/// Nonzero y = a x in target with x in span(acting) (plus integer multiples of a when with_unit).
std::optional<CEWitness> linear_witness(const Algebra &A, const Vec &a, const Subspace &acting, const Subspace &target,
                                        bool with_unit, Flavor flavor);

Report is_centrally_essential(const Algebra &A, Strategy strategy = Strategy::Auto,
                              const std::vector<Vec> *elements = nullptr);
Report is_strongly_ce(const Algebra &A);
Report is_weakly_ce(const Algebra &A);
Report is_n_essential(const Algebra &A);
Report is_k_essential(const Algebra &A);

/// Brute-force views over finite algebras with at most limits().max_enum elements.
std::vector<Vec> enumerate_center(const Algebra &A);
std::vector<Vec> idempotents(const Algebra &A);
bool all_idempotents_central(const Algebra &A);
bool is_left_zero_divisor(const Algebra &A, const Vec &a);
bool is_right_zero_divisor(const Algebra &A, const Vec &a);
/// Exhaustive: left and right zero-divisor sets coincide.
bool zero_divisor_sets_equal(const Algebra &A);

Report verify_local_radical(const Algebra &A, const Subspace &J);
/// N essential in A as a module over the center (C^1 form).
bool is_essential_submodule(const Algebra &A, const Subspace &N);

struct CdData {
  Subspace C, I, B, J;
};
/// The subspaces C, I, B, J of A used by the doubling formulas.
CdData cd_data(const Algebra &A);
/// Subspaces of R = (A, alpha) in the coordinates of cayley_dickson.
Subspace cd_nucleus_by_formula(const Algebra &R, const Algebra &A);
Subspace cd_center_by_formula(const Algebra &R, const Algebra &A);
bool cd_ce_criterion(const Algebra &A, const Vec &alpha);
bool cd_n_essential_criterion(const Algebra &A, const Vec &alpha);

bool is_right_alternative(const Algebra &A);
bool is_left_alternative(const Algebra &A);
bool is_alternative(const Algebra &A);

bool grassmann_ce_predicate(const Algebra &A, int n);
Verdict group_algebra_ce_predicate(const ScalarRing &F, const FiniteGroup &G);

}  // namespace celab

#endif
