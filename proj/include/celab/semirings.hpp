#ifndef CELAB_SEMIRINGS_HPP
#define CELAB_SEMIRINGS_HPP

#include "celab/algebra.hpp"
#include "celab/analyzers.hpp"
#include "celab/groups.hpp"
#include "celab/io.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace celab {

/// Semiring given by full operation tables; axioms are checked on construction (NotASemiring).
class FiniteSemiring {
 public:
  using Index = std::uint32_t;

  FiniteSemiring(std::vector<std::string> labels, std::vector<std::vector<Index>> add,
                 std::vector<std::vector<Index>> mul, Index zero, Index one);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(Index i) const { return labels_[i]; }
  Index add(Index a, Index b) const { return add_[a][b]; }
  Index mul(Index a, Index b) const { return mul_[a][b]; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  const std::vector<std::vector<Index>> &add_table() const { return add_; }
  const std::vector<std::vector<Index>> &mul_table() const { return mul_; }
  Index at(const std::string &label) const;
  bool is_commutative() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Index>> add_, mul_;
  Index zero_, one_;
};

/// Re-checks every semiring axiom; throws NotASemiring naming the first failure.
void verify_semiring_axioms(const FiniteSemiring &S);

struct SemigroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
};

/// The monoid {1, a, b, c} with xy = x for x in {a, b} and y != c, c absorbing.
SemigroupTable four_element_monoid();

/// Subsets of a monoid with union and elementwise product (NotASemigroup if M is not a monoid).
FiniteSemiring powerset_semiring(const SemigroupTable &M);
/// Boolean[G] as the powerset semiring of G (at most 512 elements).
FiniteSemiring boolean_group_semiring(const FiniteGroup &G);
/// Upper triangular 2x2 matrices over {0..bound} with saturating sum and product.
FiniteSemiring truncated_triangular_semiring(int bound);
/// A finite commutative ring viewed as a semiring.
FiniteSemiring ring_semiring(const ScalarRing &F);

std::vector<FiniteSemiring::Index> semiring_center(const FiniteSemiring &S);
Report is_ce_semiring(const FiniteSemiring &S);

struct SemiringPredicates {
  bool additively_cancellative = false;
  bool zero_sum_free = false;
  bool reduced = false;
  bool semisubtractive = false;
  bool multiplicatively_cancellative = false;
  bool complemented_idempotents_central = false;
  bool additively_idempotent = false;
  bool multiplicatively_idempotent = false;
  /// "exact" or "sampled".
  std::string certification = "exact";
  Json counterexamples = Json::object();
};

Json predicates_to_json(const SemiringPredicates &p);
SemiringPredicates semiring_predicates(const FiniteSemiring &S);

Json semiring_to_json(const FiniteSemiring &S);
FiniteSemiring semiring_from_json(const Json &j);

enum class Coefficients { Boolean, NonNegativeRationals };

/// SG with coefficients in {0,1} (Boolean) or nonnegative rationals; elements are coordinate vectors over Q.
class GroupSemiring {
 public:
  GroupSemiring(Coefficients kind, FiniteGroup group);

  Coefficients kind() const { return kind_; }
  const FiniteGroup &group() const { return group_; }
  std::size_t dim() const { return group_.order(); }
  const ScalarRing &ring() const { return structure_.ring(); }

  Vec add(const Vec &a, const Vec &b) const;
  Vec mul(const Vec &a, const Vec &b) const;
  Vec basis(std::size_t g) const;
  Vec one() const { return basis(group_.identity()); }
  Vec zero() const;
  /// Sum of the group elements in S.
  Vec subset_sum(const Subset &S) const;
  bool is_zero(const Vec &a) const;
  bool is_member(const Vec &a) const;
  /// Exact: commutes with every group element.
  bool is_central(const Vec &a) const;
  /// Nonzero element with support of size at most max_support and small coefficients.
  Vec random_element(std::mt19937_64 &rng, std::size_t max_support = 3) const;
  std::string format(const Vec &a) const;

 private:
  Vec normalize(Vec v) const;

  Coefficients kind_;
  FiniteGroup group_;
  Algebra structure_;
};

/// Sampled check: the class-sum witness a * sum(Z(G)) is tried first, then all class sums.
Report is_ce_semiring(const GroupSemiring &S, std::mt19937_64 &rng, std::size_t samples = 1000);
/// Quantifiers checked over a pool of structured and random elements.
SemiringPredicates semiring_predicates(const GroupSemiring &S, std::mt19937_64 &rng, std::size_t samples = 10000);

}  // namespace celab

#endif
