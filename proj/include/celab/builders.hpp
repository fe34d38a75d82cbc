#ifndef CELAB_BUILDERS_HPP
#define CELAB_BUILDERS_HPP

#include "celab/algebra.hpp"
#include "celab/derivation_ring.hpp"
#include "celab/groups.hpp"

#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace celab {

struct GroupAlgebraInfo {
  Algebra algebra;
  FiniteGroup group;
  /// One class sum per conjugacy class, in conjugacy_classes order.
  std::vector<Vec> class_sums;
  /// Span of g - 1.
  Subspace augmentation;
};

GroupAlgebraInfo group_algebra(const ScalarRing &F, const FiniteGroup &G);
/// table[i][j] = index of m_i m_j; verified associative with identity.
Algebra monoid_algebra(const ScalarRing &F, const std::vector<std::string> &labels,
                       const std::vector<std::vector<std::size_t>> &table);

/// Basis: subsets of {1..n} ordered by size, then lexicographically.
Algebra grassmann(const ScalarRing &F, int n);
Algebra grassmann_over(const Algebra &A, int n);

/// Doubling (A, alpha) with (a1,a2)(a3,a4) = (a1a3 + alpha a4 a2*, a1* a4 + a3 a2).
Algebra cayley_dickson(const Algebra &A, const Vec &alpha);
/// K as a one-dimensional algebra with the identity involution.
Algebra scalar_algebra(const ScalarRing &K);
/// Basis 1, i, j, k with i^2 = a, j^2 = b, ij = k.
Algebra quaternion_algebra(const ScalarRing &K, const Scalar &a, const Scalar &b);
/// Basis 1, i, j, k, l, il, jl, kl.
Algebra octonion_algebra(const ScalarRing &K, const Scalar &a, const Scalar &b, const Scalar &c);

/// One sparse matrix: (row, col, coefficient) entries, 0-based.
using PatternMatrix = std::vector<std::tuple<std::size_t, std::size_t, Scalar>>;
/// Span of the given size x size matrices; must be closed under multiplication.
Algebra matrix_pattern_algebra(const ScalarRing &F, std::size_t size, const std::vector<PatternMatrix> &basis,
                               std::vector<std::string> labels);
/// Nilpotent n x n family with a unit adjoined by default (n = 7 is the 7 x 7 example).
Algebra ce_matrix_family(const ScalarRing &F, int n, bool adjoin_identity = true);
/// The right ideal of matrices with only the a13 and a1n parameters nonzero.
Subspace ce_matrix_right_ideal(const Algebra &family);
/// variant in {K, R, S, T}; k is the S parameter.
Algebra t_algebra(const ScalarRing &F, char variant, const Scalar &k);
Algebra upper_triangular(const ScalarRing &F, int n);

/// F_q[x, sigma]/(x^k) over F_p with sigma the Frobenius; basis theta^i x^j.
Algebra skew_poly_quotient(std::int64_t q, int k);
/// Ring generated by F_p(t) and x with x t = t x + x^3, x^4 = 0, over F_p(u), u = t^p; basis t^i x^j.
Algebra uniserial_derivation_ring(std::int64_t p);
/// base_modulus 0 gives Z[x, y], a prime p gives F_p[x, y]; derivations d/dx, d/dy.
DerivationTriangularRing jelonek_triangular(std::int64_t base_modulus);
/// A[x]/(x^k) with x central.
Algebra truncated_polynomial(const Algebra &A, int k);

/// Zero multiplication on F^n.
Algebra zero_algebra(const ScalarRing &F, int n);
/// Random associative algebra of dimension dim: a random table or matrix subalgebra on dim - 1 generators, unit adjoined.
Algebra random_unital_algebra(const ScalarRing &F, int dim, std::mt19937_64 &rng);

/// Subalgebra of the exterior algebra on two generators spanned by e1, e2, e1^e2.
Algebra exterior_plane_radical(const ScalarRing &F);

}  // namespace celab

#endif
