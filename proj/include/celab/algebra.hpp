#ifndef CELAB_ALGEBRA_HPP
#define CELAB_ALGEBRA_HPP

#include "celab/linalg.hpp"
#include "celab/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace celab {

/// One nonzero structure constant: e_i * e_j has coefficient c on e_k.
struct Term {
  std::uint32_t k;
  Scalar c;
};

/// Finite-dimensional algebra given by structure constants. Cheap to copy; immutable.
class Algebra {
 public:
  /// products[i * n + j] lists the nonzero coordinates of e_i * e_j.
  Algebra(ScalarRing ring, std::vector<std::string> labels, std::vector<std::vector<Term>> products,
          std::optional<Vec> unit = std::nullopt, std::optional<Matrix> involution = std::nullopt);
  /// Dense form: table[i][j] is the coordinate vector of e_i * e_j.
  static Algebra from_dense(ScalarRing ring, std::vector<std::string> labels,
                            const std::vector<std::vector<Vec>> &table, std::optional<Vec> unit = std::nullopt,
                            std::optional<Matrix> involution = std::nullopt);

  const ScalarRing &ring() const;
  std::size_t dim() const;
  const std::vector<std::string> &labels() const;
  const std::optional<Vec> &unit() const;
  /// Column j is the image of e_j.
  const std::optional<Matrix> &involution() const;
  const std::vector<Term> &terms(std::size_t i, std::size_t j) const;
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec basis(std::size_t i) const { return unit_vec(ring(), dim(), i); }

  Vec multiply(const Vec &a, const Vec &b) const;
  Vec star(const Vec &a) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const Vec &a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(const Vec &a) const;

  bool is_associative() const;
  bool is_commutative() const;
  bool operator==(const Algebra &o) const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

class Element {
 public:
  Element(Algebra algebra, Vec coords);
  static Element basis(const Algebra &a, std::size_t i);
  static Element zero(const Algebra &a);
  static Element one(const Algebra &a);

  const Algebra &algebra() const { return algebra_; }
  const Vec &coords() const { return coords_; }
  bool is_zero() const;
  std::string to_string() const;

  Element operator+(const Element &o) const;
  Element operator-(const Element &o) const;
  Element operator-() const;
  Element operator*(const Element &o) const;
  Element scaled(const Scalar &c) const;
  bool operator==(const Element &o) const;
  bool operator!=(const Element &o) const { return !(*this == o); }

 private:
  void check(const Element &o) const;
  Algebra algebra_;
  Vec coords_;
};

Element multiply(const Element &a, const Element &b);
Element associator(const Element &a, const Element &b, const Element &c);
Element commutator(const Element &a, const Element &b);
Vec associator(const Algebra &A, const Vec &a, const Vec &b, const Vec &c);
Vec commutator(const Algebra &A, const Vec &a, const Vec &b);
std::string format_vec(const Algebra &A, const Vec &v);

bool is_associative(const Algebra &A);
bool is_commutative(const Algebra &A);
std::optional<Vec> find_unit(const Algebra &A);

Algebra tensor_product(const Algebra &A, const Algebra &B);
Algebra direct_sum(const Algebra &A, const Algebra &B);
/// Same algebra in a new basis given by the rows (must be invertible).
Algebra with_basis(const Algebra &A, const std::vector<Vec> &rows, std::vector<std::string> labels);
/// Subalgebra spanned by a subspace, in its canonical basis (free sub-modules only).
Algebra subalgebra(const Algebra &A, const Subspace &U, std::vector<std::string> labels = {});
/// Adjoin an identity: basis 1, e_1, ..., e_n.
Algebra adjoin_unit(const Algebra &A);

Subspace subspace_product(const Algebra &A, const Subspace &U, const Subspace &V);
Subspace ideal_generated_by(const Algebra &A, const std::vector<Vec> &gens);
bool is_two_sided_ideal(const Algebra &A, const Subspace &I);
bool is_right_ideal(const Algebra &A, const Subspace &I);
bool is_left_ideal(const Algebra &A, const Subspace &I);
/// Least k with U^k = 0 (left-normed powers), none if the powers stabilize nonzero.
std::optional<int> nilpotency_index(const Algebra &A, const Subspace &U);

struct Quotient {
  Algebra algebra;
  Matrix projection;  // dim(A/I) x dim(A)
  std::vector<std::size_t> complement;
  Vec project(const Vec &v) const { return projection.apply(v); }
};

Quotient quotient_by_ideal(const Algebra &A, const Subspace &I);

}  // namespace celab

#endif
