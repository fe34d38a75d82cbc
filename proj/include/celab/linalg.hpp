#ifndef CELAB_LINALG_HPP
#define CELAB_LINALG_HPP

#include "celab/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace celab {

using Vec = std::vector<Scalar>;

Vec zero_vec(const ScalarRing &ring, std::size_t n);
Vec unit_vec(const ScalarRing &ring, std::size_t n, std::size_t i);
bool is_zero_vec(const ScalarRing &ring, const Vec &v);
Vec vec_add(const ScalarRing &ring, const Vec &a, const Vec &b);
Vec vec_sub(const ScalarRing &ring, const Vec &a, const Vec &b);
Vec vec_scale(const ScalarRing &ring, const Scalar &c, const Vec &a);
/// a += c * b
void vec_axpy(const ScalarRing &ring, Vec &a, const Scalar &c, const Vec &b);

class Matrix {
 public:
  Matrix(ScalarRing ring, std::size_t rows, std::size_t cols);
  static Matrix from_rows(ScalarRing ring, const std::vector<Vec> &rows, std::size_t cols);
  static Matrix identity(ScalarRing ring, std::size_t n);

  const ScalarRing &ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar &at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar &at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix &o) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  /// M x for a column vector x.
  Vec apply(const Vec &x) const;
  bool is_zero() const;
  bool operator==(const Matrix &o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  ScalarRing ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Sub-module of R^n held in canonical form: reduced echelon over fields, Howell form over Z_n.
class Subspace {
 public:
  Subspace(ScalarRing ring, std::size_t ambient);
  static Subspace span(ScalarRing ring, std::size_t ambient, const std::vector<Vec> &generators);
  static Subspace whole(ScalarRing ring, std::size_t ambient);

  const ScalarRing &ring() const { return ring_; }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec> &basis() const { return rows_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  Matrix matrix() const { return Matrix::from_rows(ring_, rows_, ambient_); }

  /// Remainder of v after reduction by the canonical rows; zero iff v is a member.
  Vec reduce(const Vec &v) const;
  bool contains(const Vec &v) const;
  bool is_subspace_of(const Subspace &o) const;
  /// Coefficients c with v = sum c_i basis_i, if v is a member.
  std::optional<Vec> coordinates(const Vec &v) const;

  /// Number of elements; 0 if infinite or beyond 2^63.
  std::uint64_t cardinality() const;
  /// Calls f on every element exactly once (finite rings only).
  void for_each_element(const std::function<void(const Vec &)> &f) const;

  bool operator==(const Subspace &o) const;
  bool operator!=(const Subspace &o) const { return !(*this == o); }

 private:
  ScalarRing ring_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace canonicalize(const Matrix &rows);
/// {x : A x = 0}
Subspace kernel(const Matrix &a);
/// Column span of A.
Subspace image(const Matrix &a);
/// Some x with A x = b, or none.
std::optional<Vec> solve(const Matrix &a, const Vec &b);
Subspace subspace_sum(const Subspace &u, const Subspace &v);
Subspace subspace_intersect(const Subspace &u, const Subspace &v);
bool contains(const Subspace &u, const Vec &v);
bool is_subspace_of(const Subspace &u, const Subspace &v);

}  // namespace celab

#endif
