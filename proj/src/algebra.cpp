#include "celab/algebra.hpp"

#include "celab/error.hpp"
#include "celab/limits.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace celab {

struct Algebra::Impl {
  explicit Impl(ScalarRing r) : ring(std::move(r)) {}
  ScalarRing ring;
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> products;
  std::optional<Vec> unit;
  std::optional<Matrix> involution;

  mutable std::once_flag assoc_once, comm_once;
  mutable bool assoc = false, comm = false;
};

namespace {

bool same_kind(const ScalarRing &ring, const Scalar &s) { return s.index() == ring.zero().index(); }

std::vector<Term> normalize_terms(const ScalarRing &ring, std::vector<Term> terms, std::size_t n) {
  std::map<std::uint32_t, Scalar> acc;
  for (auto &t : terms) {
    if (t.k >= n) throw Error(ErrorCode::InvalidTable, "basis index " + std::to_string(t.k) + " out of range");
    if (!same_kind(ring, t.c)) throw Error(ErrorCode::ScalarMismatch, "structure constant outside " + ring.name());
    auto it = acc.find(t.k);
    if (it == acc.end()) acc.emplace(t.k, t.c);
    else it->second = ring.add(it->second, t.c);
  }
  std::vector<Term> out;
  for (auto &[k, c] : acc)
    if (!ring.is_zero(c)) out.push_back({k, c});
  return out;
}

std::vector<Term> terms_of(const ScalarRing &ring, const Vec &v) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!ring.is_zero(v[k])) out.push_back({static_cast<std::uint32_t>(k), v[k]});
  return out;
}

}  // namespace

Algebra::Algebra(ScalarRing ring, std::vector<std::string> labels, std::vector<std::vector<Term>> products,
                 std::optional<Vec> unit, std::optional<Matrix> involution) {
  auto impl = std::make_shared<Impl>(ring);
  std::size_t n = labels.size();
  if (n > limits().max_dim)
    throw Error(ErrorCode::DimensionTooLarge, std::to_string(n) + " exceeds cap " + std::to_string(limits().max_dim));
  if (products.size() != n * n) throw Error(ErrorCode::InvalidTable, "expected " + std::to_string(n * n) + " products");
  impl->n = n;
  impl->labels = std::move(labels);
  impl->products.reserve(n * n);
  for (auto &p : products) impl->products.push_back(normalize_terms(ring, std::move(p), n));
  impl_ = impl;
  if (unit) {
    if (unit->size() != n) throw Error(ErrorCode::InvalidUnit, "unit has wrong length");
    for (const auto &s : *unit)
      if (!same_kind(ring, s)) throw Error(ErrorCode::ScalarMismatch, "unit coordinate outside " + ring.name());
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = basis(i);
      if (multiply(*unit, e) != e || multiply(e, *unit) != e)
        throw Error(ErrorCode::InvalidUnit, "unit fails on basis element " + impl->labels[i]);
    }
    impl->unit = std::move(unit);
  }
  if (involution) {
    if (involution->rows() != n || involution->cols() != n || involution->ring() != ring)
      throw Error(ErrorCode::NotAnInvolution, "involution must be an n x n matrix over " + ring.name());
    impl->involution = std::move(involution);
    const Matrix &m = *impl->involution;
    if (!(m * m == Matrix::identity(ring, n))) throw Error(ErrorCode::NotAnInvolution, "does not square to identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (star(basis_product(i, j)) != multiply(m.col(j), m.col(i)))
          throw Error(ErrorCode::NotAnInvolution,
                      "(" + impl->labels[i] + impl->labels[j] + ")* differs from " + impl->labels[j] + "*" +
                          impl->labels[i] + "*");
  }
}

Algebra Algebra::from_dense(ScalarRing ring, std::vector<std::string> labels, const std::vector<std::vector<Vec>> &table,
                            std::optional<Vec> unit, std::optional<Matrix> involution) {
  std::size_t n = labels.size();
  if (table.size() != n) throw Error(ErrorCode::InvalidTable, "table has wrong row count");
  std::vector<std::vector<Term>> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::InvalidTable, "table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != n) throw Error(ErrorCode::InvalidTable, "product vector has wrong length");
      products.push_back(terms_of(ring, table[i][j]));
    }
  }
  return Algebra(std::move(ring), std::move(labels), std::move(products), std::move(unit), std::move(involution));
}

const ScalarRing &Algebra::ring() const { return impl_->ring; }
std::size_t Algebra::dim() const { return impl_->n; }
const std::vector<std::string> &Algebra::labels() const { return impl_->labels; }
const std::optional<Vec> &Algebra::unit() const { return impl_->unit; }
const std::optional<Matrix> &Algebra::involution() const { return impl_->involution; }

const std::vector<Term> &Algebra::terms(std::size_t i, std::size_t j) const { return impl_->products[i * impl_->n + j]; }

Scalar Algebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto &t : terms(i, j))
    if (t.k == k) return t.c;
  return ring().zero();
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v = zero_vec(ring(), dim());
  for (const auto &t : terms(i, j)) v[t.k] = t.c;
  return v;
}

Vec Algebra::multiply(const Vec &a, const Vec &b) const {
  const ScalarRing &r = ring();
  std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorCode::DimensionMismatch, "element length");
  Vec out = zero_vec(r, n);
  std::vector<std::size_t> nzb;
  for (std::size_t j = 0; j < n; ++j)
    if (!r.is_zero(b[j])) nzb.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j : nzb) {
      const auto &ts = impl_->products[i * n + j];
      if (ts.empty()) continue;
      Scalar ab = r.mul(a[i], b[j]);
      for (const auto &t : ts) out[t.k] = r.add(out[t.k], r.mul(ab, t.c));
    }
  }
  return out;
}

Vec Algebra::star(const Vec &a) const {
  if (!impl_->involution) throw Error(ErrorCode::MissingInvolution, "algebra has no involution");
  return impl_->involution->apply(a);
}

Matrix Algebra::left_mult(const Vec &a) const {
  std::size_t n = dim();
  Matrix m(ring(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = multiply(a, basis(j));
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = c[i];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec &a) const {
  std::size_t n = dim();
  Matrix m(ring(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = multiply(basis(j), a);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = c[i];
  }
  return m;
}

bool Algebra::is_associative() const {
  std::call_once(impl_->assoc_once, [this] {
    const ScalarRing &r = ring();
    std::size_t n = dim();
    std::vector<Scalar> lhs(n, r.zero()), rhs(n, r.zero());
    std::vector<std::uint32_t> touched;
    auto accumulate = [&](std::vector<Scalar> &acc, const Scalar &c, const std::vector<Term> &terms) {
      for (const auto &t : terms) {
        acc[t.k] = r.add(acc[t.k], r.mul(c, t.c));
        touched.push_back(t.k);
      }
    };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k) {
          for (const auto &t : terms(i, j)) accumulate(lhs, t.c, terms(t.k, k));
          for (const auto &t : terms(j, k)) accumulate(rhs, t.c, terms(i, t.k));
          for (auto m : touched) {
            if (lhs[m] != rhs[m] && !r.is_zero(r.sub(lhs[m], rhs[m]))) ok = false;
            lhs[m] = r.zero();
            rhs[m] = r.zero();
          }
          touched.clear();
        }
    impl_->assoc = ok;
  });
  return impl_->assoc;
}

bool Algebra::is_commutative() const {
  std::call_once(impl_->comm_once, [this] {
    std::size_t n = dim();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (basis_product(i, j) != basis_product(j, i)) ok = false;
    impl_->comm = ok;
  });
  return impl_->comm;
}

bool Algebra::operator==(const Algebra &o) const {
  if (impl_ == o.impl_) return true;
  if (ring() != o.ring() || dim() != o.dim() || labels() != o.labels() || unit() != o.unit()) return false;
  if (involution().has_value() != o.involution().has_value()) return false;
  if (involution() && !(*involution() == *o.involution())) return false;
  for (std::size_t i = 0; i < impl_->products.size(); ++i) {
    const auto &a = impl_->products[i], &b = o.impl_->products[i];
    if (a.size() != b.size()) return false;
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t].k != b[t].k || a[t].c != b[t].c) return false;
  }
  return true;
}

Element::Element(Algebra algebra, Vec coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) throw Error(ErrorCode::DimensionMismatch, "element length");
}

Element Element::basis(const Algebra &a, std::size_t i) { return Element(a, a.basis(i)); }
Element Element::zero(const Algebra &a) { return Element(a, zero_vec(a.ring(), a.dim())); }

Element Element::one(const Algebra &a) {
  if (!a.unit()) throw Error(ErrorCode::MissingUnit, "algebra has no unit");
  return Element(a, *a.unit());
}

bool Element::is_zero() const { return is_zero_vec(algebra_.ring(), coords_); }
std::string Element::to_string() const { return format_vec(algebra_, coords_); }

void Element::check(const Element &o) const {
  if (!(algebra_ == o.algebra_)) throw Error(ErrorCode::DimensionMismatch, "elements of different algebras");
}

Element Element::operator+(const Element &o) const {
  check(o);
  return Element(algebra_, vec_add(algebra_.ring(), coords_, o.coords_));
}

Element Element::operator-(const Element &o) const {
  check(o);
  return Element(algebra_, vec_sub(algebra_.ring(), coords_, o.coords_));
}

Element Element::operator-() const { return Element(algebra_, vec_scale(algebra_.ring(), algebra_.ring().neg(algebra_.ring().one()), coords_)); }

Element Element::operator*(const Element &o) const {
  check(o);
  return Element(algebra_, algebra_.multiply(coords_, o.coords_));
}

Element Element::scaled(const Scalar &c) const { return Element(algebra_, vec_scale(algebra_.ring(), c, coords_)); }

bool Element::operator==(const Element &o) const { return algebra_ == o.algebra_ && coords_ == o.coords_; }

Element multiply(const Element &a, const Element &b) { return a * b; }
Element associator(const Element &a, const Element &b, const Element &c) { return (a * b) * c - a * (b * c); }
Element commutator(const Element &a, const Element &b) { return a * b - b * a; }

Vec associator(const Algebra &A, const Vec &a, const Vec &b, const Vec &c) {
  return vec_sub(A.ring(), A.multiply(A.multiply(a, b), c), A.multiply(a, A.multiply(b, c)));
}

Vec commutator(const Algebra &A, const Vec &a, const Vec &b) {
  return vec_sub(A.ring(), A.multiply(a, b), A.multiply(b, a));
}

std::string format_vec(const Algebra &A, const Vec &v) {
  const ScalarRing &r = A.ring();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (r.is_zero(v[i])) continue;
    std::string c = r.format(v[i]);
    if (c.find_first_of(" +") != std::string::npos || (c.find('-', 1) != std::string::npos)) c = "(" + c + ")";
    if (!out.empty()) out += " + ";
    out += (r.is_one(v[i]) ? std::string() : c + "*") + A.labels()[i];
  }
  return out.empty() ? "0" : out;
}

bool is_associative(const Algebra &A) { return A.is_associative(); }
bool is_commutative(const Algebra &A) { return A.is_commutative(); }

std::optional<Vec> find_unit(const Algebra &A) {
  const ScalarRing &r = A.ring();
  std::size_t n = A.dim();
  // Unknown u: sum_j u_j e_j e_i = e_i and sum_j u_j e_i e_j = e_i.
  Matrix m(r, 2 * n * n, n);
  Vec rhs = zero_vec(r, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto &t : A.terms(j, i)) m.at(i * n + t.k, j) = t.c;
      for (const auto &t : A.terms(i, j)) m.at(n * n + i * n + t.k, j) = t.c;
    }
    rhs[i * n + i] = r.one();
    rhs[n * n + i * n + i] = r.one();
  }
  auto u = solve(m, rhs);
  if (!u) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (A.multiply(*u, A.basis(i)) != A.basis(i) || A.multiply(A.basis(i), *u) != A.basis(i)) return std::nullopt;
  return u;
}

Algebra tensor_product(const Algebra &A, const Algebra &B) {
  if (A.ring() != B.ring()) throw Error(ErrorCode::ScalarMismatch, "tensor factors over different scalars");
  const ScalarRing &r = A.ring();
  std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
  if (n > limits().max_dim) throw Error(ErrorCode::DimensionTooLarge, "tensor product of dimension " + std::to_string(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(A.labels()[i] + "⊗" + B.labels()[j]);
  std::vector<std::vector<Term>> products(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          auto &out = products[(i * nb + j) * n + (i2 * nb + j2)];
          for (const auto &ta : A.terms(i, i2))
            for (const auto &tb : B.terms(j, j2))
              out.push_back({static_cast<std::uint32_t>(ta.k * nb + tb.k), r.mul(ta.c, tb.c)});
        }
  std::optional<Vec> unit;
  if (A.unit() && B.unit()) {
    unit = zero_vec(r, n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) (*unit)[i * nb + j] = r.mul((*A.unit())[i], (*B.unit())[j]);
  }
  std::optional<Matrix> inv;
  if (A.involution() && B.involution()) {
    inv = Matrix(r, n, n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i2 = 0; i2 < na; ++i2)
          for (std::size_t j2 = 0; j2 < nb; ++j2)
            inv->at(i * nb + j, i2 * nb + j2) = r.mul(A.involution()->at(i, i2), B.involution()->at(j, j2));
  }
  return Algebra(r, std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

Algebra direct_sum(const Algebra &A, const Algebra &B) {
  if (A.ring() != B.ring()) throw Error(ErrorCode::ScalarMismatch, "summands over different scalars");
  const ScalarRing &r = A.ring();
  std::size_t na = A.dim(), nb = B.dim(), n = na + nb;
  std::vector<std::string> labels;
  for (const auto &l : A.labels()) labels.push_back("1:" + l);
  for (const auto &l : B.labels()) labels.push_back("2:" + l);
  std::vector<std::vector<Term>> products(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) products[i * n + j] = A.terms(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (const auto &t : B.terms(i, j))
        products[(na + i) * n + na + j].push_back({static_cast<std::uint32_t>(na + t.k), t.c});
  std::optional<Vec> unit;
  if (A.unit() && B.unit()) {
    unit = *A.unit();
    unit->insert(unit->end(), B.unit()->begin(), B.unit()->end());
  }
  std::optional<Matrix> inv;
  if (A.involution() && B.involution()) {
    inv = Matrix(r, n, n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) inv->at(i, j) = A.involution()->at(i, j);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) inv->at(na + i, na + j) = B.involution()->at(i, j);
  }
  return Algebra(r, std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

Algebra with_basis(const Algebra &A, const std::vector<Vec> &rows, std::vector<std::string> labels) {
  const ScalarRing &r = A.ring();
  std::size_t n = A.dim();
  if (rows.size() != n || labels.size() != n) throw Error(ErrorCode::DimensionMismatch, "basis change needs n rows");
  // coordinates of v in the new basis solve P^T c = v.
  Matrix pt = Matrix::from_rows(r, rows, n).transpose();
  Matrix inv(r, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto c = solve(pt, A.basis(i));
    if (!c) throw Error(ErrorCode::InvalidTable, "basis change is not invertible");
    for (std::size_t k = 0; k < n; ++k) inv.at(k, i) = (*c)[k];
  }
  if (!(inv * pt == Matrix::identity(r, n))) throw Error(ErrorCode::InvalidTable, "basis change is not invertible");
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = inv.apply(A.multiply(rows[a], rows[b]));
  std::optional<Vec> unit;
  if (A.unit()) unit = inv.apply(*A.unit());
  std::optional<Matrix> invol;
  if (A.involution()) invol = inv * (*A.involution()) * pt;
  return Algebra::from_dense(r, std::move(labels), table, std::move(unit), std::move(invol));
}

namespace {

Vec free_coordinates(const Subspace &U, const Vec &v) {
  auto c = U.coordinates(v);
  if (!c) throw Error(ErrorCode::NotASubspace, "product leaves the subspace");
  return *c;
}

}  // namespace

Algebra subalgebra(const Algebra &A, const Subspace &U, std::vector<std::string> labels) {
  const ScalarRing &r = A.ring();
  for (std::size_t i = 0; i < U.rank(); ++i)
    if (!r.is_one(U.basis()[i][U.pivots()[i]]))
      throw Error(ErrorCode::UnsupportedScalars, "subalgebra needs a free sub-module");
  std::size_t m = U.rank();
  if (labels.empty())
    for (std::size_t i = 0; i < m; ++i) labels.push_back("u" + std::to_string(i));
  std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = free_coordinates(U, A.multiply(U.basis()[a], U.basis()[b]));
  std::optional<Vec> unit;
  if (A.unit() && U.contains(*A.unit())) unit = free_coordinates(U, *A.unit());
  return Algebra::from_dense(r, std::move(labels), table, std::move(unit));
}

Algebra adjoin_unit(const Algebra &A) {
  const ScalarRing &r = A.ring();
  std::size_t n = A.dim() + 1;
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), A.labels().begin(), A.labels().end());
  std::vector<std::vector<Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    products[i] = {{static_cast<std::uint32_t>(i), r.one()}};
    products[i * n] = {{static_cast<std::uint32_t>(i), r.one()}};
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (const auto &t : A.terms(i - 1, j - 1)) products[i * n + j].push_back({t.k + 1, t.c});
  std::optional<Matrix> inv;
  if (A.involution()) {
    inv = Matrix(r, n, n);
    inv->at(0, 0) = r.one();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) inv->at(i, j) = A.involution()->at(i - 1, j - 1);
  }
  return Algebra(r, std::move(labels), std::move(products), unit_vec(r, n, 0), std::move(inv));
}

Subspace subspace_product(const Algebra &A, const Subspace &U, const Subspace &V) {
  std::vector<Vec> gens;
  for (const auto &u : U.basis())
    for (const auto &v : V.basis()) gens.push_back(A.multiply(u, v));
  return Subspace::span(A.ring(), A.dim(), gens);
}

Subspace ideal_generated_by(const Algebra &A, const std::vector<Vec> &gens) {
  Subspace I = Subspace::span(A.ring(), A.dim(), gens);
  for (;;) {
    std::vector<Vec> next = I.basis();
    for (const auto &v : I.basis())
      for (std::size_t i = 0; i < A.dim(); ++i) {
        next.push_back(A.multiply(A.basis(i), v));
        next.push_back(A.multiply(v, A.basis(i)));
      }
    Subspace J = Subspace::span(A.ring(), A.dim(), next);
    if (J == I) return I;
    I = std::move(J);
  }
}

bool is_left_ideal(const Algebra &A, const Subspace &I) {
  for (const auto &v : I.basis())
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (!I.contains(A.multiply(A.basis(i), v))) return false;
  return true;
}

bool is_right_ideal(const Algebra &A, const Subspace &I) {
  for (const auto &v : I.basis())
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (!I.contains(A.multiply(v, A.basis(i)))) return false;
  return true;
}

bool is_two_sided_ideal(const Algebra &A, const Subspace &I) { return is_left_ideal(A, I) && is_right_ideal(A, I); }

std::optional<int> nilpotency_index(const Algebra &A, const Subspace &U) {
  if (U.is_zero()) return 1;
  Subspace p = U;
  int k = 1;
  std::size_t cap = 4 * A.dim() + 8;
  while (!p.is_zero()) {
    Subspace next = subspace_product(A, p, U);
    if (next == p || static_cast<std::size_t>(k) > cap) return std::nullopt;
    p = std::move(next);
    ++k;
  }
  return k;
}

Quotient quotient_by_ideal(const Algebra &A, const Subspace &I) {
  const ScalarRing &r = A.ring();
  if (!r.is_field()) throw Error(ErrorCode::UnsupportedScalars, "quotients need field scalars");
  if (I.ambient() != A.dim()) throw Error(ErrorCode::DimensionMismatch, "ideal ambient");
  if (!is_two_sided_ideal(A, I)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");
  std::size_t n = A.dim();
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(I.pivots().begin(), I.pivots().end(), j) == I.pivots().end()) complement.push_back(j);
  std::size_t m = complement.size();
  Matrix proj(r, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec red = I.reduce(A.basis(j));
    for (std::size_t a = 0; a < m; ++a) proj.at(a, j) = red[complement[a]];
  }
  std::vector<std::string> labels;
  for (auto c : complement) labels.push_back(A.labels()[c]);
  std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = proj.apply(A.basis_product(complement[a], complement[b]));
  std::optional<Vec> unit;
  if (A.unit()) unit = proj.apply(*A.unit());
  Algebra q = Algebra::from_dense(r, std::move(labels), table, std::move(unit));
  return Quotient{q, proj, complement};
}

}  // namespace celab
