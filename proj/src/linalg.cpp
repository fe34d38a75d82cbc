#include "celab/linalg.hpp"

#include "celab/error.hpp"

#include <algorithm>
#include <numeric>

namespace celab {

Vec zero_vec(const ScalarRing &ring, std::size_t n) { return Vec(n, ring.zero()); }

Vec unit_vec(const ScalarRing &ring, std::size_t n, std::size_t i) {
  Vec v = zero_vec(ring, n);
  v[i] = ring.one();
  return v;
}

bool is_zero_vec(const ScalarRing &ring, const Vec &v) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar &s) { return ring.is_zero(s); });
}

Vec vec_add(const ScalarRing &ring, const Vec &a, const Vec &b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const ScalarRing &ring, const Vec &a, const Vec &b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const ScalarRing &ring, const Scalar &c, const Vec &a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.mul(c, a[i]);
  return r;
}

void vec_axpy(const ScalarRing &ring, Vec &a, const Scalar &c, const Vec &b) {
  if (ring.is_zero(c)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ring.is_zero(b[i])) a[i] = ring.add(a[i], ring.mul(c, b[i]));
}

Matrix::Matrix(ScalarRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

Matrix Matrix::from_rows(ScalarRing ring, const std::vector<Vec> &rows, std::size_t cols) {
  Matrix m(std::move(ring), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(ScalarRing ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = at(i, k);
      if (ring_.is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!ring_.is_zero(o.at(k, j))) r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(a, o.at(k, j)));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.sub(data_[i], o.data_[i]);
  return r;
}

Vec Matrix::apply(const Vec &x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vec r = zero_vec(ring_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (ring_.is_zero(x[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!ring_.is_zero(at(i, j))) r[i] = ring_.add(r[i], ring_.mul(at(i, j), x[j]));
  }
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Scalar &s) { return ring_.is_zero(s); });
}

namespace {

using IntRow = std::vector<std::int64_t>;

bool int_path(const ScalarRing &ring) {
  return ring.kind() == ScalarKind::PrimeField || ring.kind() == ScalarKind::ResidueRing;
}

// Returns g = gcd(a, b) >= 0 with s*a + t*b = g.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t &s, std::int64_t &t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t r = a - q * b;
    a = b;
    b = r;
    std::int64_t ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = s1;
    s1 = ns;
    t0 = t1;
    t1 = nt;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

bool zero_row(const IntRow &r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

// Howell normal form over Z_n (reduced echelon form when n is prime).
std::vector<IntRow> howell(std::vector<IntRow> rows, std::size_t ncols, std::int64_t n) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), zero_row), rows.end());
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      std::int64_t b = rows[i][col];
      if (b == 0) continue;
      std::int64_t a = rows[r][col];
      if (a == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      std::int64_t s, t;
      std::int64_t g = xgcd(a, b, s, t);
      std::int64_t u = upoly::mod(-(b / g), n), v = upoly::mod(a / g, n);
      s = upoly::mod(s, n);
      t = upoly::mod(t, n);
      IntRow &ra = rows[r], &rb = rows[i];
      for (std::size_t j = col; j < ncols; ++j) {
        std::int64_t x = ra[j], y = rb[j];
        ra[j] = (s * x + t * y) % n;
        rb[j] = (u * x + v * y) % n;
      }
    }
    if (rows[r][col] == 0) continue;
    std::int64_t a = rows[r][col];
    std::int64_t g = std::gcd(a, n);
    if (g != a) {
      // Unit u with u*a = g (mod n).
      std::int64_t np = n / g;
      std::int64_t u0 = np == 1 ? 0 : upoly::inv_mod((a / g) % np, np);
      std::int64_t u = u0;
      for (std::int64_t k = 0; k < g; ++k) {
        u = u0 + k * np;
        if (std::gcd(u, n) == 1) break;
      }
      for (std::size_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] * u % n;
    }
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t q = rows[i][col] / g;
      if (q == 0) continue;
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] = upoly::mod(rows[i][j] - q * rows[r][j], n);
    }
    if (g != 1) {
      IntRow extra(ncols, 0);
      std::int64_t d = n / g;
      for (std::size_t j = col; j < ncols; ++j) extra[j] = rows[r][j] * d % n;
      if (!zero_row(extra)) rows.push_back(std::move(extra));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

std::size_t first_nonzero(const ScalarRing &ring, const Vec &v) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!ring.is_zero(v[j])) return j;
  return v.size();
}

Echelon echelon(const ScalarRing &ring, const std::vector<Vec> &in, std::size_t ncols) {
  Echelon out;
  if (int_path(ring)) {
    std::int64_t n = ring.spec().modulus;
    std::vector<IntRow> rows;
    rows.reserve(in.size());
    for (const auto &v : in) {
      IntRow r(ncols);
      for (std::size_t j = 0; j < ncols; ++j) r[j] = std::get<std::int64_t>(v[j]);
      rows.push_back(std::move(r));
    }
    for (auto &r : howell(std::move(rows), ncols, n)) {
      Vec v(ncols);
      for (std::size_t j = 0; j < ncols; ++j) v[j] = r[j];
      out.pivots.push_back(first_nonzero(ring, v));
      out.rows.push_back(std::move(v));
    }
    return out;
  }
  if (!ring.is_field()) throw Error(ErrorCode::UnsupportedScalars, "linear algebra over " + ring.name());
  std::vector<Vec> rows;
  for (const auto &v : in)
    if (!is_zero_vec(ring, v)) rows.push_back(v);
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && ring.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = ring.invert(rows[r][col]);
    if (!ring.is_one(inv))
      for (std::size_t j = col; j < ncols; ++j) rows[r][j] = ring.mul(inv, rows[r][j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || ring.is_zero(rows[i][col])) continue;
      Scalar f = ring.neg(rows[i][col]);
      for (std::size_t j = col; j < ncols; ++j)
        if (!ring.is_zero(rows[r][j])) rows[i][j] = ring.add(rows[i][j], ring.mul(f, rows[r][j]));
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

// Quotient that eliminates v[c] against pivot value g (1 over fields).
Scalar elimination_factor(const ScalarRing &ring, const Scalar &vc, const Scalar &g) {
  if (int_path(ring)) return std::get<std::int64_t>(vc) / std::get<std::int64_t>(g);
  return vc;
}

}  // namespace

Subspace::Subspace(ScalarRing ring, std::size_t ambient) : ring_(std::move(ring)), ambient_(ambient) {}

Subspace Subspace::span(ScalarRing ring, std::size_t ambient, const std::vector<Vec> &generators) {
  for (const auto &g : generators)
    if (g.size() != ambient) throw Error(ErrorCode::DimensionMismatch, "generator length");
  Subspace s(ring, ambient);
  Echelon e = echelon(ring, generators, ambient);
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(ScalarRing ring, std::size_t ambient) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vec(ring, ambient, i));
  return span(ring, ambient, gens);
}

Vec Subspace::reduce(const Vec &v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "vector length");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (ring_.is_zero(r[c])) continue;
    Scalar q = elimination_factor(ring_, r[c], rows_[i][c]);
    vec_axpy(ring_, r, ring_.neg(q), rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec &v) const { return is_zero_vec(ring_, reduce(v)); }

bool Subspace::is_subspace_of(const Subspace &o) const {
  if (o.ambient_ != ambient_ || o.ring_ != ring_) throw Error(ErrorCode::DimensionMismatch, "ambient mismatch");
  return std::all_of(rows_.begin(), rows_.end(), [&](const Vec &r) { return o.contains(r); });
}

std::optional<Vec> Subspace::coordinates(const Vec &v) const {
  Vec r = v;
  Vec coeffs = zero_vec(ring_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (ring_.is_zero(r[c])) continue;
    Scalar q = elimination_factor(ring_, r[c], rows_[i][c]);
    coeffs[i] = q;
    vec_axpy(ring_, r, ring_.neg(q), rows_[i]);
  }
  if (!is_zero_vec(ring_, r)) return std::nullopt;
  return coeffs;
}

namespace {

// Additive generators of the span together with their additive orders.
std::vector<std::pair<Vec, std::uint64_t>> additive_generators(const ScalarRing &ring, const std::vector<Vec> &rows,
                                                               const std::vector<std::size_t> &pivots) {
  std::vector<std::pair<Vec, std::uint64_t>> gens;
  const auto &s = ring.spec();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (int_path(ring)) {
      std::int64_t g = std::get<std::int64_t>(rows[i][pivots[i]]);
      gens.push_back({rows[i], static_cast<std::uint64_t>(s.modulus / g)});
    } else {
      // F_p-basis 1, t, t^2, ... of GF(p^k); code p^j is t^j.
      std::uint64_t code = 1;
      for (int j = 0; j < s.degree; ++j) {
        gens.push_back({vec_scale(ring, ring.from_code(code), rows[i]), static_cast<std::uint64_t>(s.modulus)});
        code *= static_cast<std::uint64_t>(s.modulus);
      }
    }
  }
  return gens;
}

}  // namespace

std::uint64_t Subspace::cardinality() const {
  if (!ring_.is_finite()) return 0;
  std::uint64_t total = 1;
  for (const auto &[v, order] : additive_generators(ring_, rows_, pivots_)) {
    if (total > (std::uint64_t(1) << 62) / order) return 0;
    total *= order;
  }
  return total;
}

void Subspace::for_each_element(const std::function<void(const Vec &)> &f) const {
  if (!ring_.is_finite()) throw Error(ErrorCode::UnsupportedScalars, "enumeration over " + ring_.name());
  auto gens = additive_generators(ring_, rows_, pivots_);
  std::vector<Vec> wrap;
  for (const auto &[v, order] : gens) wrap.push_back(vec_scale(ring_, ring_.from_int(static_cast<std::int64_t>(order)), v));
  std::vector<std::uint64_t> digit(gens.size(), 0);
  Vec cur = zero_vec(ring_, ambient_);
  for (;;) {
    f(cur);
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      cur = vec_add(ring_, cur, gens[i].first);
      if (++digit[i] < gens[i].second) break;
      digit[i] = 0;
      cur = vec_sub(ring_, cur, wrap[i]);
    }
    if (i == gens.size()) return;
  }
}

bool Subspace::operator==(const Subspace &o) const {
  return ambient_ == o.ambient_ && ring_ == o.ring_ && rows_ == o.rows_;
}

Subspace canonicalize(const Matrix &rows) { return Subspace::span(rows.ring(), rows.cols(), rows.row_list()); }

Subspace kernel(const Matrix &a) {
  const ScalarRing &ring = a.ring();
  std::size_t n = a.cols();
  Subspace rowspace = canonicalize(a);
  std::size_t h = rowspace.rank();
  if (h == 0) return Subspace::whole(ring, n);
  std::vector<Vec> aug;
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = zero_vec(ring, h + n);
    for (std::size_t i = 0; i < h; ++i) r[i] = rowspace.basis()[i][j];
    r[h + j] = ring.one();
    aug.push_back(std::move(r));
  }
  Echelon e = echelon(ring, aug, h + n);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    if (e.pivots[i] >= h) gens.emplace_back(e.rows[i].begin() + h, e.rows[i].end());
  return Subspace::span(ring, n, gens);
}

Subspace image(const Matrix &a) { return canonicalize(a.transpose()); }

std::optional<Vec> solve(const Matrix &a, const Vec &b) {
  const ScalarRing &ring = a.ring();
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  std::vector<Vec> aug;
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = zero_vec(ring, m + n);
    for (std::size_t i = 0; i < m; ++i) r[i] = a.at(i, j);
    r[m + j] = ring.one();
    aug.push_back(std::move(r));
  }
  Echelon e = echelon(ring, aug, m + n);
  Vec w = zero_vec(ring, m + n);
  for (std::size_t i = 0; i < m; ++i) w[i] = b[i];
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    std::size_t c = e.pivots[i];
    if (c >= m) break;
    if (ring.is_zero(w[c])) continue;
    Scalar q = elimination_factor(ring, w[c], e.rows[i][c]);
    vec_axpy(ring, w, ring.neg(q), e.rows[i]);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!ring.is_zero(w[i])) return std::nullopt;
  Vec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = ring.neg(w[m + j]);
  return x;
}

Subspace subspace_sum(const Subspace &u, const Subspace &v) {
  if (u.ambient() != v.ambient() || u.ring() != v.ring()) throw Error(ErrorCode::DimensionMismatch, "ambient mismatch");
  std::vector<Vec> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ring(), u.ambient(), gens);
}

Subspace subspace_intersect(const Subspace &u, const Subspace &v) {
  if (u.ambient() != v.ambient() || u.ring() != v.ring()) throw Error(ErrorCode::DimensionMismatch, "ambient mismatch");
  const ScalarRing &ring = u.ring();
  std::size_t n = u.ambient();
  if (u.is_zero() || v.is_zero()) return Subspace(ring, n);
  std::vector<Vec> rows;
  for (const auto &b : u.basis()) {
    Vec r = b;
    r.insert(r.end(), b.begin(), b.end());
    rows.push_back(std::move(r));
  }
  for (const auto &b : v.basis()) {
    Vec r = b;
    r.resize(2 * n, ring.zero());
    rows.push_back(std::move(r));
  }
  Echelon e = echelon(ring, rows, 2 * n);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    if (e.pivots[i] >= n) gens.emplace_back(e.rows[i].begin() + n, e.rows[i].end());
  return Subspace::span(ring, n, gens);
}

bool contains(const Subspace &u, const Vec &v) { return u.contains(v); }

bool is_subspace_of(const Subspace &u, const Subspace &v) { return u.is_subspace_of(v); }

}  // namespace celab
