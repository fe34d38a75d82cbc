#include "celab/builders.hpp"

#include "celab/error.hpp"
#include "celab/limits.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace celab {

namespace {

std::vector<std::vector<Term>> empty_products(std::size_t n) { return std::vector<std::vector<Term>>(n * n); }

void add_term(const ScalarRing &F, std::vector<Term> &terms, std::uint32_t k, const Scalar &c) {
  if (F.is_zero(c)) return;
  for (auto &t : terms) {
    if (t.k == k) {
      t.c = F.add(t.c, c);
      return;
    }
  }
  terms.push_back({k, c});
}

std::vector<Term> to_terms(const ScalarRing &F, const Vec &v) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!F.is_zero(v[k])) out.push_back({static_cast<std::uint32_t>(k), v[k]});
  return out;
}


std::string subset_label(const std::vector<int> &s) {
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += "∧";
    out += "e" + std::to_string(s[i]);
  }
  return out;
}

/// Sign of the permutation sorting the concatenation of two sorted index lists.
int merge_sign(const std::vector<int> &a, const std::vector<int> &b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return inversions % 2 ? -1 : 1;
}

bool is_central_in(const Algebra &A, const Vec &a) {
  const auto &F = A.ring();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (!is_zero_vec(F, commutator(A, a, A.basis(i)))) return false;
  }
  if (A.is_associative()) return true;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      auto x = A.basis(i), y = A.basis(j);
      if (!is_zero_vec(F, associator(A, a, x, y)) || !is_zero_vec(F, associator(A, x, a, y)) ||
          !is_zero_vec(F, associator(A, x, y, a)))
        return false;
    }
  }
  return true;
}

Vec scalar_multiple_of_unit(const Algebra &A, const Scalar &c) { return vec_scale(A.ring(), c, *A.unit()); }

}  // namespace

GroupAlgebraInfo group_algebra(const ScalarRing &F, const FiniteGroup &G) {
  std::size_t n = G.order();
  if (n > limits().max_dim)
    throw Error(ErrorCode::DimensionTooLarge, "group of order " + std::to_string(n) + " exceeds the dimension cap");
  auto products = empty_products(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products[i * n + j].push_back({G.mul(static_cast<Index>(i), static_cast<Index>(j)), F.one()});
  Algebra A(F, G.labels(), std::move(products), unit_vec(F, n, G.identity()));
  std::vector<Vec> class_sums;
  for (const auto &cls : conjugacy_classes(G)) {
    Vec v = zero_vec(F, n);
    for (Index g : cls) v[g] = F.one();
    class_sums.push_back(std::move(v));
  }
  std::vector<Vec> aug;
  for (std::size_t g = 0; g < n; ++g) {
    if (g == G.identity()) continue;
    Vec v = zero_vec(F, n);
    v[g] = F.one();
    v[G.identity()] = F.neg(F.one());
    aug.push_back(std::move(v));
  }
  return {A, G, std::move(class_sums), Subspace::span(F, n, aug)};
}

Algebra monoid_algebra(const ScalarRing &F, const std::vector<std::string> &labels,
                       const std::vector<std::vector<std::size_t>> &table) {
  std::size_t n = labels.size();
  if (table.size() != n) throw Error(ErrorCode::NotAMonoid, "table has wrong number of rows");
  for (const auto &row : table) {
    if (row.size() != n) throw Error(ErrorCode::NotAMonoid, "table row has wrong length");
    for (auto v : row)
      if (v >= n) throw Error(ErrorCode::NotAMonoid, "table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::NotAMonoid, "not associative at (" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")");
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw Error(ErrorCode::NotAMonoid, "no identity element");
  auto products = empty_products(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products[i * n + j].push_back({static_cast<std::uint32_t>(table[i][j]), F.one()});
  return Algebra(F, labels, std::move(products), unit_vec(F, n, *e));
}

Algebra grassmann(const ScalarRing &F, int n) {
  if (n < 0 || n > 6) throw Error(ErrorCode::UnsupportedParameter, "grassmann needs 0 <= n <= 6");
  std::vector<std::vector<int>> subsets;
  for (int size = 0; size <= n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i + 1);
      subsets.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::map<std::vector<int>, std::uint32_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    index[subsets[i]] = static_cast<std::uint32_t>(i);
    labels.push_back(subset_label(subsets[i]));
  }
  std::size_t dim = subsets.size();
  auto products = empty_products(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const auto &a = subsets[i], &b = subsets[j];
      std::vector<int> merged;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
      if (merged.size() != a.size() + b.size()) continue;
      products[i * dim + j].push_back({index[merged], F.from_int(limits().flip_grassmann_sign ? 1 : merge_sign(a, b))});
    }
  }
  return Algebra(F, labels, std::move(products), unit_vec(F, dim, 0));
}

Algebra grassmann_over(const Algebra &A, int n) { return tensor_product(A, grassmann(A.ring(), n)); }

Algebra scalar_algebra(const ScalarRing &K) {
  auto products = empty_products(1);
  products[0].push_back({0, K.one()});
  return Algebra(K, {"1"}, std::move(products), unit_vec(K, 1, 0), Matrix::identity(K, 1));
}

Algebra cayley_dickson(const Algebra &A, const Vec &alpha) {
  const auto &F = A.ring();
  std::size_t n = A.dim();
  if (!A.unit()) throw Error(ErrorCode::MissingUnit, "doubling needs a unital algebra");
  if (!A.involution()) throw Error(ErrorCode::MissingInvolution, "doubling needs an involution");
  if (2 * n > limits().max_dim) throw Error(ErrorCode::DimensionTooLarge, "doubled dimension exceeds the cap");
  if (alpha.size() != n) throw Error(ErrorCode::DimensionMismatch, "alpha has the wrong length");
  if (A.star(alpha) != alpha) throw Error(ErrorCode::AlphaNotSymmetric, "alpha* != alpha");
  if (!is_central_in(A, alpha)) throw Error(ErrorCode::AlphaNotCentral, "alpha is not central");
  if (!solve(A.left_mult(alpha), *A.unit())) throw Error(ErrorCode::AlphaNotUnit, "alpha is not invertible");

  auto products = empty_products(2 * n);
  auto put = [&](std::size_t i, std::size_t j, const Vec &v, std::size_t offset) {
    auto &cell = products[i * 2 * n + j];
    for (std::size_t k = 0; k < n; ++k) add_term(F, cell, static_cast<std::uint32_t>(k + offset), v[k]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = A.basis(i), ei_star = A.star(ei);
    for (std::size_t j = 0; j < n; ++j) {
      Vec ej = A.basis(j);
      put(i, j, A.multiply(ei, ej), 0);
      put(i, n + j, A.multiply(ei_star, ej), n);
      put(n + i, j, A.multiply(ej, ei), n);
      put(n + i, n + j, A.multiply(alpha, A.multiply(ej, ei_star)), 0);
    }
  }
  std::vector<std::string> labels;
  for (const auto &l : A.labels()) labels.push_back("(" + l + ",0)");
  for (const auto &l : A.labels()) labels.push_back("(0," + l + ")");
  Vec unit = zero_vec(F, 2 * n);
  for (std::size_t k = 0; k < n; ++k) unit[k] = (*A.unit())[k];
  Matrix inv(F, 2 * n, 2 * n);
  const Matrix &s = *A.involution();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      inv.at(r, c) = s.at(r, c);
      inv.at(n + r, n + c) = r == c ? F.neg(F.one()) : F.zero();
    }
  }
  return Algebra(F, std::move(labels), std::move(products), std::move(unit), std::move(inv));
}

Algebra quaternion_algebra(const ScalarRing &K, const Scalar &a, const Scalar &b) {
  Algebra A0 = scalar_algebra(K);
  Algebra A1 = cayley_dickson(A0, {a});
  Algebra A2 = cayley_dickson(A1, scalar_multiple_of_unit(A1, b));
  std::vector<Vec> rows = {A2.basis(0), A2.basis(1), A2.basis(2), vec_scale(K, K.neg(K.one()), A2.basis(3))};
  return with_basis(A2, rows, {"1", "i", "j", "k"});
}

Algebra octonion_algebra(const ScalarRing &K, const Scalar &a, const Scalar &b, const Scalar &c) {
  Algebra H = quaternion_algebra(K, a, b);
  Algebra O = cayley_dickson(H, scalar_multiple_of_unit(H, c));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < 5; ++i) rows.push_back(O.basis(i));
  for (std::size_t i = 5; i < 8; ++i) rows.push_back(vec_scale(K, K.neg(K.one()), O.basis(i)));
  return with_basis(O, rows, {"1", "i", "j", "k", "l", "il", "jl", "kl"});
}

Algebra matrix_pattern_algebra(const ScalarRing &F, std::size_t size, const std::vector<PatternMatrix> &basis,
                               std::vector<std::string> labels) {
  std::size_t n = basis.size();
  if (labels.size() != n) throw Error(ErrorCode::DimensionMismatch, "one label per basis matrix");
  std::size_t cells = size * size;
  auto dense = [&](const PatternMatrix &m) {
    Vec v = zero_vec(F, cells);
    for (const auto &[r, c, x] : m) {
      if (r >= size || c >= size) throw Error(ErrorCode::InvalidTable, "pattern entry outside the matrix");
      v[r * size + c] = F.add(v[r * size + c], x);
    }
    return v;
  };
  std::vector<Vec> flat;
  for (const auto &m : basis) flat.push_back(dense(m));
  Matrix cols(F, cells, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < cells; ++r) cols.at(r, j) = flat[j][r];
  if (kernel(cols).rank() != 0) throw Error(ErrorCode::InvalidTable, "pattern matrices are dependent");
  auto express = [&](const Vec &v, const std::string &what) {
    auto x = solve(cols, v);
    if (!x) throw Error(ErrorCode::NotASubspace, "pattern not closed under multiplication at " + what);
    return *x;
  };
  auto products = empty_products(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = zero_vec(F, cells);
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t k = 0; k < size; ++k) {
          if (F.is_zero(flat[i][r * size + k])) continue;
          for (std::size_t c = 0; c < size; ++c)
            prod[r * size + c] = F.add(prod[r * size + c], F.mul(flat[i][r * size + k], flat[j][k * size + c]));
        }
      products[i * n + j] = to_terms(F, express(prod, labels[i] + "*" + labels[j]));
    }
  }
  Vec id = zero_vec(F, cells);
  for (std::size_t r = 0; r < size; ++r) id[r * size + r] = F.one();
  std::optional<Vec> unit = solve(cols, id);
  return Algebra(F, std::move(labels), std::move(products), unit);
}

Algebra ce_matrix_family(const ScalarRing &F, int n, bool adjoin_identity) {
  if (n < 7) throw Error(ErrorCode::UnsupportedParameter, "matrix family needs n >= 7");
  if (!F.is_field()) throw Error(ErrorCode::UnsupportedScalars, "matrix family needs a field");
  auto one = F.one();
  auto E = [&](int r, int c) { return std::make_tuple(std::size_t(r - 1), std::size_t(c - 1), one); };
  std::vector<PatternMatrix> basis;
  std::vector<std::string> labels;
  for (int j = 2; j <= n; ++j) {
    PatternMatrix m{E(1, j)};
    if (j == 2) m.push_back(E(n - 2, n));
    if (j == 3) {
      m.push_back(E(2, 4));
      m.push_back(E(n - 1, n));
    }
    if (j == n - 2) m.push_back(E(2, n));
    if (j == n - 1) m.push_back(E(3, n));
    basis.push_back(std::move(m));
    labels.push_back("a1" + std::string(n >= 10 ? "," : "") + std::to_string(j));
  }
  Algebra A = matrix_pattern_algebra(F, n, basis, labels);
  return adjoin_identity ? adjoin_unit(A) : A;
}

Subspace ce_matrix_right_ideal(const Algebra &family) {
  const auto &F = family.ring();
  std::size_t offset = family.unit() ? 1 : 0;
  std::size_t params = family.dim() - offset;
  if (params < 6) throw Error(ErrorCode::UnsupportedParameter, "not a matrix family algebra");
  // a13 is parameter index 1, a1n the last.
  return Subspace::span(F, family.dim(),
                        {unit_vec(F, family.dim(), offset + 1), unit_vec(F, family.dim(), offset + params - 1)});
}

Algebra t_algebra(const ScalarRing &F, char variant, const Scalar &k) {
  auto one = F.one();
  auto E = [&](int r, int c, Scalar x) { return std::make_tuple(std::size_t(r - 1), std::size_t(c - 1), x); };
  PatternMatrix I{E(1, 1, one), E(2, 2, one), E(3, 3, one)};
  switch (variant) {
    case 'K':
      return matrix_pattern_algebra(F, 3, {I, {E(1, 3, one)}}, {"1", "z"});
    case 'R':
      return matrix_pattern_algebra(F, 3, {I, {E(1, 2, one)}, {E(1, 3, one)}}, {"1", "y", "z"});
    case 'S':
      return matrix_pattern_algebra(F, 3, {I, {E(1, 2, one), E(2, 3, k)}, {E(1, 3, one)}}, {"1", "y", "z"});
    case 'T':
      return matrix_pattern_algebra(F, 3, {I, {E(1, 2, one)}, {E(1, 3, one)}, {E(2, 3, one)}}, {"1", "y", "z", "t"});
    default:
      throw Error(ErrorCode::UnsupportedParameter, std::string("unknown variant '") + variant + "'");
  }
}

Algebra upper_triangular(const ScalarRing &F, int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedParameter, "size must be positive");
  std::vector<PatternMatrix> basis;
  std::vector<std::string> labels;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      basis.push_back({std::make_tuple(std::size_t(r), std::size_t(c), F.one())});
      labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    }
  return matrix_pattern_algebra(F, n, basis, labels);
}

Algebra skew_poly_quotient(std::int64_t q, int k) {
  if (k < 1) throw Error(ErrorCode::UnsupportedParameter, "k must be positive");
  std::int64_t p = 0;
  int m = 0;
  for (std::int64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0 || !is_prime(p)) throw Error(ErrorCode::UnsupportedParameter, "q must be a prime power");
  for (std::int64_t r = q; r > 1; r /= p) {
    if (r % p) throw Error(ErrorCode::UnsupportedParameter, "q must be a prime power");
    ++m;
  }
  ScalarRing Fp = ScalarRing::prime_field(p);
  ScalarRing Fq = ScalarRing::galois_field(p, m);
  std::size_t n = static_cast<std::size_t>(m) * k;
  if (n > limits().max_dim) throw Error(ErrorCode::DimensionTooLarge, "skew quotient too large");
  auto theta_pow = [&](int i) {
    std::uint64_t code = 1;
    for (int s = 0; s < i; ++s) code *= p;
    return Fq.from_code(code);
  };
  auto sigma = [&](Scalar x, int j) {
    for (int s = 0; s < j; ++s) x = Fq.frobenius(x);
    return x;
  };
  auto products = empty_products(n);
  std::vector<std::string> labels(n);
  auto idx = [&](int i, int j) { return static_cast<std::size_t>(j * m + i); };
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < m; ++i) {
      std::string th = i == 0 ? "" : (i == 1 ? "θ" : "θ^" + std::to_string(i));
      std::string xs = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
      labels[idx(i, j)] = th.empty() && xs.empty() ? "1" : th + xs;
    }
  }
  for (int j = 0; j < k; ++j)
    for (int a = 0; a < m; ++a)
      for (int l = 0; l < k; ++l)
        for (int b = 0; b < m; ++b) {
          if (j + l >= k) continue;
          std::uint64_t code = Fq.code(Fq.mul(theta_pow(a), sigma(theta_pow(b), j)));
          auto &cell = products[idx(a, j) * n + idx(b, l)];
          for (int d = 0; d < m; ++d, code /= p)
            add_term(Fp, cell, static_cast<std::uint32_t>(idx(d, j + l)), Fp.from_int(static_cast<std::int64_t>(code % p)));
        }
  return Algebra(Fp, std::move(labels), std::move(products), unit_vec(Fp, n, 0));
}

Algebra uniserial_derivation_ring(std::int64_t p) {
  if (p != 2 && p != 3) throw Error(ErrorCode::UnsupportedParameter, "uniserial ring supports p = 2 or 3");
  ScalarRing K = ScalarRing::rational_function_field(p, "u");
  const int P = static_cast<int>(p);
  std::size_t n = static_cast<std::size_t>(4 * P);
  auto idx = [&](int i, int j) { return static_cast<std::uint32_t>(i + P * j); };
  auto u = K.parse("u");
  std::vector<std::string> labels(n);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < P; ++i) {
      std::string ts = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      std::string xs = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
      labels[idx(i, j)] = ts.empty() && xs.empty() ? "1" : ts + xs;
    }
  auto products = empty_products(n);
  // c * t^e x^f with e < 2p reduced through t^p = u.
  auto emit = [&](std::vector<Term> &cell, Scalar c, int e, int f) {
    if (f >= 4) return;
    if (e >= P) {
      c = K.mul(c, u);
      e -= P;
    }
    add_term(K, cell, idx(e, f), c);
  };
  for (int a = 0; a < P; ++a)
    for (int j = 0; j < 4; ++j)
      for (int b = 0; b < P; ++b)
        for (int l = 0; l < 4; ++l) {
          auto &cell = products[idx(a, j) * n + idx(b, l)];
          emit(cell, K.one(), a + b, j + l);
          if (j == 1 && b > 0) emit(cell, K.from_int(b), a + b - 1, 3 + l);
        }
  return Algebra(K, std::move(labels), std::move(products), unit_vec(K, n, 0));
}

DerivationTriangularRing jelonek_triangular(std::int64_t base_modulus) {
  if (base_modulus != 0 && !is_prime(base_modulus))
    throw Error(ErrorCode::NonPrimeModulus, "base must be Z or a prime field");
  ScalarRing R = ScalarRing::polynomial_ring(base_modulus, {"x", "y"});
  return DerivationTriangularRing(R, "d/dx", "d/dy");
}

Algebra truncated_polynomial(const Algebra &A, int k) {
  if (k < 1) throw Error(ErrorCode::UnsupportedParameter, "k must be positive");
  const auto &F = A.ring();
  auto products = empty_products(k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    for (int j = 0; i + j < k; ++j) products[i * k + j].push_back({static_cast<std::uint32_t>(i + j), F.one()});
  }
  std::optional<Matrix> inv;
  if (A.involution()) inv = Matrix::identity(F, k);
  Algebra T(F, std::move(labels), std::move(products), unit_vec(F, k, 0), inv);
  return tensor_product(A, T);
}

Algebra zero_algebra(const ScalarRing &F, int n) {
  if (n < 1) throw Error(ErrorCode::UnsupportedParameter, "dimension must be positive");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("z" + std::to_string(i));
  return Algebra(F, std::move(labels), empty_products(n));
}

namespace {

// Non-unital subalgebra of M_k(F) generated by sparse random matrices, if it has dimension m.
std::optional<Algebra> random_matrix_subalgebra(const ScalarRing &F, std::size_t m, std::mt19937_64 &rng) {
  std::size_t k = 2 + rng() % 3;
  bool triangular = rng() % 2 == 0;
  std::size_t gens = 1 + rng() % 2;
  auto mat_mul = [&](const Vec &a, const Vec &b) {
    Vec c = zero_vec(F, k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        if (F.is_zero(a[i * k + l])) continue;
        for (std::size_t j = 0; j < k; ++j) c[i * k + j] = F.add(c[i * k + j], F.mul(a[i * k + l], b[l * k + j]));
      }
    return c;
  };
  std::vector<Vec> rows;
  for (std::size_t g = 0; g < gens; ++g) {
    Vec v = zero_vec(F, k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = triangular ? i : 0; j < k; ++j)
        if (rng() % 2) v[i * k + j] = F.random(rng);
    rows.push_back(v);
  }
  Subspace S = Subspace::span(F, k * k, rows);
  while (true) {
    if (S.rank() > m) return std::nullopt;
    std::vector<Vec> next = S.basis();
    for (const auto &a : S.basis())
      for (const auto &b : S.basis()) next.push_back(mat_mul(a, b));
    Subspace T = Subspace::span(F, k * k, next);
    if (T.rank() == S.rank()) break;
    S = T;
  }
  if (S.rank() != m) return std::nullopt;
  auto products = empty_products(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec c = *S.coordinates(mat_mul(S.basis()[i], S.basis()[j]));
      for (std::size_t l = 0; l < m; ++l) add_term(F, products[i * m + j], static_cast<std::uint32_t>(l), c[l]);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("g" + std::to_string(i));
  return Algebra(F, labels, std::move(products));
}

}  // namespace

Algebra random_unital_algebra(const ScalarRing &F, int dim, std::mt19937_64 &rng) {
  if (dim < 1 || dim > 8) throw Error(ErrorCode::UnsupportedParameter, "random algebra dimension must be in 1..8");
  if (!F.is_field() || !F.is_finite()) throw Error(ErrorCode::UnsupportedParameter, "random algebras need a finite field");
  if (dim == 1) return scalar_algebra(F);
  std::size_t m = static_cast<std::size_t>(dim - 1);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("g" + std::to_string(i));
  for (int attempt = 0; attempt < 200000; ++attempt) {
    if (attempt % 2 == 1) {
      if (auto A = random_matrix_subalgebra(F, m, rng)) return adjoin_unit(*A);
      continue;
    }
    auto products = empty_products(m);
    for (auto &cell : products)
      for (std::size_t k = 0; k < m; ++k) add_term(F, cell, static_cast<std::uint32_t>(k), F.random(rng));
    Algebra A(F, labels, std::move(products));
    if (A.is_associative()) return adjoin_unit(A);
  }
  throw Error(ErrorCode::UnsupportedParameter, "no associative table found");
}

Algebra exterior_plane_radical(const ScalarRing &F) {
  auto products = empty_products(3);
  products[0 * 3 + 1].push_back({2, F.one()});
  products[1 * 3 + 0].push_back({2, F.neg(F.one())});
  return Algebra(F, {"e1", "e2", "e1∧e2"}, std::move(products));
}

}  // namespace celab
