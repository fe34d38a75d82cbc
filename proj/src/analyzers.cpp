#include "celab/analyzers.hpp"

#include "celab/builders.hpp"
#include "celab/error.hpp"
#include "celab/limits.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

namespace celab {

const char *verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

const char *strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Enumerate: return "enumerate";
    case Strategy::PerElementLinear: return "per-element-linear";
    case Strategy::Socle: return "socle";
    case Strategy::UniserialCriterion: return "uniserial-criterion";
  }
  return "auto";
}

const char *flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Ce: return "ce";
    case Flavor::Strong: return "strong";
    case Flavor::Weak: return "weak";
    case Flavor::NEssential: return "n-essential";
    case Flavor::KEssential: return "k-essential";
  }
  return "ce";
}

Strategy parse_strategy(const std::string &name) {
  for (auto s : {Strategy::Auto, Strategy::Enumerate, Strategy::PerElementLinear, Strategy::Socle,
                 Strategy::UniserialCriterion})
    if (name == strategy_name(s)) return s;
  throw Error(ErrorCode::ParseError, "unknown strategy '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Subspace stacked_kernel(const ScalarRing &F, std::size_t n, const std::vector<Matrix> &blocks) {
  std::vector<Vec> rows;
  for (const auto &M : blocks)
    for (std::size_t r = 0; r < M.rows(); ++r) {
      Vec row = M.row(r);
      if (!is_zero_vec(F, row)) rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::whole(F, n);
  return kernel(canonicalize(Matrix::from_rows(F, rows, n)).matrix());
}

/// Kernel of x -> cond(x) for a linear cond, from its values on the basis.
Subspace condition_kernel(const Algebra &A, const std::function<Vec(std::size_t)> &cond) {
  const auto &F = A.ring();
  std::size_t n = A.dim();
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(cond(k));
  std::size_t m = cols.empty() ? 0 : cols[0].size();
  std::vector<Vec> rows;
  for (std::size_t t = 0; t < m; ++t) {
    Vec row(n);
    bool zero = true;
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = cols[k][t];
      if (!F.is_zero(row[k])) zero = false;
    }
    if (!zero) rows.push_back(std::move(row));
  }
  if (rows.empty()) return Subspace::whole(F, n);
  return kernel(canonicalize(Matrix::from_rows(F, rows, n)).matrix());
}

void append(Vec &out, const Vec &v) { out.insert(out.end(), v.begin(), v.end()); }

Vec commutator_conditions(const Algebra &A, std::size_t k) {
  Vec out;
  for (std::size_t i = 0; i < A.dim(); ++i) append(out, vec_sub(A.ring(), A.basis_product(k, i), A.basis_product(i, k)));
  return out;
}

Vec associator_conditions(const Algebra &A, std::size_t k) {
  Vec out;
  Vec x = A.basis(k);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec a = A.basis(i), b = A.basis(j);
      append(out, associator(A, x, a, b));
      append(out, associator(A, a, x, b));
      append(out, associator(A, a, b, x));
    }
  return out;
}

bool is_finite_small(const Algebra &A, std::uint64_t cap) {
  const auto &F = A.ring();
  if (!F.is_finite()) return false;
  long double count = std::pow(static_cast<long double>(F.size()), static_cast<long double>(A.dim()));
  return count <= static_cast<long double>(cap);
}

std::uint64_t element_count(const Algebra &A) {
  std::uint64_t q = A.ring().size(), c = 1;
  for (std::size_t i = 0; i < A.dim(); ++i) c *= q;
  return c;
}

void require_enumerable(const Algebra &A, const std::string &what) {
  if (!is_finite_small(A, limits().max_enum))
    throw Error(ErrorCode::TooLargeToEnumerate, what + " needs a finite algebra with at most " +
                                                    std::to_string(limits().max_enum) + " elements");
}

/// Calls f on each nonzero element, one per scalar line over fields; stops when f returns false.
void for_each_nonzero(const Algebra &A, const std::function<bool(const Vec &)> &f) {
  const auto &F = A.ring();
  std::size_t n = A.dim();
  std::uint64_t q = F.size();
  std::vector<std::uint64_t> digits(n, 0);
  Vec v = zero_vec(F, n);
  std::uint64_t total = element_count(A);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    for (std::size_t k = 0; k < n; ++k) {
      if (++digits[k] < q) {
        v[k] = F.from_code(digits[k]);
        break;
      }
      digits[k] = 0;
      v[k] = F.zero();
    }
    if (F.is_field()) {
      std::size_t lead = 0;
      while (F.is_zero(v[lead])) ++lead;
      if (!F.is_one(v[lead])) continue;
    }
    if (!f(v)) return;
  }
}

/// Integer-coded arithmetic for brute-force scans.
class CodeEngine {
 public:
  explicit CodeEngine(const Algebra &A) : A_(A), F_(A.ring()), n_(A.dim()) {
    require_enumerable(A, "enumeration");
    q_ = static_cast<std::uint32_t>(F_.size());
    if (q_ > 256) throw Error(ErrorCode::TooLargeToEnumerate, "scalar ring larger than 256 elements");
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<std::uint16_t>(F_.code(F_.add(F_.from_code(a), F_.from_code(b))));
        mul_[a * q_ + b] = static_cast<std::uint16_t>(F_.code(F_.mul(F_.from_code(a), F_.from_code(b))));
      }
    terms_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto &t : A.terms(i, j))
          terms_[i * n_ + j].push_back({t.k, static_cast<std::uint16_t>(F_.code(t.c))});
    size_ = element_count(A);
    one_ = static_cast<std::uint16_t>(F_.code(F_.one()));
  }

  using Digits = std::vector<std::uint16_t>;

  std::uint64_t size() const { return size_; }
  std::size_t dim() const { return n_; }

  Digits decode(std::uint64_t idx) const {
    Digits d(n_);
    for (std::size_t k = 0; k < n_; ++k, idx /= q_) d[k] = static_cast<std::uint16_t>(idx % q_);
    return d;
  }
  std::uint64_t encode(const Digits &d) const {
    std::uint64_t idx = 0;
    for (std::size_t k = n_; k-- > 0;) idx = idx * q_ + d[k];
    return idx;
  }
  Vec to_vec(const Digits &d) const {
    Vec v;
    for (auto c : d) v.push_back(F_.from_code(c));
    return v;
  }
  Digits from_vec(const Vec &v) const {
    Digits d;
    for (const auto &x : v) d.push_back(static_cast<std::uint16_t>(F_.code(x)));
    return d;
  }
  Digits basis(std::size_t i) const {
    Digits d(n_, 0);
    d[i] = one_;
    return d;
  }
  bool is_zero(const Digits &d) const {
    return std::all_of(d.begin(), d.end(), [](auto c) { return c == 0; });
  }
  Digits mul(const Digits &a, const Digits &b) const {
    Digits out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!b[j]) continue;
        std::uint16_t s = mul_[a[i] * q_ + b[j]];
        for (const auto &t : terms_[i * n_ + j]) out[t.k] = add_[out[t.k] * q_ + mul_[s * q_ + t.c]];
      }
    }
    return out;
  }
  Digits add(const Digits &a, const Digits &b) const {
    Digits out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = add_[a[k] * q_ + b[k]];
    return out;
  }
  Digits sub(const Digits &a, const Digits &b) const { return from_vec(vec_sub(F_, to_vec(a), to_vec(b))); }

  bool is_central(const Digits &x) const {
    for (std::size_t i = 0; i < n_; ++i) {
      Digits e = basis(i);
      if (mul(x, e) != mul(e, x)) return false;
    }
    if (A_.is_associative()) return true;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Digits a = basis(i), b = basis(j);
        if (mul(mul(x, a), b) != mul(x, mul(a, b))) return false;
        if (mul(mul(a, x), b) != mul(a, mul(x, b))) return false;
        if (mul(mul(a, b), x) != mul(a, mul(b, x))) return false;
      }
    return true;
  }

  /// Calls f(index, digits) for every element in index order.
  template <class Fn>
  void scan(Fn &&f) const {
    Digits d(n_, 0);
    for (std::uint64_t idx = 0; idx < size_; ++idx) {
      if (!f(idx, d)) return;
      for (std::size_t k = 0; k < n_; ++k) {
        if (++d[k] < q_) break;
        d[k] = 0;
      }
    }
  }

 private:
  struct CTerm {
    std::uint32_t k;
    std::uint16_t c;
  };
  const Algebra &A_;
  const ScalarRing &F_;
  std::size_t n_;
  std::uint32_t q_ = 0;
  std::uint16_t one_ = 1;
  std::uint64_t size_ = 0;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::vector<CTerm>> terms_;
};

Report enumerate_ce(const Algebra &A) {
  CodeEngine E(A);
  const auto &F = A.ring();
  std::vector<char> central(E.size(), 0);
  std::vector<std::uint64_t> central_list;
  E.scan([&](std::uint64_t idx, const CodeEngine::Digits &d) {
    if (E.is_central(d)) {
      central[idx] = 1;
      if (idx) central_list.push_back(idx);
    }
    return true;
  });
  bool unital = A.unit().has_value();
  if (unital) {
    auto u = E.encode(E.from_vec(*A.unit()));
    std::stable_partition(central_list.begin(), central_list.end(), [&](auto i) { return i == u; });
  }
  std::vector<CodeEngine::Digits> cents;
  for (auto idx : central_list) cents.push_back(E.decode(idx));
  std::int64_t ch = F.characteristic();
  Report r;
  r.predicate = "centrally_essential";
  r.strategy = strategy_name(Strategy::Enumerate);
  r.details["elements"] = E.size();
  r.details["center_size"] = central_list.size() + 1;
  bool have_noncentral_witness = false;
  E.scan([&](std::uint64_t idx, const CodeEngine::Digits &a) {
    if (idx == 0) return true;
    std::optional<CEWitness> w;
    auto record = [&](const CodeEngine::Digits &x, std::int64_t m, const CodeEngine::Digits &y) {
      w = CEWitness{E.to_vec(a), E.to_vec(x), F.from_int(m), E.to_vec(y), Flavor::Ce, ""};
    };
    std::vector<CodeEngine::Digits> xs = cents;
    if (!unital) xs.insert(xs.begin(), CodeEngine::Digits(E.dim(), 0));
    std::int64_t mmax = unital ? 1 : ch;
    for (const auto &x : xs) {
      CodeEngine::Digits ax = E.mul(a, x), ma(E.dim(), 0);
      for (std::int64_t m = 0; m < mmax && !w; ++m) {
        CodeEngine::Digits y = E.add(ax, ma);
        if (!E.is_zero(y) && central[E.encode(y)]) record(x, m, y);
        ma = E.add(ma, a);
      }
      if (w) break;
    }
    if (!w) {
      r.verdict = Verdict::False;
      r.counterexample = E.to_vec(a);
      return false;
    }
    if (!r.witness || (!have_noncentral_witness && !central[idx])) {
      have_noncentral_witness = !central[idx];
      r.witness = w;
    }
    return true;
  });
  if (!r.counterexample) r.verdict = Verdict::True;
  else r.witness.reset();
  return r;
}

std::string witness_x_text(const Algebra &A, const Vec &x, const Scalar &unit_coeff, bool with_unit) {
  std::string s = format_vec(A, x);
  if (with_unit && !A.ring().is_zero(unit_coeff)) s += " + " + A.ring().format(unit_coeff) + "*1";
  return s;
}

}  // namespace

Json report_to_json(const Algebra &A, const Report &r) {
  Json j;
  j["predicate"] = r.predicate;
  j["verdict"] = verdict_name(r.verdict);
  j["strategy"] = r.strategy;
  j["certification"] = r.certification;
  if (r.witness) {
    const auto &w = *r.witness;
    Json wj;
    wj["a"] = format_vec(A, w.a);
    wj["x"] = w.x_text.empty() ? witness_x_text(A, w.x, w.unit_coeff, true) : w.x_text;
    wj["y"] = format_vec(A, w.y);
    wj["flavor"] = flavor_name(w.flavor);
    j["witness"] = wj;
  }
  if (r.counterexample) j["counterexample"] = Json{{"a", format_vec(A, *r.counterexample)}};
  if (!r.details.empty()) j["details"] = r.details;
  j["millis"] = std::round(r.millis * 1000.0) / 1000.0;
  return j;
}

Subspace commutative_center(const Algebra &A) {
  return condition_kernel(A, [&](std::size_t k) { return commutator_conditions(A, k); });
}

Subspace associative_center(const Algebra &A) {
  if (A.is_associative()) return Subspace::whole(A.ring(), A.dim());
  return condition_kernel(A, [&](std::size_t k) { return associator_conditions(A, k); });
}

Subspace center(const Algebra &A) {
  if (A.is_associative()) return commutative_center(A);
  return condition_kernel(A, [&](std::size_t k) {
    Vec v = commutator_conditions(A, k);
    append(v, associator_conditions(A, k));
    return v;
  });
}

EndoSpace centroid(const Algebra &A) {
  const auto &F = A.ring();
  std::size_t n = A.dim(), N = n * n;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Matrix &M : {A.left_mult(A.basis(i)), A.right_mult(A.basis(i))}) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Vec row = zero_vec(F, N);
          for (std::size_t k = 0; k < n; ++k) {
            row[r * n + k] = F.add(row[r * n + k], M.at(k, c));
            row[k * n + c] = F.sub(row[k * n + c], M.at(r, k));
          }
          if (!is_zero_vec(F, row)) rows.push_back(std::move(row));
        }
    }
    // Keep the system reduced so elimination stays near N x N.
    if (rows.size() > 2 * N) rows = Subspace::span(F, N, rows).basis();
  }
  Subspace K = rows.empty() ? Subspace::whole(F, N) : kernel(canonicalize(Matrix::from_rows(F, rows, N)).matrix());
  EndoSpace out{A, {}};
  for (const auto &v : K.basis()) {
    Matrix phi(F, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) phi.at(r, c) = v[r * n + c];
    out.basis.push_back(std::move(phi));
  }
  return out;
}

Subspace annihilator(const Algebra &A, const Subspace &S, Side side) {
  std::vector<Matrix> blocks;
  for (const auto &s : S.basis()) {
    if (side != Side::Right) blocks.push_back(A.right_mult(s));
    if (side != Side::Left) blocks.push_back(A.left_mult(s));
  }
  return stacked_kernel(A.ring(), A.dim(), blocks);
}

Subspace integer_annihilator(const Algebra &A, std::int64_t m) {
  const auto &F = A.ring();
  Matrix M(F, A.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) M.at(i, i) = F.from_int(m);
  return stacked_kernel(F, A.dim(), {M});
}

Subspace commutator_ideal(const Algebra &A) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      Vec c = commutator(A, A.basis(i), A.basis(j));
      if (!is_zero_vec(A.ring(), c)) gens.push_back(std::move(c));
    }
  return ideal_generated_by(A, gens);
}

Subspace nilradical_in(const Algebra &A, const Subspace &U) {
  const auto &F = A.ring();
  std::size_t n = A.dim();
  if (U.is_zero()) return U;
  const auto &basis = U.basis();
  std::size_t r = basis.size();
  switch (F.kind()) {
    case ScalarKind::Rationals: {
      std::vector<Matrix> L;
      for (const auto &u : basis) L.push_back(A.left_mult(u));
      Matrix G(F, r, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
          Matrix P = L[a] * L[b];
          Scalar tr = F.zero();
          for (std::size_t k = 0; k < n; ++k) tr = F.add(tr, P.at(k, k));
          G.at(a, b) = G.at(b, a) = tr;
        }
      std::vector<Vec> gens;
      Subspace K = kernel(G);
      for (const auto &c : K.basis()) {
        Vec v = zero_vec(F, n);
        for (std::size_t a = 0; a < r; ++a) vec_axpy(F, v, c[a], basis[a]);
        gens.push_back(std::move(v));
      }
      return Subspace::span(F, n, gens);
    }
    case ScalarKind::PrimeField:
    case ScalarKind::GaloisField: {
      std::int64_t p = F.characteristic();
      int e = 0;
      for (std::int64_t pe = 1; pe < static_cast<std::int64_t>(r) + 1; pe *= p) ++e;
      auto pth = [&](const Vec &x) {
        Vec y = x;
        for (std::int64_t k = 1; k < p; ++k) y = A.multiply(y, x);
        return y;
      };
      Matrix M(F, n, r);
      for (std::size_t a = 0; a < r; ++a) {
        Vec y = basis[a];
        for (int s = 0; s < e; ++s) y = pth(y);
        for (std::size_t k = 0; k < n; ++k) M.at(k, a) = y[k];
      }
      std::vector<Vec> gens;
      Subspace K = kernel(M);
      for (const auto &nu : K.basis()) {
        Vec v = zero_vec(F, n);
        for (std::size_t a = 0; a < r; ++a) {
          Scalar mu = nu[a];
          for (int s = 0; s < e; ++s) mu = F.frobenius_inverse(mu);
          vec_axpy(F, v, mu, basis[a]);
        }
        gens.push_back(std::move(v));
      }
      return Subspace::span(F, n, gens);
    }
    case ScalarKind::ResidueRing: {
      std::int64_t mod = F.characteristic(), p = 0;
      for (std::int64_t d = 2; d <= mod && !p; ++d)
        if (mod % d == 0) p = d;
      std::int64_t rest = mod;
      while (rest % p == 0) rest /= p;
      if (rest == 1) {
        // Prime power modulus: x is nilpotent iff x^(p^e) lies in pU.
        int e = 0;
        for (std::int64_t pe = 1; pe < static_cast<std::int64_t>(r) + 1; pe *= p) ++e;
        Matrix M(F, n, 2 * r);
        std::vector<Vec> gens;
        for (std::size_t a = 0; a < r; ++a) {
          Vec y = basis[a];
          for (int s = 0; s < e; ++s) {
            Vec x = y;
            for (std::int64_t k = 1; k < p; ++k) y = A.multiply(y, x);
          }
          Vec pg = vec_scale(F, F.from_int(p), basis[a]);
          for (std::size_t k = 0; k < n; ++k) {
            M.at(k, a) = y[k];
            M.at(k, r + a) = pg[k];
          }
          gens.push_back(std::move(pg));
        }
        Subspace K = kernel(M);
        for (const auto &ab : K.basis()) {
          Vec v = zero_vec(F, n);
          for (std::size_t a = 0; a < r; ++a) vec_axpy(F, v, ab[a], basis[a]);
          gens.push_back(std::move(v));
        }
        return Subspace::span(F, n, gens);
      }
      std::uint64_t card = U.cardinality();
      if (card == 0 || card > limits().max_enum)
        throw Error(ErrorCode::TooLargeToEnumerate, "nilradical over Z_n needs an enumerable subring");
      int bound = static_cast<int>(std::ceil(std::log2(static_cast<double>(card) * F.characteristic()))) + 2;
      Subspace S(F, n);
      U.for_each_element([&](const Vec &x) {
        if (S.contains(x)) return;
        Vec y = x;
        for (int k = 0; k < bound; ++k) {
          if (is_zero_vec(F, y)) {
            auto gens = S.basis();
            gens.push_back(x);
            S = Subspace::span(F, n, gens);
            return;
          }
          y = A.multiply(y, x);
        }
      });
      return S;
    }
    default:
      throw Error(ErrorCode::UnsupportedScalars, "nilradical over " + F.name());
  }
}

Subspace nilradical_commutative(const Algebra &C) {
  if (!C.is_commutative() || !C.is_associative())
    throw Error(ErrorCode::UnsupportedParameter, "nilradical needs a commutative associative algebra");
  return nilradical_in(C, Subspace::whole(C.ring(), C.dim()));
}

Subspace socle_over(const Algebra &A, const Subspace &S, const Subspace &M) {
  Subspace J = nilradical_in(A, S);
  return subspace_intersect(M, annihilator(A, J, Side::Left));
}

Subspace socle_over_center(const Algebra &A) {
  if (!A.unit()) throw Error(ErrorCode::MissingUnit, "socle over the center needs a unital algebra");
  return socle_over(A, center(A), Subspace::whole(A.ring(), A.dim()));
}

std::optional<CEWitness> linear_witness(const Algebra &A, const Vec &a, const Subspace &acting, const Subspace &target,
                                        bool with_unit, Flavor flavor) {
  const auto &F = A.ring();
  std::size_t n = A.dim();
  bool left = flavor == Flavor::NEssential || flavor == Flavor::KEssential;
  std::vector<Vec> imgs;
  for (const auto &g : acting.basis()) imgs.push_back(left ? A.multiply(g, a) : A.multiply(a, g));
  if (with_unit) imgs.push_back(a);
  if (imgs.empty()) return std::nullopt;
  Subspace W = Subspace::span(F, n, imgs);
  Subspace I = subspace_intersect(W, target);
  if (I.is_zero()) return std::nullopt;
  const Vec &y = I.basis()[0];
  Matrix M(F, n, imgs.size());
  for (std::size_t c = 0; c < imgs.size(); ++c)
    for (std::size_t k = 0; k < n; ++k) M.at(k, c) = imgs[c][k];
  auto lambda = solve(M, y);
  if (!lambda) throw Error(ErrorCode::InconsistentSystem, "intersection element outside the image");
  Vec x = zero_vec(F, n);
  for (std::size_t c = 0; c < acting.basis().size(); ++c) vec_axpy(F, x, (*lambda)[c], acting.basis()[c]);
  Scalar u = with_unit ? lambda->back() : F.zero();
  CEWitness w{a, x, u, y, flavor, ""};
  w.x_text = witness_x_text(A, x, u, with_unit);
  return w;
}

namespace {

Report socle_ce(const Algebra &A) {
  if (!A.unit()) throw Error(ErrorCode::StrategyInapplicable, "socle strategy needs a unital algebra");
  Report r;
  r.predicate = "centrally_essential";
  r.strategy = strategy_name(Strategy::Socle);
  Subspace Z = center(A);
  Subspace J = nilradical_in(A, Z);
  Subspace soc = subspace_intersect(Subspace::whole(A.ring(), A.dim()), annihilator(A, J, Side::Left));
  r.details["center_rank"] = Z.rank();
  r.details["center_nilradical_rank"] = J.rank();
  r.details["socle_rank"] = soc.rank();
  if (soc.is_subspace_of(Z)) {
    r.verdict = Verdict::True;
    for (std::size_t i = 0; i < A.dim() && !r.witness; ++i)
      if (!Z.contains(A.basis(i))) r.witness = linear_witness(A, A.basis(i), Z, Z, false, Flavor::Ce);
    if (!r.witness) r.witness = linear_witness(A, A.basis(0), Z, Z, false, Flavor::Ce);
    return r;
  }
  r.verdict = Verdict::False;
  for (const auto &s : soc.basis()) {
    if (!linear_witness(A, s, Z, Z, false, Flavor::Ce)) {
      r.counterexample = s;
      return r;
    }
  }
  if (soc.cardinality() && soc.cardinality() <= limits().max_enum) {
    soc.for_each_element([&](const Vec &s) {
      if (!r.counterexample && !is_zero_vec(A.ring(), s) && !linear_witness(A, s, Z, Z, false, Flavor::Ce))
        r.counterexample = s;
    });
  }
  return r;
}

Report per_element_ce(const Algebra &A, const std::vector<Vec> *elements, Flavor flavor, const Subspace &acting,
                      const Subspace &target, bool with_unit, const std::string &predicate) {
  Report r;
  r.predicate = predicate;
  r.strategy = strategy_name(Strategy::PerElementLinear);
  std::size_t checked = 0;
  auto test = [&](const Vec &a) {
    ++checked;
    auto w = linear_witness(A, a, acting, target, with_unit, flavor);
    if (!w) {
      r.counterexample = a;
      return false;
    }
    if (!r.witness || (target.contains(r.witness->a) && !target.contains(a))) r.witness = w;
    return true;
  };
  if (elements) {
    for (const auto &a : *elements)
      if (!is_zero_vec(A.ring(), a) && !test(a)) break;
    r.certification = "sampled";
  } else {
    require_enumerable(A, "per-element check");
    for_each_nonzero(A, test);
  }
  r.details["elements_checked"] = checked;
  r.verdict = r.counterexample ? Verdict::False : Verdict::True;
  if (r.counterexample) r.witness.reset();
  return r;
}

Report uniserial_ce(const Algebra &A) {
  if (!A.unit()) throw Error(ErrorCode::StrategyInapplicable, "uniserial criterion needs a unital algebra");
  const auto &F = A.ring();
  std::size_t n = A.dim();
  Report r;
  r.predicate = "centrally_essential";
  r.strategy = strategy_name(Strategy::UniserialCriterion);
  r.certification = "certified-by-sufficient-criterion";
  Subspace whole = Subspace::whole(F, n);
  Subspace Z = center(A);
  std::vector<Vec> nil;
  for (std::size_t i = 0; i < n; ++i) {
    Vec y = A.basis(i);
    for (std::size_t k = 0; k <= n && !is_zero_vec(F, y); ++k) y = A.multiply(y, A.basis(i));
    if (is_zero_vec(F, y)) nil.push_back(A.basis(i));
  }
  Subspace J = ideal_generated_by(A, nil);
  auto index = nilpotency_index(A, J);
  if (!index) throw Error(ErrorCode::StrategyInapplicable, "ideal of nilpotent basis elements is not nilpotent");
  std::vector<Subspace> powers{whole, J};
  for (int k = 2; k <= *index; ++k) powers.push_back(subspace_product(A, powers.back(), J));
  std::size_t top = n - J.rank();
  Json layers = Json::array();
  bool uniserial = top > 0;
  for (int k = 1; k <= *index; ++k) {
    std::size_t d = powers[k - 1].rank() - powers[k].rank();
    layers.push_back(d);
    if (d != top) uniserial = false;
  }
  for (std::size_t i = 0; i < n && uniserial; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!J.contains(commutator(A, A.basis(i), A.basis(j)))) uniserial = false;
  std::optional<Vec> pi;
  for (const auto &cand : J.basis()) {
    if (subspace_product(A, whole, Subspace::span(F, n, {cand})) == J) {
      pi = cand;
      break;
    }
  }
  if (!pi) uniserial = false;
  int half = *index / 2;
  r.details["nilpotency_index"] = *index;
  r.details["half_power"] = half;
  r.details["layer_ranks"] = layers;
  r.details["top_rank"] = top;
  r.details["uniserial_checks"] = uniserial;
  if (pi) r.details["generator"] = format_vec(A, *pi);
  r.details["assumption"] = "A/J is a field";
  bool criterion = uniserial && powers[half].is_subspace_of(Z);
  r.details["half_power_central"] = powers[half].is_subspace_of(Z);
  std::mt19937_64 rng(0x5eed);
  int ok = 0;
  while (ok < 100) {
    Vec a(n);
    for (auto &c : a) c = F.random(rng);
    if (is_zero_vec(F, a)) continue;
    auto w = linear_witness(A, a, Z, Z, false, Flavor::Ce);
    if (!w) {
      r.verdict = Verdict::False;
      r.certification = "exact";
      r.counterexample = a;
      r.details["random_witnesses"] = ok;
      return r;
    }
    if (!r.witness && !Z.contains(a)) r.witness = w;
    ++ok;
  }
  r.details["random_witnesses"] = ok;
  r.verdict = criterion ? Verdict::True : Verdict::Unknown;
  return r;
}

bool socle_applicable(const Algebra &A) {
  if (!A.unit()) return false;
  switch (A.ring().kind()) {
    case ScalarKind::PrimeField:
    case ScalarKind::GaloisField:
    case ScalarKind::Rationals:
      return true;
    case ScalarKind::ResidueRing: {
      std::int64_t n = A.ring().characteristic(), p = 2;
      while (n % p != 0) ++p;
      while (n % p == 0) n /= p;
      if (n == 1) return true;
      auto size = center(A).cardinality();
      return size != 0 && size <= limits().max_enum;
    }
    default:
      return false;
  }
}

}  // namespace

Report is_centrally_essential(const Algebra &A, Strategy strategy, const std::vector<Vec> *elements) {
  auto start = Clock::now();
  if (strategy == Strategy::Auto) {
    if (elements) strategy = Strategy::PerElementLinear;
    else if (socle_applicable(A)) strategy = Strategy::Socle;
    else if (is_finite_small(A, std::min<std::uint64_t>(limits().max_enum, 1u << 16))) strategy = Strategy::Enumerate;
    else if (A.ring().kind() == ScalarKind::RationalFunctionField) strategy = Strategy::UniserialCriterion;
    else if (A.ring().is_field() && A.ring().is_finite()) strategy = Strategy::PerElementLinear;
    else throw Error(ErrorCode::StrategyInapplicable, "no strategy applies to this algebra");
  }
  Report r;
  switch (strategy) {
    case Strategy::Socle: r = socle_ce(A); break;
    case Strategy::Enumerate: r = enumerate_ce(A); break;
    case Strategy::PerElementLinear: {
      Subspace Z = center(A);
      r = per_element_ce(A, elements, Flavor::Ce, Z, Z, !A.unit(), "centrally_essential");
      break;
    }
    case Strategy::UniserialCriterion: r = uniserial_ce(A); break;
    case Strategy::Auto: break;
  }
  r.millis = millis_since(start);
  return r;
}

Report is_strongly_ce(const Algebra &A) {
  auto start = Clock::now();
  Subspace Z = center(A);
  Report r = per_element_ce(A, nullptr, Flavor::Strong, Z, Z, false, "strongly_centrally_essential");
  r.millis = millis_since(start);
  return r;
}

Report is_n_essential(const Algebra &A) {
  auto start = Clock::now();
  Subspace N = associative_center(A);
  Report r = per_element_ce(A, nullptr, Flavor::NEssential, N, N, false, "n_essential");
  r.millis = millis_since(start);
  return r;
}

Report is_k_essential(const Algebra &A) {
  auto start = Clock::now();
  Subspace K = commutative_center(A);
  Report r = per_element_ce(A, nullptr, Flavor::KEssential, K, K, false, "k_essential");
  r.millis = millis_since(start);
  return r;
}

Report is_weakly_ce(const Algebra &A) {
  auto start = Clock::now();
  const auto &F = A.ring();
  std::size_t n = A.dim();
  require_enumerable(A, "weak check");
  EndoSpace cent = centroid(A);
  Subspace Z = center(A);
  Report r;
  r.predicate = "weakly_centrally_essential";
  r.strategy = strategy_name(Strategy::PerElementLinear);
  r.details["centroid_rank"] = cent.basis.size();
  std::size_t checked = 0;
  for_each_nonzero(A, [&](const Vec &a) {
    ++checked;
    std::vector<Vec> imgs;
    for (const auto &phi : cent.basis) imgs.push_back(phi.apply(a));
    Subspace I = subspace_intersect(Subspace::span(F, n, imgs), Z);
    if (I.is_zero()) {
      r.counterexample = a;
      return false;
    }
    if (!r.witness || (Z.contains(r.witness->a) && !Z.contains(a))) {
      Matrix M(F, n, imgs.size());
      for (std::size_t c = 0; c < imgs.size(); ++c)
        for (std::size_t k = 0; k < n; ++k) M.at(k, c) = imgs[c][k];
      auto lambda = solve(M, I.basis()[0]);
      std::string text;
      for (std::size_t c = 0; c < imgs.size(); ++c) {
        if (F.is_zero((*lambda)[c])) continue;
        if (!text.empty()) text += " + ";
        text += F.format((*lambda)[c]) + "*phi" + std::to_string(c + 1);
      }
      r.witness = CEWitness{a, {}, F.zero(), I.basis()[0], Flavor::Weak, text};
    }
    return true;
  });
  r.details["elements_checked"] = checked;
  r.verdict = r.counterexample ? Verdict::False : Verdict::True;
  if (r.counterexample) r.witness.reset();
  r.millis = millis_since(start);
  return r;
}

std::vector<Vec> enumerate_center(const Algebra &A) {
  CodeEngine E(A);
  std::vector<Vec> out;
  E.scan([&](std::uint64_t, const CodeEngine::Digits &d) {
    if (E.is_central(d)) out.push_back(E.to_vec(d));
    return true;
  });
  return out;
}

std::vector<Vec> idempotents(const Algebra &A) {
  CodeEngine E(A);
  std::vector<Vec> out;
  E.scan([&](std::uint64_t, const CodeEngine::Digits &d) {
    if (E.mul(d, d) == d) out.push_back(E.to_vec(d));
    return true;
  });
  return out;
}

bool all_idempotents_central(const Algebra &A) {
  Subspace Z = center(A);
  for (const auto &e : idempotents(A))
    if (!Z.contains(e)) return false;
  return true;
}

bool is_left_zero_divisor(const Algebra &A, const Vec &a) {
  return !is_zero_vec(A.ring(), a) && !kernel(A.left_mult(a)).is_zero();
}

bool is_right_zero_divisor(const Algebra &A, const Vec &a) {
  return !is_zero_vec(A.ring(), a) && !kernel(A.right_mult(a)).is_zero();
}

bool zero_divisor_sets_equal(const Algebra &A) {
  CodeEngine E(A);
  bool equal = true;
  E.scan([&](std::uint64_t, const CodeEngine::Digits &d) {
    Vec a = E.to_vec(d);
    equal = is_left_zero_divisor(A, a) == is_right_zero_divisor(A, a);
    return equal;
  });
  return equal;
}

Report verify_local_radical(const Algebra &A, const Subspace &J) {
  auto start = Clock::now();
  if (!A.unit()) throw Error(ErrorCode::MissingUnit, "local check needs a unital algebra");
  if (!is_two_sided_ideal(A, J)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");
  auto index = nilpotency_index(A, J);
  if (!index) throw Error(ErrorCode::NotNilpotent, "ideal is not nilpotent");
  Quotient Q = quotient_by_ideal(A, J);
  const Algebra &B = Q.algebra;
  if (B.dim() == 0 || !B.is_commutative()) throw Error(ErrorCode::QuotientNotAField, "quotient is zero or non-commutative");
  if (B.dim() > 1) {
    if (!is_finite_small(B, limits().max_enum))
      throw Error(ErrorCode::StrategyInapplicable, "quotient too large to verify field property");
    bool field = true;
    for_each_nonzero(B, [&](const Vec &x) {
      field = kernel(B.left_mult(x)).is_zero();
      return field;
    });
    if (!field) throw Error(ErrorCode::QuotientNotAField, "quotient has zero divisors");
  }
  Report r;
  r.predicate = "local_radical";
  r.verdict = Verdict::True;
  r.strategy = "linear";
  r.details["nilpotency_index"] = *index;
  r.details["quotient_dim"] = B.dim();
  r.millis = millis_since(start);
  return r;
}

bool is_essential_submodule(const Algebra &A, const Subspace &N) {
  if (socle_applicable(A)) return socle_over_center(A).is_subspace_of(N);
  if (!is_finite_small(A, limits().max_enum))
    throw Error(ErrorCode::StrategyInapplicable, "essentiality needs the socle route or enumeration");
  Subspace Z = center(A);
  bool ok = true;
  for_each_nonzero(A, [&](const Vec &a) {
    ok = linear_witness(A, a, Z, N, true, Flavor::Ce).has_value();
    return ok;
  });
  return ok;
}

CdData cd_data(const Algebra &A) {
  if (!A.involution()) throw Error(ErrorCode::MissingInvolution, "doubling data needs an involution");
  const auto &F = A.ring();
  std::size_t n = A.dim();
  Subspace C = center(A);
  Subspace I = subspace_intersect(C, annihilator(A, commutator_ideal(A), Side::Left));
  Matrix sym = *A.involution() - Matrix::identity(F, n);
  Subspace B = subspace_intersect(C, kernel(sym));
  std::vector<Vec> skew;
  for (std::size_t i = 0; i < n; ++i) skew.push_back(vec_sub(F, A.basis(i), A.star(A.basis(i))));
  Subspace J = subspace_intersect(B, annihilator(A, Subspace::span(F, n, skew), Side::Left));
  return {C, I, B, J};
}

namespace {

Subspace pair_subspace(const Algebra &R, const Subspace &X, const Subspace &Y) {
  const auto &F = R.ring();
  std::size_t n = X.ambient();
  if (R.dim() != 2 * n) throw Error(ErrorCode::DimensionMismatch, "R is not a doubling of A");
  std::vector<Vec> gens;
  for (const auto &x : X.basis()) {
    Vec v = zero_vec(F, 2 * n);
    std::copy(x.begin(), x.end(), v.begin());
    gens.push_back(std::move(v));
  }
  for (const auto &y : Y.basis()) {
    Vec v = zero_vec(F, 2 * n);
    std::copy(y.begin(), y.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    gens.push_back(std::move(v));
  }
  return Subspace::span(F, 2 * n, gens);
}

}  // namespace

Subspace cd_nucleus_by_formula(const Algebra &R, const Algebra &A) {
  auto d = cd_data(A);
  return pair_subspace(R, d.C, d.I);
}

Subspace cd_center_by_formula(const Algebra &R, const Algebra &A) {
  auto d = cd_data(A);
  return pair_subspace(R, d.B, subspace_intersect(d.I, d.J));
}

bool cd_ce_criterion(const Algebra &A, const Vec &alpha) {
  cayley_dickson(A, alpha);
  auto d = cd_data(A);
  Subspace whole = Subspace::whole(A.ring(), A.dim());
  Subspace Jp = subspace_intersect(d.J, d.I);
  return socle_over(A, d.B, whole).is_subspace_of(d.B) && socle_over(A, d.B, d.B).is_subspace_of(Jp);
}

bool cd_n_essential_criterion(const Algebra &A, const Vec &alpha) {
  cayley_dickson(A, alpha);
  auto d = cd_data(A);
  return is_centrally_essential(A).holds() && socle_over(A, d.C, d.C).is_subspace_of(d.I);
}

namespace {

bool alternative_side(const Algebra &A, bool right) {
  const auto &F = A.ring();
  std::size_t n = A.dim();
  auto assoc = [&](std::size_t k, std::size_t i, std::size_t j) {
    return right ? associator(A, A.basis(k), A.basis(i), A.basis(j)) : associator(A, A.basis(i), A.basis(j), A.basis(k));
  };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_zero_vec(F, assoc(k, i, i))) return false;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!is_zero_vec(F, vec_add(F, assoc(k, i, j), assoc(k, j, i)))) return false;
    }
  return true;
}

}  // namespace

bool is_right_alternative(const Algebra &A) { return A.is_associative() || alternative_side(A, true); }
bool is_left_alternative(const Algebra &A) { return A.is_associative() || alternative_side(A, false); }
bool is_alternative(const Algebra &A) { return is_right_alternative(A) && is_left_alternative(A); }

bool grassmann_ce_predicate(const Algebra &A, int n) {
  if (n < 0) throw Error(ErrorCode::UnsupportedParameter, "n must be non-negative");
  bool ce = is_centrally_essential(A).holds();
  if (n == 0 || !ce) return ce;
  return n % 2 == 1 || is_essential_submodule(A, integer_annihilator(A, 2));
}

Verdict group_algebra_ce_predicate(const ScalarRing &F, const FiniteGroup &G) {
  std::int64_t p = F.characteristic();
  if (p == 0 || !F.is_field()) throw Error(ErrorCode::UnsupportedScalars, "group predicate needs a field of prime characteristic");
  auto dec = sylow_direct_decomposition(G, p);
  if (!dec) return Verdict::False;
  if (!is_abelian_subset(G, dec->second)) return Verdict::False;
  FiniteGroup P = subgroup_as_group(G, dec->first);
  auto nc = nilpotence_class(P);
  if (nc && *nc <= 2) return Verdict::True;
  // Each non-central g needs a central z of order p with z g conjugate to g.
  Subset Z = group_center(P);
  auto classes = conjugacy_classes(P);
  std::vector<std::size_t> class_of(P.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Index g : classes[c]) class_of[g] = c;
  bool star = true;
  for (Index g = 0; g < P.order() && star; ++g) {
    if (std::binary_search(Z.begin(), Z.end(), g)) continue;
    bool found = false;
    for (Index z : Z)
      if (z != P.identity() && P.element_order(z) == static_cast<std::size_t>(p) && class_of[P.mul(z, g)] == class_of[g])
        found = true;
    star = found;
  }
  return star ? Verdict::False : Verdict::Unknown;
}

}  // namespace celab
