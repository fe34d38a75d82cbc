#include "celab/semirings.hpp"

#include "celab/builders.hpp"
#include "celab/error.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace celab {

namespace {

using SIndex = FiniteSemiring::Index;
using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::size_t kMaxFiniteSemiring = 512;

void check_table(const std::vector<std::vector<SIndex>> &t, std::size_t n, const char *name) {
  if (t.size() != n) throw Error(ErrorCode::NotASemiring, std::string(name) + " table has wrong number of rows");
  for (const auto &row : t) {
    if (row.size() != n) throw Error(ErrorCode::NotASemiring, std::string(name) + " table row has wrong length");
    for (SIndex v : row)
      if (v >= n) throw Error(ErrorCode::NotASemiring, std::string(name) + " table entry out of range");
  }
}

}  // namespace

FiniteSemiring::FiniteSemiring(std::vector<std::string> labels, std::vector<std::vector<Index>> add,
                               std::vector<std::vector<Index>> mul, Index zero, Index one)
    : labels_(std::move(labels)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
  std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::NotASemiring, "empty carrier");
  if (n > kMaxFiniteSemiring) throw Error(ErrorCode::TooLargeToEnumerate, "semiring tables are capped at 512 elements");
  check_table(add_, n, "addition");
  check_table(mul_, n, "multiplication");
  if (zero_ >= n || one_ >= n) throw Error(ErrorCode::NotASemiring, "zero or one out of range");
  verify_semiring_axioms(*this);
}

FiniteSemiring::Index FiniteSemiring::at(const std::string &label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (labels_[i] == label) return static_cast<Index>(i);
  throw Error(ErrorCode::UnsupportedParameter, "no element labelled " + label);
}

bool FiniteSemiring::is_commutative() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

void verify_semiring_axioms(const FiniteSemiring &S) {
  auto n = static_cast<SIndex>(S.size());
  auto fail = [&](const std::string &what, SIndex a, SIndex b, SIndex c) {
    throw Error(ErrorCode::NotASemiring,
                what + " fails at (" + S.label(a) + ", " + S.label(b) + ", " + S.label(c) + ")");
  };
  for (SIndex a = 0; a < n; ++a) {
    if (S.add(a, S.zero()) != a) fail("additive identity", a, S.zero(), S.zero());
    if (S.mul(a, S.one()) != a || S.mul(S.one(), a) != a) fail("multiplicative identity", a, S.one(), S.one());
    if (S.mul(a, S.zero()) != S.zero() || S.mul(S.zero(), a) != S.zero()) fail("absorbing zero", a, S.zero(), S.zero());
    for (SIndex b = 0; b < n; ++b) {
      if (S.add(a, b) != S.add(b, a)) fail("additive commutativity", a, b, b);
      SIndex ab = S.mul(a, b), sab = S.add(a, b);
      for (SIndex c = 0; c < n; ++c) {
        if (S.add(sab, c) != S.add(a, S.add(b, c))) fail("additive associativity", a, b, c);
        if (S.mul(ab, c) != S.mul(a, S.mul(b, c))) fail("multiplicative associativity", a, b, c);
        if (S.mul(a, S.add(b, c)) != S.add(ab, S.mul(a, c))) fail("left distributivity", a, b, c);
        if (S.mul(sab, c) != S.add(S.mul(a, c), S.mul(b, c))) fail("right distributivity", a, b, c);
      }
    }
  }
}

SemigroupTable four_element_monoid() {
  // Order 1, a, b, c.
  return {{"1", "a", "b", "c"}, {{0, 1, 2, 3}, {1, 1, 1, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}}};
}

FiniteSemiring powerset_semiring(const SemigroupTable &M) {
  std::size_t m = M.labels.size();
  if (m == 0 || m > 9) throw Error(ErrorCode::NotASemigroup, "monoid must have between 1 and 9 elements");
  if (M.table.size() != m) throw Error(ErrorCode::NotASemigroup, "table has wrong number of rows");
  for (const auto &row : M.table) {
    if (row.size() != m) throw Error(ErrorCode::NotASemigroup, "table row has wrong length");
    for (auto v : row)
      if (v >= m) throw Error(ErrorCode::NotASemigroup, "table entry out of range");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (M.table[M.table[a][b]][c] != M.table[a][M.table[b][c]])
          throw Error(ErrorCode::NotASemigroup,
                      "not associative at (" + M.labels[a] + ", " + M.labels[b] + ", " + M.labels[c] + ")");
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < m && !unit; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) ok = M.table[e][a] == a && M.table[a][e] == a;
    if (ok) unit = e;
  }
  if (!unit) throw Error(ErrorCode::NotASemigroup, "no identity element");
  std::size_t n = std::size_t(1) << m;
  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string l = "{";
    bool first = true;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) {
        if (!first) l += ",";
        l += M.labels[i];
        first = false;
      }
    labels[s] = l + "}";
  }
  std::vector<std::vector<SIndex>> add(n, std::vector<SIndex>(n)), mul(n, std::vector<SIndex>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      add[s][t] = static_cast<SIndex>(s | t);
      std::size_t prod = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (s >> i & 1)
          for (std::size_t j = 0; j < m; ++j)
            if (t >> j & 1) prod |= std::size_t(1) << M.table[i][j];
      mul[s][t] = static_cast<SIndex>(prod);
    }
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), 0, static_cast<SIndex>(1u << *unit));
}

FiniteSemiring boolean_group_semiring(const FiniteGroup &G) {
  if (G.order() > 9) throw Error(ErrorCode::TooLargeToEnumerate, "Boolean group semirings are capped at order 9");
  SemigroupTable M{G.labels(), {}};
  for (std::size_t a = 0; a < G.order(); ++a) {
    std::vector<std::size_t> row;
    for (std::size_t b = 0; b < G.order(); ++b) row.push_back(G.mul(static_cast<Index>(a), static_cast<Index>(b)));
    M.table.push_back(row);
  }
  return powerset_semiring(M);
}

FiniteSemiring truncated_triangular_semiring(int bound) {
  if (bound < 1 || bound > 6) throw Error(ErrorCode::UnsupportedParameter, "bound must be in 1..6");
  auto k = static_cast<std::size_t>(bound) + 1;
  auto sat = [&](std::size_t v) { return std::min<std::size_t>(v, static_cast<std::size_t>(bound)); };
  std::size_t n = k * k * k;
  // Element (x, y, z) stands for [[x, y], [0, z]].
  auto code = [&](std::size_t x, std::size_t y, std::size_t z) { return static_cast<SIndex>((x * k + y) * k + z); };
  std::vector<std::string> labels(n);
  std::vector<std::vector<SIndex>> add(n, std::vector<SIndex>(n)), mul(n, std::vector<SIndex>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t x1 = s / (k * k), y1 = s / k % k, z1 = s % k;
    labels[s] = "[" + std::to_string(x1) + "," + std::to_string(y1) + ";0," + std::to_string(z1) + "]";
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t x2 = t / (k * k), y2 = t / k % k, z2 = t % k;
      add[s][t] = code(sat(x1 + x2), sat(y1 + y2), sat(z1 + z2));
      mul[s][t] = code(sat(x1 * x2), sat(sat(x1 * y2) + sat(y1 * z2)), sat(z1 * z2));
    }
  }
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), code(0, 0, 0), code(1, 0, 1));
}

FiniteSemiring ring_semiring(const ScalarRing &F) {
  if (!F.is_finite() || F.size() > kMaxFiniteSemiring)
    throw Error(ErrorCode::TooLargeToEnumerate, "ring is too large to tabulate");
  auto elems = F.elements();
  std::size_t n = elems.size();
  std::vector<std::string> labels;
  for (const auto &e : elems) labels.push_back(F.format(e));
  std::vector<std::vector<SIndex>> add(n, std::vector<SIndex>(n)), mul(n, std::vector<SIndex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = static_cast<SIndex>(F.code(F.add(elems[a], elems[b])));
      mul[a][b] = static_cast<SIndex>(F.code(F.mul(elems[a], elems[b])));
    }
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), static_cast<SIndex>(F.code(F.zero())),
                        static_cast<SIndex>(F.code(F.one())));
}

std::vector<SIndex> semiring_center(const FiniteSemiring &S) {
  std::vector<SIndex> out;
  for (SIndex a = 0; a < S.size(); ++a) {
    bool central = true;
    for (SIndex b = 0; b < S.size() && central; ++b) central = S.mul(a, b) == S.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

Report is_ce_semiring(const FiniteSemiring &S) {
  auto start = Clock::now();
  Report r;
  r.predicate = "centrally_essential_semiring";
  r.strategy = "enumerate";
  auto Z = semiring_center(S);
  std::vector<bool> central(S.size(), false);
  for (SIndex z : Z) central[z] = true;
  r.details["size"] = S.size();
  Json zl = Json::array();
  for (SIndex z : Z) zl.push_back(S.label(z));
  r.details["center"] = zl;
  if (S.is_commutative()) {
    r.verdict = Verdict::True;
    r.details["commutative"] = true;
    r.millis = millis_since(start);
    return r;
  }
  r.details["commutative"] = false;
  r.verdict = Verdict::True;
  for (SIndex a = 0; a < S.size(); ++a) {
    if (a == S.zero()) continue;
    bool found = false;
    for (SIndex x : Z) {
      if (x == S.zero()) continue;
      SIndex y = S.mul(a, x);
      if (y != S.zero() && central[y]) {
        found = true;
        if (!central[a] && !r.details.contains("witness"))
          r.details["witness"] = Json{{"a", S.label(a)}, {"x", S.label(x)}, {"y", S.label(y)}};
        break;
      }
    }
    if (!found) {
      r.verdict = Verdict::False;
      r.details["counterexample"] = Json{{"a", S.label(a)}};
      break;
    }
  }
  r.millis = millis_since(start);
  return r;
}

Json predicates_to_json(const SemiringPredicates &p) {
  Json j;
  j["additively_cancellative"] = p.additively_cancellative;
  j["zero_sum_free"] = p.zero_sum_free;
  j["reduced"] = p.reduced;
  j["semisubtractive"] = p.semisubtractive;
  j["multiplicatively_cancellative"] = p.multiplicatively_cancellative;
  j["complemented_idempotents_central"] = p.complemented_idempotents_central;
  j["additively_idempotent"] = p.additively_idempotent;
  j["multiplicatively_idempotent"] = p.multiplicatively_idempotent;
  j["certification"] = p.certification;
  if (!p.counterexamples.empty()) j["counterexamples"] = p.counterexamples;
  return j;
}

SemiringPredicates semiring_predicates(const FiniteSemiring &S) {
  SemiringPredicates p;
  auto n = static_cast<SIndex>(S.size());
  auto note = [&](const char *name, std::vector<SIndex> xs) {
    Json arr = Json::array();
    for (SIndex x : xs) arr.push_back(S.label(x));
    p.counterexamples[name] = arr;
  };
  p.additively_cancellative = true;
  for (SIndex x = 0; x < n && p.additively_cancellative; ++x)
    for (SIndex y = 0; y < n && p.additively_cancellative; ++y)
      for (SIndex z = 0; z < n; ++z)
        if (x != y && S.add(x, z) == S.add(y, z)) {
          p.additively_cancellative = false;
          note("additively_cancellative", {x, y, z});
          break;
        }
  p.zero_sum_free = true;
  p.reduced = true;
  p.semisubtractive = true;
  p.additively_idempotent = true;
  p.multiplicatively_idempotent = true;
  for (SIndex a = 0; a < n; ++a) {
    if (S.add(a, a) != a && p.additively_idempotent) {
      p.additively_idempotent = false;
      note("additively_idempotent", {a});
    }
    if (S.mul(a, a) != a && p.multiplicatively_idempotent) {
      p.multiplicatively_idempotent = false;
      note("multiplicatively_idempotent", {a});
    }
    for (SIndex b = 0; b < n; ++b) {
      if (p.zero_sum_free && S.add(a, b) == S.zero() && (a != S.zero() || b != S.zero())) {
        p.zero_sum_free = false;
        note("zero_sum_free", {a, b});
      }
      if (p.reduced && a != b && S.add(S.mul(a, a), S.mul(b, b)) == S.add(S.mul(a, b), S.mul(b, a))) {
        p.reduced = false;
        note("reduced", {a, b});
      }
      if (p.semisubtractive && a < b) {
        bool ok = false;
        for (SIndex x = 0; x < n && !ok; ++x) ok = S.add(a, x) == b || S.add(b, x) == a;
        if (!ok) {
          p.semisubtractive = false;
          note("semisubtractive", {a, b});
        }
      }
    }
  }
  p.multiplicatively_cancellative = true;
  for (SIndex x = 0; x < n && p.multiplicatively_cancellative; ++x) {
    if (x == S.zero()) continue;
    std::vector<int> left(n, -1), right(n, -1);
    for (SIndex y = 0; y < n; ++y) {
      SIndex l = S.mul(x, y), r = S.mul(y, x);
      if (left[l] >= 0 || right[r] >= 0) {
        p.multiplicatively_cancellative = false;
        note("multiplicatively_cancellative", {x, y, static_cast<SIndex>(left[l] >= 0 ? left[l] : right[r])});
        break;
      }
      left[l] = static_cast<int>(y);
      right[r] = static_cast<int>(y);
    }
  }
  auto Z = semiring_center(S);
  std::vector<bool> central(n, false);
  for (SIndex z : Z) central[z] = true;
  std::vector<SIndex> idem;
  for (SIndex e = 0; e < n; ++e)
    if (S.mul(e, e) == e) idem.push_back(e);
  p.complemented_idempotents_central = true;
  for (SIndex e : idem) {
    if (central[e]) continue;
    for (SIndex f : idem)
      if (S.add(e, f) == S.one()) {
        p.complemented_idempotents_central = false;
        note("complemented_idempotents_central", {e, f});
        break;
      }
    if (!p.complemented_idempotents_central) break;
  }
  return p;
}

Json semiring_to_json(const FiniteSemiring &S) {
  Json j;
  j["size"] = S.size();
  j["add"] = S.add_table();
  j["mul"] = S.mul_table();
  j["zero"] = S.zero();
  j["one"] = S.one();
  j["labels"] = S.labels();
  return j;
}

FiniteSemiring semiring_from_json(const Json &j) {
  auto need = [&](const char *key) -> const Json & {
    if (!j.is_object() || !j.contains(key))
      throw Error(ErrorCode::InvalidJson, std::string("/") + key + ": missing field");
    return j.at(key);
  };
  try {
    auto n = need("size").get<std::size_t>();
    auto add = need("add").get<std::vector<std::vector<SIndex>>>();
    auto mul = need("mul").get<std::vector<std::vector<SIndex>>>();
    auto zero = need("zero").get<SIndex>();
    auto one = need("one").get<SIndex>();
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) throw Error(ErrorCode::InvalidJson, "/labels: expected " + std::to_string(n) + " labels");
    return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), zero, one);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::InvalidJson, e.what());
  }
}

GroupSemiring::GroupSemiring(Coefficients kind, FiniteGroup group)
    : kind_(kind), group_(std::move(group)), structure_(group_algebra(ScalarRing::rationals(), group_).algebra) {}

Vec GroupSemiring::normalize(Vec v) const {
  if (kind_ == Coefficients::Boolean)
    for (auto &c : v)
      if (!ring().is_zero(c)) c = ring().one();
  return v;
}

Vec GroupSemiring::add(const Vec &a, const Vec &b) const { return normalize(vec_add(ring(), a, b)); }
Vec GroupSemiring::mul(const Vec &a, const Vec &b) const { return normalize(structure_.multiply(a, b)); }
Vec GroupSemiring::basis(std::size_t g) const { return unit_vec(ring(), dim(), g); }
Vec GroupSemiring::zero() const { return zero_vec(ring(), dim()); }

Vec GroupSemiring::subset_sum(const Subset &S) const {
  Vec v = zero();
  for (Index g : S) v[g] = ring().one();
  return v;
}

bool GroupSemiring::is_zero(const Vec &a) const { return is_zero_vec(ring(), a); }

bool GroupSemiring::is_member(const Vec &a) const {
  if (a.size() != dim()) return false;
  for (const auto &c : a) {
    const auto &q = std::get<BigRational>(c);
    if (q < 0) return false;
    if (kind_ == Coefficients::Boolean && q != 0 && q != 1) return false;
  }
  return true;
}

bool GroupSemiring::is_central(const Vec &a) const {
  for (std::size_t g = 0; g < dim(); ++g) {
    Vec e = basis(g);
    if (structure_.multiply(a, e) != structure_.multiply(e, a)) return false;
  }
  return true;
}

Vec GroupSemiring::random_element(std::mt19937_64 &rng, std::size_t max_support) const {
  Vec v = zero();
  std::size_t support = 1 + rng() % std::max<std::size_t>(1, max_support);
  for (std::size_t i = 0; i < support; ++i) {
    std::size_t g = rng() % dim();
    if (kind_ == Coefficients::Boolean) {
      v[g] = ring().one();
    } else {
      BigRational q(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 3));
      v[g] = ring().add(v[g], Scalar(q));
    }
  }
  return v;
}

std::string GroupSemiring::format(const Vec &a) const { return format_vec(structure_, a); }

namespace {

std::vector<Vec> class_sums(const GroupSemiring &S) {
  std::vector<Vec> out;
  for (const auto &cls : conjugacy_classes(S.group())) out.push_back(S.subset_sum(cls));
  return out;
}

// Group elements, class sums, subgroup sums and averages, central multiples and random elements.
std::vector<Vec> element_pool(const GroupSemiring &S, std::mt19937_64 &rng, std::size_t random_count) {
  const auto &G = S.group();
  const auto &Q = S.ring();
  std::vector<Vec> pool{S.zero()};
  for (std::size_t g = 0; g < S.dim(); ++g) pool.push_back(S.basis(g));
  for (const auto &c : class_sums(S)) pool.push_back(c);
  Vec zsum = S.subset_sum(group_center(G));
  for (std::size_t g = 0; g < S.dim(); ++g) pool.push_back(S.mul(S.basis(g), zsum));
  for (std::size_t g = 0; g < S.dim(); ++g) {
    Subset H = subgroup_generated(G, {static_cast<Index>(g)});
    Vec sum = S.subset_sum(H);
    pool.push_back(sum);
    if (S.kind() == Coefficients::NonNegativeRationals)
      pool.push_back(vec_scale(Q, Scalar(BigRational(1, static_cast<long>(H.size()))), sum));
    pool.push_back(S.add(S.one(), S.basis(g)));
  }
  for (std::size_t i = 0; i < random_count; ++i) pool.push_back(S.random_element(rng));
  return pool;
}

}  // namespace

Report is_ce_semiring(const GroupSemiring &S, std::mt19937_64 &rng, std::size_t samples) {
  auto start = Clock::now();
  Report r;
  r.predicate = "centrally_essential_semiring";
  r.strategy = "sampled-class-sum";
  r.certification = "sampled";
  if (is_abelian(S.group())) {
    r.verdict = Verdict::True;
    r.certification = "exact";
    r.details["commutative"] = true;
    r.millis = millis_since(start);
    return r;
  }
  Vec zsum = S.subset_sum(group_center(S.group()));
  auto sums = class_sums(S);
  std::size_t class_sum_hits = 0, other_hits = 0;
  r.verdict = Verdict::True;
  for (std::size_t i = 0; i < samples; ++i) {
    Vec a = S.random_element(rng);
    Vec y = S.mul(a, zsum);
    if (!S.is_zero(y) && S.is_central(y)) {
      ++class_sum_hits;
      if (!r.details.contains("witness"))
        r.details["witness"] = Json{{"a", S.format(a)}, {"x", S.format(zsum)}, {"y", S.format(y)}};
      continue;
    }
    bool found = false;
    for (const auto &x : sums) {
      Vec w = S.mul(a, x);
      if (!S.is_zero(w) && S.is_central(w)) {
        found = true;
        break;
      }
    }
    if (found) {
      ++other_hits;
      continue;
    }
    r.verdict = Verdict::Unknown;
    r.details["unresolved"] = S.format(a);
    break;
  }
  r.details["samples"] = samples;
  r.details["center_sum_witnesses"] = class_sum_hits;
  r.details["class_sum_witnesses"] = other_hits;
  r.millis = millis_since(start);
  return r;
}

SemiringPredicates semiring_predicates(const GroupSemiring &S, std::mt19937_64 &rng, std::size_t samples) {
  SemiringPredicates p;
  p.certification = "sampled";
  const auto &Q = S.ring();
  auto pool = element_pool(S, rng, 64);
  auto pick = [&]() -> const Vec & { return pool[rng() % pool.size()]; };
  auto note = [&](const char *name, std::vector<Vec> xs) {
    Json arr = Json::array();
    for (const auto &x : xs) arr.push_back(S.format(x));
    p.counterexamples[name] = arr;
  };
  p.additively_cancellative = p.zero_sum_free = p.reduced = p.semisubtractive = true;
  p.multiplicatively_cancellative = p.additively_idempotent = p.multiplicatively_idempotent = true;
  auto comparable = [&](const Vec &a, const Vec &b) {
    bool le = true, ge = true;
    for (std::size_t g = 0; g < S.dim(); ++g) {
      const auto &x = std::get<BigRational>(a[g]);
      const auto &y = std::get<BigRational>(b[g]);
      if (S.kind() == Coefficients::Boolean) {
        le = le && (x == 0 || y != 0);
        ge = ge && (y == 0 || x != 0);
      } else {
        le = le && x <= y;
        ge = ge && y <= x;
      }
    }
    return le || ge;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec &x = pick();
    const Vec &y = pick();
    const Vec &z = pick();
    if (p.additively_cancellative && x != y && S.add(x, z) == S.add(y, z)) {
      p.additively_cancellative = false;
      note("additively_cancellative", {x, y, z});
    }
    if (p.zero_sum_free && S.is_zero(S.add(x, y)) && !(S.is_zero(x) && S.is_zero(y))) {
      p.zero_sum_free = false;
      note("zero_sum_free", {x, y});
    }
    if (p.reduced && x != y && S.add(S.mul(x, x), S.mul(y, y)) == S.add(S.mul(x, y), S.mul(y, x))) {
      p.reduced = false;
      note("reduced", {x, y});
    }
    if (p.semisubtractive && x != y && !comparable(x, y)) {
      p.semisubtractive = false;
      note("semisubtractive", {x, y});
    }
    if (p.multiplicatively_cancellative && !S.is_zero(x) && y != z &&
        (S.mul(x, y) == S.mul(x, z) || S.mul(y, x) == S.mul(z, x))) {
      p.multiplicatively_cancellative = false;
      note("multiplicatively_cancellative", {x, y, z});
    }
    if (p.additively_idempotent && S.add(x, x) != x) {
      p.additively_idempotent = false;
      note("additively_idempotent", {x});
    }
    if (p.multiplicatively_idempotent && S.mul(x, x) != x) {
      p.multiplicatively_idempotent = false;
      note("multiplicatively_idempotent", {x});
    }
  }
  p.complemented_idempotents_central = true;
  std::vector<Vec> idem;
  for (const auto &e : pool)
    if (S.mul(e, e) == e) idem.push_back(e);
  for (const auto &e : idem) {
    if (S.is_central(e)) continue;
    Vec f = vec_sub(Q, S.one(), e);
    bool complemented = false;
    for (const auto &g : idem) complemented = complemented || S.add(e, g) == S.one();
    if (!complemented && S.kind() == Coefficients::NonNegativeRationals && S.is_member(f) && S.mul(f, f) == f)
      complemented = true;
    if (complemented) {
      p.complemented_idempotents_central = false;
      note("complemented_idempotents_central", {e});
      break;
    }
  }
  return p;
}

}  // namespace celab
