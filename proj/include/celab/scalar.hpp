#ifndef CELAB_SCALAR_HPP
#define CELAB_SCALAR_HPP

#include "celab/upoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace celab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Polynomial in at most two variables; keys are (deg_x, deg_y). Zero coefficients are never stored.
struct Poly2 {
  std::map<std::pair<int, int>, BigInt> terms;
  bool operator==(const Poly2 &o) const { return terms == o.terms; }
};

/// Element of F_p(t) in lowest terms with monic denominator.
struct RatFunc {
  UPoly num;
  UPoly den{1};
  bool operator==(const RatFunc &o) const { return num == o.num && den == o.den; }
};

/// Payload only. Finite rings use an integer code; the owning ScalarRing interprets it.
using Scalar = std::variant<std::int64_t, BigRational, Poly2, RatFunc>;

enum class ScalarKind {
  PrimeField,
  GaloisField,
  ResidueRing,
  Rationals,
  PolynomialRing,
  RationalFunctionField,
};

struct ScalarRingSpec {
  ScalarKind kind = ScalarKind::PrimeField;
  // p for F_p, GF(p^k) and F_p(t); n for Z_n; 0 (integers) or p for polynomial rings.
  std::int64_t modulus = 2;
  int degree = 1;
  UPoly poly_modulus;
  std::vector<std::string> variables;
  std::vector<std::string> derivations;

  bool operator==(const ScalarRingSpec &o) const = default;
};

class ScalarRing {
 public:
  explicit ScalarRing(ScalarRingSpec spec);

  static ScalarRing prime_field(std::int64_t p);
  static ScalarRing galois_field(std::int64_t p, int k, UPoly modulus = {});
  static ScalarRing residue_ring(std::int64_t n);
  static ScalarRing rationals();
  static ScalarRing polynomial_ring(std::int64_t base_modulus, std::vector<std::string> variables);
  static ScalarRing rational_function_field(std::int64_t p, std::string variable = "t");
  /// Accepts F<p>, GF<q>, Z<n>, Q, Z[x,y], F<p>[x,y], F<p>(t).
  static ScalarRing from_name(const std::string &name);

  const ScalarRingSpec &spec() const;
  ScalarKind kind() const { return spec().kind; }
  std::string name() const;
  bool is_field() const;
  bool is_finite() const;
  std::int64_t characteristic() const;
  /// Number of elements, 0 when infinite.
  std::uint64_t size() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_bigint(const BigInt &v) const;

  Scalar add(const Scalar &a, const Scalar &b) const;
  Scalar sub(const Scalar &a, const Scalar &b) const;
  Scalar neg(const Scalar &a) const;
  Scalar mul(const Scalar &a, const Scalar &b) const;
  Scalar pow(const Scalar &a, std::uint64_t e) const;
  bool is_zero(const Scalar &a) const;
  bool is_one(const Scalar &a) const;
  bool is_unit(const Scalar &a) const;
  Scalar invert(const Scalar &a) const;
  Scalar divide(const Scalar &a, const Scalar &b) const;

  Scalar derive(const Scalar &a, const std::string &derivation) const;
  Scalar frobenius(const Scalar &a) const;
  /// Inverse of x -> x^p; finite fields only.
  Scalar frobenius_inverse(const Scalar &a) const;

  /// Finite rings: bijection with [0, size()).
  std::uint64_t code(const Scalar &a) const;
  Scalar from_code(std::uint64_t c) const;
  std::vector<Scalar> elements() const;

  Scalar parse(std::string_view text) const;
  std::string format(const Scalar &a) const;
  Scalar random(std::mt19937_64 &rng) const;

  /// Z_n only: the residue in [0, n).
  std::int64_t residue(const Scalar &a) const { return std::get<std::int64_t>(a); }

  bool operator==(const ScalarRing &o) const;
  bool operator!=(const ScalarRing &o) const { return !(*this == o); }

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::int64_t n);

}  // namespace celab

#endif
