#include "celab/scalar.hpp"

#include "celab/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace celab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct ScalarRing::Impl {
  ScalarRingSpec spec;
  std::uint64_t q = 0;  // size of a finite ring
  // GF(p^k) lookup tables, filled when q is small.
  std::vector<std::int32_t> gf_add, gf_mul, gf_inv;
};

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t(1) << 31;

using Impl = ScalarRing::Impl;

std::int64_t md(std::int64_t a, std::int64_t n) { return upoly::mod(a, n); }

std::int64_t bigmod(const BigInt &v, std::int64_t n) {
  BigInt r = v % n;
  if (r < 0) r += n;
  return static_cast<std::int64_t>(r);
}

// GF(p^k) elements as digit vectors.
UPoly gf_digits(std::int64_t code, const ScalarRingSpec &s) {
  UPoly f(s.degree, 0);
  for (int i = 0; i < s.degree; ++i) {
    f[i] = code % s.modulus;
    code /= s.modulus;
  }
  upoly::trim(f);
  return f;
}

std::int64_t gf_code(const UPoly &f, const ScalarRingSpec &s) {
  std::int64_t c = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) c = c * s.modulus + f[i];
  return c;
}

std::int64_t gf_mul_raw(std::int64_t a, std::int64_t b, const ScalarRingSpec &s) {
  UPoly f = upoly::mul(gf_digits(a, s), gf_digits(b, s), s.modulus);
  return gf_code(upoly::rem(f, s.poly_modulus, s.modulus), s);
}

std::int64_t gf_add_raw(std::int64_t a, std::int64_t b, const ScalarRingSpec &s) {
  std::int64_t c = 0, place = 1;
  for (int i = 0; i < s.degree; ++i) {
    std::int64_t d = (a % s.modulus + b % s.modulus) % s.modulus;
    c += d * place;
    place *= s.modulus;
    a /= s.modulus;
    b /= s.modulus;
  }
  return c;
}

std::int64_t gf_neg_raw(std::int64_t a, const ScalarRingSpec &s) {
  std::int64_t c = 0, place = 1;
  for (int i = 0; i < s.degree; ++i) {
    c += md(-(a % s.modulus), s.modulus) * place;
    place *= s.modulus;
    a /= s.modulus;
  }
  return c;
}

// Polynomial ring helpers; m == 0 means integer coefficients.
void poly_put(Poly2 &f, std::pair<int, int> mono, BigInt c, std::int64_t m) {
  if (m > 0) {
    c %= m;
    if (c < 0) c += m;
  }
  if (c == 0) {
    f.terms.erase(mono);
    return;
  }
  f.terms[mono] = c;
}

Poly2 poly_add(const Poly2 &a, const Poly2 &b, std::int64_t m, int sign) {
  Poly2 r = a;
  for (const auto &[mono, c] : b.terms) {
    auto it = r.terms.find(mono);
    BigInt v = (it == r.terms.end() ? BigInt(0) : it->second) + sign * c;
    poly_put(r, mono, v, m);
  }
  return r;
}

Poly2 poly_mul(const Poly2 &a, const Poly2 &b, std::int64_t m) {
  Poly2 r;
  std::map<std::pair<int, int>, BigInt> acc;
  for (const auto &[ma, ca] : a.terms)
    for (const auto &[mb, cb] : b.terms) acc[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  for (auto &[mono, c] : acc) poly_put(r, mono, c, m);
  return r;
}

Poly2 poly_const(const BigInt &c, std::int64_t m) {
  Poly2 r;
  poly_put(r, {0, 0}, c, m);
  return r;
}

std::string poly_format(const Poly2 &f, const std::vector<std::string> &vars) {
  if (f.terms.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, BigInt>> terms(f.terms.begin(), f.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto &[mono, c] : terms) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string m;
    auto var = [&](int idx, int e) {
      if (e == 0) return;
      if (!m.empty()) m += "*";
      m += vars[idx];
      if (e > 1) m += "^" + std::to_string(e);
    };
    var(0, mono.first);
    if (vars.size() > 1) var(1, mono.second);
    if (m.empty()) out += mag.str();
    else if (mag == 1) out += m;
    else out += mag.str() + "*" + m;
  }
  return out;
}

RatFunc ratfunc_make(UPoly num, UPoly den, std::int64_t p) {
  upoly::trim(num);
  upoly::trim(den);
  if (den.empty()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.empty()) return RatFunc{{}, {1}};
  UPoly g = upoly::gcd(num, den, p);
  UPoly q, r;
  upoly::divmod(num, g, p, q, r);
  num = q;
  upoly::divmod(den, g, p, q, r);
  den = q;
  std::int64_t lead_inv = upoly::inv_mod(den.back(), p);
  return RatFunc{upoly::scale(num, lead_inv, p), upoly::scale(den, lead_inv, p)};
}

void check_same_kind(const Scalar &a, const Scalar &b) {
  if (a.index() != b.index()) throw Error(ErrorCode::ScalarMismatch, "scalars from different rings");
}

std::int64_t as_int(const Scalar &a) {
  if (auto *v = std::get_if<std::int64_t>(&a)) return *v;
  throw Error(ErrorCode::ScalarMismatch, "expected a finite-ring scalar");
}

}  // namespace

ScalarRing::ScalarRing(ScalarRingSpec spec) {
  auto impl = std::make_shared<Impl>();
  switch (spec.kind) {
    case ScalarKind::PrimeField:
      if (!is_prime(spec.modulus) || spec.modulus >= kMaxModulus)
        throw Error(ErrorCode::NonPrimeModulus, std::to_string(spec.modulus));
      spec.degree = 1;
      impl->q = spec.modulus;
      break;
    case ScalarKind::ResidueRing:
      if (spec.modulus < 2 || spec.modulus >= kMaxModulus)
        throw Error(ErrorCode::InvalidModulus, std::to_string(spec.modulus));
      spec.degree = 1;
      impl->q = spec.modulus;
      break;
    case ScalarKind::GaloisField: {
      if (!is_prime(spec.modulus) || spec.modulus >= kMaxModulus)
        throw Error(ErrorCode::NonPrimeModulus, std::to_string(spec.modulus));
      if (spec.degree < 1) throw Error(ErrorCode::UnsupportedParameter, "field degree must be positive");
      if (spec.poly_modulus.empty()) spec.poly_modulus = upoly::first_irreducible(spec.degree, spec.modulus);
      for (auto &c : spec.poly_modulus) c = md(c, spec.modulus);
      upoly::trim(spec.poly_modulus);
      if (upoly::degree(spec.poly_modulus) != spec.degree || spec.poly_modulus.back() != 1)
        throw Error(ErrorCode::ReduciblePolynomial, "modulus must be monic of degree " + std::to_string(spec.degree));
      if (!upoly::is_irreducible(spec.poly_modulus, spec.modulus))
        throw Error(ErrorCode::ReduciblePolynomial, upoly::format(spec.poly_modulus, "t"));
      if (spec.variables.empty()) spec.variables = {"t"};
      std::uint64_t q = 1;
      for (int i = 0; i < spec.degree; ++i) {
        q *= spec.modulus;
        if (q >= std::uint64_t(kMaxModulus)) throw Error(ErrorCode::UnsupportedParameter, "field too large");
      }
      impl->q = q;
      if (q <= 256) {
        impl->gf_add.resize(q * q);
        impl->gf_mul.resize(q * q);
        impl->gf_inv.assign(q, -1);
        for (std::uint64_t a = 0; a < q; ++a)
          for (std::uint64_t b = 0; b < q; ++b) {
            impl->gf_add[a * q + b] = static_cast<std::int32_t>(gf_add_raw(a, b, spec));
            impl->gf_mul[a * q + b] = static_cast<std::int32_t>(gf_mul_raw(a, b, spec));
            if (impl->gf_mul[a * q + b] == 1) impl->gf_inv[a] = static_cast<std::int32_t>(b);
          }
      }
      break;
    }
    case ScalarKind::Rationals:
      spec.modulus = 0;
      break;
    case ScalarKind::PolynomialRing:
      if (spec.modulus != 0 && !is_prime(spec.modulus))
        throw Error(ErrorCode::NonPrimeModulus, std::to_string(spec.modulus));
      if (spec.variables.empty() || spec.variables.size() > 2)
        throw Error(ErrorCode::UnsupportedParameter, "polynomial rings need one or two variables");
      if (spec.derivations.empty())
        for (const auto &v : spec.variables) spec.derivations.push_back("d/d" + v);
      break;
    case ScalarKind::RationalFunctionField:
      if (!is_prime(spec.modulus) || spec.modulus >= kMaxModulus)
        throw Error(ErrorCode::NonPrimeModulus, std::to_string(spec.modulus));
      if (spec.variables.size() != 1) spec.variables = {"t"};
      if (spec.derivations.empty()) spec.derivations = {"d/d" + spec.variables[0]};
      break;
  }
  impl->spec = std::move(spec);
  impl_ = std::move(impl);
}

ScalarRing ScalarRing::prime_field(std::int64_t p) {
  ScalarRingSpec s;
  s.kind = ScalarKind::PrimeField;
  s.modulus = p;
  return ScalarRing(s);
}

ScalarRing ScalarRing::galois_field(std::int64_t p, int k, UPoly modulus) {
  ScalarRingSpec s;
  s.kind = ScalarKind::GaloisField;
  s.modulus = p;
  s.degree = k;
  s.poly_modulus = std::move(modulus);
  return ScalarRing(s);
}

ScalarRing ScalarRing::residue_ring(std::int64_t n) {
  ScalarRingSpec s;
  s.kind = ScalarKind::ResidueRing;
  s.modulus = n;
  return ScalarRing(s);
}

ScalarRing ScalarRing::rationals() {
  ScalarRingSpec s;
  s.kind = ScalarKind::Rationals;
  return ScalarRing(s);
}

ScalarRing ScalarRing::polynomial_ring(std::int64_t base_modulus, std::vector<std::string> variables) {
  ScalarRingSpec s;
  s.kind = ScalarKind::PolynomialRing;
  s.modulus = base_modulus;
  s.variables = std::move(variables);
  return ScalarRing(s);
}

ScalarRing ScalarRing::rational_function_field(std::int64_t p, std::string variable) {
  ScalarRingSpec s;
  s.kind = ScalarKind::RationalFunctionField;
  s.modulus = p;
  s.variables = {std::move(variable)};
  return ScalarRing(s);
}

ScalarRing ScalarRing::from_name(const std::string &name) {
  auto number = [&](std::size_t pos, std::size_t end) -> std::int64_t {
    std::string digits = name.substr(pos, end - pos);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 12)
      throw Error(ErrorCode::ParseError, "bad scalar ring name '" + name + "'");
    return std::stoll(digits);
  };
  auto vars_in = [&](std::size_t open, char close) {
    std::vector<std::string> vars;
    std::string body = name.substr(open + 1);
    if (body.empty() || body.back() != close) throw Error(ErrorCode::ParseError, "bad scalar ring name '" + name + "'");
    body.pop_back();
    std::stringstream ss(body);
    std::string v;
    while (std::getline(ss, v, ',')) vars.push_back(v);
    return vars;
  };
  if (name == "Q") return rationals();
  if (name.rfind("GF", 0) == 0) {
    std::int64_t q = number(2, name.size());
    for (std::int64_t p = 2; p <= q; ++p) {
      if (!is_prime(p) || q % p != 0) continue;
      int k = 0;
      std::int64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++k;
      }
      if (r != 1) break;
      return galois_field(p, k);
    }
    throw Error(ErrorCode::NonPrimeModulus, "GF order must be a prime power: " + name);
  }
  if (name.rfind("Z[", 0) == 0) return polynomial_ring(0, vars_in(1, ']'));
  if (name.rfind("Z", 0) == 0) return residue_ring(number(1, name.size()));
  if (name.rfind("F", 0) == 0) {
    std::size_t end = 1;
    while (end < name.size() && std::isdigit(static_cast<unsigned char>(name[end]))) ++end;
    std::int64_t p = number(1, end);
    if (end == name.size()) return prime_field(p);
    if (name[end] == '[') return polynomial_ring(p, vars_in(end, ']'));
    if (name[end] == '(') {
      auto vars = vars_in(end, ')');
      if (vars.size() != 1) throw Error(ErrorCode::ParseError, "function fields take one variable");
      return rational_function_field(p, vars[0]);
    }
  }
  throw Error(ErrorCode::ParseError, "unknown scalar ring '" + name + "'");
}

const ScalarRingSpec &ScalarRing::spec() const { return impl_->spec; }

std::string ScalarRing::name() const {
  const auto &s = spec();
  auto join = [](const std::vector<std::string> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out;
  };
  switch (s.kind) {
    case ScalarKind::PrimeField: return "F" + std::to_string(s.modulus);
    case ScalarKind::GaloisField: return "GF" + std::to_string(impl_->q);
    case ScalarKind::ResidueRing: return "Z" + std::to_string(s.modulus);
    case ScalarKind::Rationals: return "Q";
    case ScalarKind::PolynomialRing:
      return (s.modulus == 0 ? std::string("Z") : "F" + std::to_string(s.modulus)) + "[" + join(s.variables) + "]";
    case ScalarKind::RationalFunctionField: return "F" + std::to_string(s.modulus) + "(" + s.variables[0] + ")";
  }
  return "?";
}

bool ScalarRing::is_field() const {
  switch (kind()) {
    case ScalarKind::PrimeField:
    case ScalarKind::GaloisField:
    case ScalarKind::Rationals:
    case ScalarKind::RationalFunctionField: return true;
    case ScalarKind::ResidueRing: return is_prime(spec().modulus);
    case ScalarKind::PolynomialRing: return false;
  }
  return false;
}

bool ScalarRing::is_finite() const { return impl_->q != 0; }

std::int64_t ScalarRing::characteristic() const {
  switch (kind()) {
    case ScalarKind::Rationals: return 0;
    default: return spec().modulus;
  }
}

std::uint64_t ScalarRing::size() const { return impl_->q; }

Scalar ScalarRing::zero() const { return from_int(0); }
Scalar ScalarRing::one() const { return from_int(1); }

Scalar ScalarRing::from_int(std::int64_t v) const { return from_bigint(BigInt(v)); }

Scalar ScalarRing::from_bigint(const BigInt &v) const {
  const auto &s = spec();
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing:
    case ScalarKind::GaloisField: return bigmod(v, s.modulus);
    case ScalarKind::Rationals: return BigRational(v);
    case ScalarKind::PolynomialRing: return poly_const(v, s.modulus);
    case ScalarKind::RationalFunctionField: {
      UPoly f{bigmod(v, s.modulus)};
      upoly::trim(f);
      return RatFunc{f, {1}};
    }
  }
  return std::int64_t(0);
}

Scalar ScalarRing::add(const Scalar &a, const Scalar &b) const {
  check_same_kind(a, b);
  const auto &s = spec();
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing: return (as_int(a) + as_int(b)) % s.modulus;
    case ScalarKind::GaloisField:
      if (!impl_->gf_add.empty()) return std::int64_t(impl_->gf_add[as_int(a) * impl_->q + as_int(b)]);
      return gf_add_raw(as_int(a), as_int(b), s);
    case ScalarKind::Rationals: return BigRational(std::get<BigRational>(a) + std::get<BigRational>(b));
    case ScalarKind::PolynomialRing: return poly_add(std::get<Poly2>(a), std::get<Poly2>(b), s.modulus, 1);
    case ScalarKind::RationalFunctionField: {
      const auto &x = std::get<RatFunc>(a), &y = std::get<RatFunc>(b);
      std::int64_t p = s.modulus;
      return ratfunc_make(upoly::add(upoly::mul(x.num, y.den, p), upoly::mul(y.num, x.den, p), p),
                          upoly::mul(x.den, y.den, p), p);
    }
  }
  return a;
}

Scalar ScalarRing::neg(const Scalar &a) const {
  const auto &s = spec();
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing: return md(-as_int(a), s.modulus);
    case ScalarKind::GaloisField: return gf_neg_raw(as_int(a), s);
    case ScalarKind::Rationals: return BigRational(-std::get<BigRational>(a));
    case ScalarKind::PolynomialRing: return poly_add(Poly2{}, std::get<Poly2>(a), s.modulus, -1);
    case ScalarKind::RationalFunctionField: {
      const auto &x = std::get<RatFunc>(a);
      return RatFunc{upoly::scale(x.num, -1, s.modulus), x.den};
    }
  }
  return a;
}

Scalar ScalarRing::sub(const Scalar &a, const Scalar &b) const {
  check_same_kind(a, b);
  if (kind() == ScalarKind::PolynomialRing)
    return poly_add(std::get<Poly2>(a), std::get<Poly2>(b), spec().modulus, -1);
  return add(a, neg(b));
}

Scalar ScalarRing::mul(const Scalar &a, const Scalar &b) const {
  check_same_kind(a, b);
  const auto &s = spec();
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing: return as_int(a) * as_int(b) % s.modulus;
    case ScalarKind::GaloisField:
      if (!impl_->gf_mul.empty()) return std::int64_t(impl_->gf_mul[as_int(a) * impl_->q + as_int(b)]);
      return gf_mul_raw(as_int(a), as_int(b), s);
    case ScalarKind::Rationals: return BigRational(std::get<BigRational>(a) * std::get<BigRational>(b));
    case ScalarKind::PolynomialRing: return poly_mul(std::get<Poly2>(a), std::get<Poly2>(b), s.modulus);
    case ScalarKind::RationalFunctionField: {
      const auto &x = std::get<RatFunc>(a), &y = std::get<RatFunc>(b);
      std::int64_t p = s.modulus;
      return ratfunc_make(upoly::mul(x.num, y.num, p), upoly::mul(x.den, y.den, p), p);
    }
  }
  return a;
}

Scalar ScalarRing::pow(const Scalar &a, std::uint64_t e) const {
  Scalar result = one(), base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool ScalarRing::is_zero(const Scalar &a) const { return a == zero(); }
bool ScalarRing::is_one(const Scalar &a) const { return a == one(); }

bool ScalarRing::is_unit(const Scalar &a) const {
  const auto &s = spec();
  switch (s.kind) {
    case ScalarKind::ResidueRing: {
      std::int64_t x = as_int(a), n = s.modulus;
      while (n) {
        std::int64_t t = x % n;
        x = n;
        n = t;
      }
      return x == 1;
    }
    case ScalarKind::PolynomialRing: {
      const auto &f = std::get<Poly2>(a);
      if (f.terms.size() != 1 || f.terms.begin()->first != std::make_pair(0, 0)) return false;
      if (s.modulus != 0) return true;
      const BigInt &c = f.terms.begin()->second;
      return c == 1 || c == -1;
    }
    default: return !is_zero(a);
  }
}

Scalar ScalarRing::invert(const Scalar &a) const {
  const auto &s = spec();
  if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing: return upoly::inv_mod(as_int(a), s.modulus);
    case ScalarKind::GaloisField:
      if (!impl_->gf_inv.empty()) return std::int64_t(impl_->gf_inv[as_int(a)]);
      return pow(a, impl_->q - 2);
    case ScalarKind::Rationals: return BigRational(1 / std::get<BigRational>(a));
    case ScalarKind::PolynomialRing: {
      if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, format(a) + " in " + name());
      const BigInt &c = std::get<Poly2>(a).terms.begin()->second;
      if (s.modulus == 0) return a;
      return poly_const(upoly::inv_mod(static_cast<std::int64_t>(c), s.modulus), s.modulus);
    }
    case ScalarKind::RationalFunctionField: {
      const auto &x = std::get<RatFunc>(a);
      return ratfunc_make(x.den, x.num, s.modulus);
    }
  }
  return a;
}

Scalar ScalarRing::divide(const Scalar &a, const Scalar &b) const { return mul(a, invert(b)); }

Scalar ScalarRing::derive(const Scalar &a, const std::string &derivation) const {
  const auto &s = spec();
  auto it = std::find(s.derivations.begin(), s.derivations.end(), derivation);
  if (it == s.derivations.end()) throw Error(ErrorCode::NoSuchDerivation, derivation + " on " + name());
  if (s.kind == ScalarKind::PolynomialRing) {
    int var = -1;
    for (std::size_t i = 0; i < s.variables.size(); ++i)
      if (derivation == "d/d" + s.variables[i]) var = static_cast<int>(i);
    if (var < 0) throw Error(ErrorCode::NoSuchDerivation, derivation);
    Poly2 r;
    for (const auto &[mono, c] : std::get<Poly2>(a).terms) {
      int e = var == 0 ? mono.first : mono.second;
      if (e == 0) continue;
      std::pair<int, int> m = mono;
      (var == 0 ? m.first : m.second) -= 1;
      poly_put(r, m, c * e, s.modulus);
    }
    return r;
  }
  if (s.kind == ScalarKind::RationalFunctionField) {
    const auto &x = std::get<RatFunc>(a);
    std::int64_t p = s.modulus;
    UPoly num = upoly::sub(upoly::mul(upoly::derivative(x.num, p), x.den, p),
                           upoly::mul(x.num, upoly::derivative(x.den, p), p), p);
    return ratfunc_make(num, upoly::mul(x.den, x.den, p), p);
  }
  throw Error(ErrorCode::NoSuchDerivation, derivation);
}

Scalar ScalarRing::frobenius(const Scalar &a) const {
  const auto &s = spec();
  std::int64_t ch = characteristic();
  if (ch == 0) throw Error(ErrorCode::CharacteristicZero, "frobenius on " + name());
  if (!is_prime(ch)) throw Error(ErrorCode::UnsupportedParameter, "frobenius needs prime characteristic, got " + name());
  (void)s;
  return pow(a, static_cast<std::uint64_t>(ch));
}

Scalar ScalarRing::frobenius_inverse(const Scalar &a) const {
  switch (kind()) {
    case ScalarKind::PrimeField: return a;
    case ScalarKind::ResidueRing:
      if (is_field()) return a;
      break;
    case ScalarKind::GaloisField: {
      Scalar r = a;
      for (int i = 1; i < spec().degree; ++i) r = frobenius(r);
      return r;
    }
    default: break;
  }
  throw Error(ErrorCode::UnsupportedScalars, "inverse frobenius on " + name());
}

std::uint64_t ScalarRing::code(const Scalar &a) const {
  if (!is_finite()) throw Error(ErrorCode::UnsupportedScalars, "codes need a finite ring");
  return static_cast<std::uint64_t>(as_int(a));
}

Scalar ScalarRing::from_code(std::uint64_t c) const {
  if (!is_finite() || c >= impl_->q) throw Error(ErrorCode::UnsupportedScalars, "bad element code");
  return static_cast<std::int64_t>(c);
}

std::vector<Scalar> ScalarRing::elements() const {
  if (!is_finite()) throw Error(ErrorCode::UnsupportedScalars, "cannot enumerate " + name());
  std::vector<Scalar> out;
  out.reserve(impl_->q);
  for (std::uint64_t c = 0; c < impl_->q; ++c) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

std::string ScalarRing::format(const Scalar &a) const {
  const auto &s = spec();
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing: return std::to_string(as_int(a));
    case ScalarKind::GaloisField: return upoly::format(gf_digits(as_int(a), s), s.variables[0]);
    case ScalarKind::Rationals: {
      const auto &r = std::get<BigRational>(a);
      BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
      return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
    case ScalarKind::PolynomialRing: return poly_format(std::get<Poly2>(a), s.variables);
    case ScalarKind::RationalFunctionField: {
      const auto &x = std::get<RatFunc>(a);
      std::string num = upoly::format(x.num, s.variables[0]);
      if (x.den == UPoly{1}) return num;
      return "(" + num + ")/(" + upoly::format(x.den, s.variables[0]) + ")";
    }
  }
  return "?";
}

Scalar ScalarRing::random(std::mt19937_64 &rng) const {
  const auto &s = spec();
  auto small = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  switch (s.kind) {
    case ScalarKind::PrimeField:
    case ScalarKind::ResidueRing:
    case ScalarKind::GaloisField: return static_cast<std::int64_t>(rng() % impl_->q);
    case ScalarKind::Rationals: return BigRational(small(-5, 5), small(1, 5));
    case ScalarKind::PolynomialRing: {
      Poly2 f;
      int terms = small(0, 3);
      for (int i = 0; i < terms; ++i) {
        std::pair<int, int> mono{small(0, 2), s.variables.size() > 1 ? small(0, 2) : 0};
        auto it = f.terms.find(mono);
        BigInt c = (it == f.terms.end() ? BigInt(0) : it->second) + small(-3, 3);
        poly_put(f, mono, c, s.modulus);
      }
      return f;
    }
    case ScalarKind::RationalFunctionField: {
      std::int64_t p = s.modulus;
      UPoly num(small(0, 3)), den(small(1, 2));
      for (auto &c : num) c = static_cast<std::int64_t>(rng() % p);
      for (auto &c : den) c = static_cast<std::int64_t>(rng() % p);
      den.push_back(1);
      return ratfunc_make(num, den, p);
    }
  }
  return zero();
}

bool ScalarRing::operator==(const ScalarRing &o) const {
  return impl_ == o.impl_ || impl_->spec == o.impl_->spec;
}

// Expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | variable | '(' expr ')'
namespace {

class Parser {
 public:
  Parser(const ScalarRing &ring, std::string_view text) : ring_(ring), text_(text) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string &msg) {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v = ring_.add(v, term());
      else if (eat('-')) v = ring_.sub(v, term());
      else return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = ring_.mul(v, unary());
      } else if (eat('/')) {
        Scalar d = unary();
        if (ring_.kind() == ScalarKind::PolynomialRing && !ring_.is_unit(d))
          fail("division by a non-unit polynomial");
        v = ring_.divide(v, d);
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return ring_.neg(unary());
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!eat('^')) return base;
    skip();
    bool negative = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected exponent");
    std::uint64_t e = std::stoull(std::string(text_.substr(start, pos_ - start)));
    Scalar r = ring_.pow(base, e);
    return negative ? ring_.invert(r) : r;
  }

  Scalar atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.from_bigint(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar variable(const std::string &name) {
    const auto &s = ring_.spec();
    for (std::size_t i = 0; i < s.variables.size(); ++i) {
      if (s.variables[i] != name) continue;
      switch (s.kind) {
        case ScalarKind::GaloisField: {
          if (s.degree == 1) return ring_.from_code(0 + (s.poly_modulus.empty() ? 0 : upoly::mod(-s.poly_modulus[0], s.modulus)));
          return static_cast<std::int64_t>(s.modulus);
        }
        case ScalarKind::PolynomialRing: {
          Poly2 f;
          f.terms[i == 0 ? std::make_pair(1, 0) : std::make_pair(0, 1)] = 1;
          return f;
        }
        case ScalarKind::RationalFunctionField: return RatFunc{{0, 1}, {1}};
        default: break;
      }
    }
    fail("unknown variable '" + name + "' for " + ring_.name());
  }

  const ScalarRing &ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar ScalarRing::parse(std::string_view text) const { return Parser(*this, text).run(); }

}  // namespace celab
