#include "celab/upoly.hpp"

#include "celab/error.hpp"

#include <algorithm>

namespace celab {
namespace upoly {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error(ErrorCode::NotAUnit, std::to_string(a) + " mod " + std::to_string(p));
  return mod(t, p);
}

void trim(UPoly &f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly &f) { return static_cast<int>(f.size()) - 1; }

UPoly add(const UPoly &f, const UPoly &g, std::int64_t p) {
  UPoly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = (h[i] + g[i]) % p;
  trim(h);
  return h;
}

UPoly sub(const UPoly &f, const UPoly &g, std::int64_t p) {
  UPoly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = mod(h[i] - g[i], p);
  trim(h);
  return h;
}

UPoly scale(const UPoly &f, std::int64_t c, std::int64_t p) {
  UPoly h(f.size());
  c = mod(c, p);
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i] * c % p;
  trim(h);
  return h;
}

UPoly mul(const UPoly &f, const UPoly &g, std::int64_t p) {
  if (f.empty() || g.empty()) return {};
  UPoly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  }
  trim(h);
  return h;
}

void divmod(const UPoly &f, const UPoly &g, std::int64_t p, UPoly &q, UPoly &r) {
  if (g.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  r = f;
  q.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  std::int64_t lead_inv = inv_mod(g.back(), p);
  while (r.size() >= g.size()) {
    std::size_t shift = r.size() - g.size();
    std::int64_t c = r.back() * lead_inv % p;
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) r[i + shift] = mod(r[i + shift] - c * g[i], p);
    trim(r);
  }
  trim(q);
}

UPoly rem(const UPoly &f, const UPoly &g, std::int64_t p) {
  UPoly q, r;
  divmod(f, g, p, q, r);
  return r;
}

UPoly monic(const UPoly &f, std::int64_t p) {
  if (f.empty()) return f;
  return scale(f, inv_mod(f.back(), p), p);
}

UPoly gcd(UPoly f, UPoly g, std::int64_t p) {
  while (!g.empty()) {
    UPoly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, p);
}

UPoly derivative(const UPoly &f, std::int64_t p) {
  UPoly h;
  for (std::size_t i = 1; i < f.size(); ++i) h.push_back(static_cast<std::int64_t>(i) % p * f[i] % p);
  trim(h);
  return h;
}

namespace {

// Monic polynomial of degree d whose lower coefficients are the base-p digits of idx.
UPoly monic_from_index(int d, std::uint64_t idx, std::int64_t p) {
  UPoly f(d + 1, 0);
  f[d] = 1;
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<std::int64_t>(idx % p);
    idx /= p;
  }
  return f;
}

}  // namespace

bool is_irreducible(const UPoly &f, std::int64_t p) {
  int n = degree(f);
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (rem(f, monic_from_index(d, idx, p), p).empty()) return false;
    }
  }
  return true;
}

UPoly first_irreducible(int degree, std::int64_t p) {
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    UPoly f = monic_from_index(degree, idx, p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::ReduciblePolynomial, "no irreducible polynomial found");
}

std::string format(const UPoly &f, const std::string &var) {
  if (f.empty()) return "0";
  std::string out;
  for (int i = degree(f); i >= 0; --i) {
    std::int64_t c = f[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (i == 1) mono = var;
    else if (i > 1) mono = var + "^" + std::to_string(i);
    if (mono.empty()) out += std::to_string(c);
    else if (c == 1) out += mono;
    else out += std::to_string(c) + "*" + mono;
  }
  return out;
}

}  // namespace upoly
}  // namespace celab
