#include "celab/groups.hpp"

#include "celab/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace celab {

namespace {

constexpr std::size_t kMaxOrder = 4096;

std::int64_t md(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::string power_label(const std::string &g, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string word_label(const std::vector<std::pair<std::string, std::int64_t>> &parts) {
  std::string out;
  for (const auto &[g, e] : parts) out += power_label(g, e);
  return out.empty() ? "e" : out;
}

Subset closure(const FiniteGroup &G, const std::vector<Index> &gens) {
  std::vector<char> seen(G.order(), 0);
  std::deque<Index> queue{G.identity()};
  seen[G.identity()] = 1;
  while (!queue.empty()) {
    Index x = queue.front();
    queue.pop_front();
    for (Index g : gens) {
      Index y = G.mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  Subset out;
  for (Index i = 0; i < G.order(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

Subset from_mask(const std::vector<char> &mask) {
  Subset out;
  for (Index i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<Index>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty group");
  if (n > kMaxOrder) throw Error(ErrorCode::UnsupportedParameter, "order " + std::to_string(n) + " exceeds 4096");
  if (table_.size() != n) throw Error(ErrorCode::NotAGroup, "table has wrong row count");
  for (const auto &row : table_) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "table row has wrong length");
    std::vector<char> seen(n, 0);
    for (Index x : row) {
      if (x >= n || seen[x]) throw Error(ErrorCode::NotAGroup, "table is not a Latin square");
      seen[x] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table_[i][j]]) throw Error(ErrorCode::NotAGroup, "table is not a Latin square");
      seen[table_[i][j]] = 1;
    }
  }
  bool found = false;
  for (Index e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NotAGroup, "no identity");
  inverse_.assign(n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (table_[x][y] == identity_) inverse_[x] = y;
  // Associativity: all triples for small orders, Light's test on a generating set otherwise.
  std::vector<Index> middle;
  if (n <= 64) {
    middle.resize(n);
    std::iota(middle.begin(), middle.end(), 0);
  } else {
    std::vector<char> covered(n, 0);
    covered[identity_] = 1;
    for (Index g = 0; g < n; ++g) {
      if (covered[g]) continue;
      middle.push_back(g);
      for (Index x : closure(*this, middle)) covered[x] = 1;
    }
  }
  for (Index a : middle)
    for (Index x = 0; x < n; ++x) {
      Index xa = table_[x][a];
      for (Index y = 0; y < n; ++y)
        if (table_[xa][y] != table_[x][table_[a][y]])
          throw Error(ErrorCode::NotAGroup, "not associative at (" + labels_[x] + ", " + labels_[a] + ", " + labels_[y] + ")");
    }
}

Index FiniteGroup::power(Index a, std::int64_t e) const {
  if (e < 0) return power(inverse(a), -e);
  Index r = identity_;
  for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::optional<Index> FiniteGroup::find(const std::string &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index FiniteGroup::at(const std::string &label) const {
  auto g = find(label);
  if (!g) throw Error(ErrorCode::UnsupportedParameter, "no group element '" + label + "'");
  return *g;
}

FiniteGroup FiniteGroup::relabeled(std::vector<std::string> labels) const { return FiniteGroup(std::move(labels), table_); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnsupportedParameter, "cyclic group of order 0");
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(word_label({{"g", static_cast<std::int64_t>(i)}}));
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Index>((i + j) % n);
  }
  return FiniteGroup(labels, t);
}

FiniteGroup direct_product(const FiniteGroup &G, const FiniteGroup &H) {
  std::size_t ng = G.order(), nh = H.order();
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> t(ng * nh, std::vector<Index>(ng * nh));
  for (Index h = 0; h < nh; ++h)
    for (Index g = 0; g < ng; ++g) labels.push_back("(" + G.label(g) + "," + H.label(h) + ")");
  for (Index h1 = 0; h1 < nh; ++h1)
    for (Index g1 = 0; g1 < ng; ++g1)
      for (Index h2 = 0; h2 < nh; ++h2)
        for (Index g2 = 0; g2 < ng; ++g2)
          t[g1 + ng * h1][g2 + ng * h2] = static_cast<Index>(G.mul(g1, g2) + ng * H.mul(h1, h2));
  return FiniteGroup(labels, t);
}

FiniteGroup semidirect_product(const FiniteGroup &N, const FiniteGroup &H, const std::vector<Perm> &action) {
  std::size_t nn = N.order(), nh = H.order();
  if (action.size() != nh) throw Error(ErrorCode::NotAHomomorphism, "one automorphism per element of H expected");
  for (const auto &phi : action) {
    if (phi.size() != nn) throw Error(ErrorCode::NotAnAutomorphism, "map has wrong length");
    std::vector<char> seen(nn, 0);
    for (Index x : phi) {
      if (x >= nn || seen[x]) throw Error(ErrorCode::NotAnAutomorphism, "map is not a bijection");
      seen[x] = 1;
    }
    for (Index x = 0; x < nn; ++x)
      for (Index y = 0; y < nn; ++y)
        if (phi[N.mul(x, y)] != N.mul(phi[x], phi[y]))
          throw Error(ErrorCode::NotAnAutomorphism, "map does not preserve " + N.label(x) + "*" + N.label(y));
  }
  for (Index h1 = 0; h1 < nh; ++h1)
    for (Index h2 = 0; h2 < nh; ++h2)
      for (Index x = 0; x < nn; ++x)
        if (action[H.mul(h1, h2)][x] != action[h1][action[h2][x]])
          throw Error(ErrorCode::NotAHomomorphism, "action is not a homomorphism");
  std::vector<std::string> labels;
  for (Index h = 0; h < nh; ++h)
    for (Index x = 0; x < nn; ++x) labels.push_back("(" + N.label(x) + "," + H.label(h) + ")");
  std::vector<std::vector<Index>> t(nn * nh, std::vector<Index>(nn * nh));
  for (Index h1 = 0; h1 < nh; ++h1)
    for (Index x1 = 0; x1 < nn; ++x1)
      for (Index h2 = 0; h2 < nh; ++h2)
        for (Index x2 = 0; x2 < nn; ++x2)
          t[x1 + nn * h1][x2 + nn * h2] = static_cast<Index>(N.mul(x1, action[h1][x2]) + nn * H.mul(h1, h2));
  return FiniteGroup(labels, t);
}

Perm homomorphism_from_images(const FiniteGroup &G, const std::vector<Index> &gens, const std::vector<Index> &images) {
  if (gens.size() != images.size()) throw Error(ErrorCode::NotAHomomorphism, "generator/image count mismatch");
  std::size_t n = G.order();
  constexpr Index kUnset = ~Index(0);
  Perm phi(n, kUnset);
  phi[G.identity()] = G.identity();
  std::deque<Index> queue{G.identity()};
  while (!queue.empty()) {
    Index x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Index y = G.mul(x, gens[k]);
      Index img = G.mul(phi[x], images[k]);
      if (phi[y] == kUnset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        throw Error(ErrorCode::NotAHomomorphism, "images violate a relation at " + G.label(y));
      }
    }
  }
  for (Index x = 0; x < n; ++x)
    if (phi[x] == kUnset) throw Error(ErrorCode::NotAHomomorphism, "generators do not generate the group");
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (phi[G.mul(x, y)] != G.mul(phi[x], phi[y])) throw Error(ErrorCode::NotAHomomorphism, "not multiplicative");
  return phi;
}

FiniteGroup metacyclic(std::size_t m, std::int64_t r, std::int64_t s) {
  if (m == 0 || 2 * m > kMaxOrder) throw Error(ErrorCode::UnsupportedParameter, "metacyclic order");
  auto mm = static_cast<std::int64_t>(m);
  std::vector<std::string> labels;
  for (std::int64_t j = 0; j < 2; ++j)
    for (std::int64_t i = 0; i < mm; ++i) labels.push_back(word_label({{"a", i}, {"b", j}}));
  std::vector<std::vector<Index>> t(2 * m, std::vector<Index>(2 * m));
  for (std::int64_t j = 0; j < 2; ++j)
    for (std::int64_t i = 0; i < mm; ++i)
      for (std::int64_t l = 0; l < 2; ++l)
        for (std::int64_t k = 0; k < mm; ++k) {
          std::int64_t e = i + (j ? r * k : k);
          std::int64_t jj = j + l;
          if (jj == 2) {
            e += s;
            jj = 0;
          }
          t[i + mm * j][k + mm * l] = static_cast<Index>(md(e, mm) + mm * jj);
        }
  return FiniteGroup(labels, t);
}

FiniteGroup quaternion_q8() { return metacyclic(4, -1, 2); }

FiniteGroup dihedral(std::size_t order) {
  if (order < 4 || order % 2) throw Error(ErrorCode::UnsupportedParameter, "dihedral order must be even and >= 4");
  return metacyclic(order / 2, -1, 0);
}

FiniteGroup generalized_quaternion(std::size_t order) {
  if (order < 8 || (order & (order - 1))) throw Error(ErrorCode::UnsupportedParameter, "generalized quaternion order");
  auto m = static_cast<std::int64_t>(order / 2);
  return metacyclic(order / 2, -1, m / 2);
}

FiniteGroup semidihedral(std::size_t order) {
  if (order < 16 || (order & (order - 1))) throw Error(ErrorCode::UnsupportedParameter, "semidihedral order");
  auto m = static_cast<std::int64_t>(order / 2);
  return metacyclic(order / 2, m / 2 - 1, 0);
}

FiniteGroup heisenberg_G(std::int64_t p, int n) {
  if (!(p >= 2) || n < 1) throw Error(ErrorCode::UnsupportedParameter, "heisenberg parameters");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorCode::UnsupportedParameter, "p must be prime");
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q * q * q > static_cast<std::int64_t>(kMaxOrder))
      throw Error(ErrorCode::UnsupportedParameter, "order exceeds 4096");
  }
  std::size_t ord = static_cast<std::size_t>(q * q * q);
  auto idx = [&](std::int64_t y, std::int64_t z, std::int64_t x) { return static_cast<Index>(md(y, q) + q * md(z, q) + q * q * md(x, q)); };
  std::vector<std::string> labels(ord);
  std::vector<std::vector<Index>> t(ord, std::vector<Index>(ord));
  for (std::int64_t x = 0; x < q; ++x)
    for (std::int64_t z = 0; z < q; ++z)
      for (std::int64_t y = 0; y < q; ++y) {
        labels[idx(y, z, x)] = word_label({{"b", y}, {"c", z}, {"a", x}});
        for (std::int64_t x2 = 0; x2 < q; ++x2)
          for (std::int64_t z2 = 0; z2 < q; ++z2)
            for (std::int64_t y2 = 0; y2 < q; ++y2)
              t[idx(y, z, x)][idx(y2, z2, x2)] = idx(y + y2, z + z2 + x * y2, x + x2);
      }
  return FiniteGroup(labels, t);
}

namespace {

FiniteGroup order32_group() {
  // Q8 = {±1, ±i, ±j, ±k} with i = a, j = b of the metacyclic presentation.
  FiniteGroup q8 = quaternion_q8().relabeled({"1", "i", "-1", "-i", "j", "k", "-j", "-k"});
  FiniteGroup c2 = cyclic(2);
  FiniteGroup n0 = direct_product(q8, c2);
  std::vector<std::string> nl;
  for (Index h = 0; h < 2; ++h)
    for (Index x = 0; x < 8; ++x) nl.push_back(h ? (x == 0 ? std::string("a") : q8.label(x) + "a") : q8.label(x));
  FiniteGroup N = n0.relabeled(nl);
  Perm alpha = homomorphism_from_images(N, {N.at("i"), N.at("j"), N.at("a")}, {N.at("j"), N.at("i"), N.at("-1a")});
  Perm id(N.order());
  std::iota(id.begin(), id.end(), 0);
  FiniteGroup G = semidirect_product(N, cyclic(2), {id, alpha});
  std::vector<std::string> gl;
  for (Index h = 0; h < 2; ++h)
    for (Index x = 0; x < N.order(); ++x)
      gl.push_back(h ? (x == N.identity() ? std::string("α") : N.label(x) + "α") : N.label(x));
  return G.relabeled(gl);
}

FiniteGroup order_p5_odd(std::int64_t p) {
  // N = A ⋊ <γ>, elements a^k b^l c^m γ^r.
  std::int64_t p4 = p * p * p * p;
  auto idx = [&](std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t r) {
    return static_cast<Index>(md(k, p) + p * md(l, p) + p * p * md(m, p) + p * p * p * md(r, p));
  };
  std::vector<std::string> labels(p4);
  std::vector<std::vector<Index>> t(p4, std::vector<Index>(p4));
  for (std::int64_t u = 0; u < p4; ++u) {
    std::int64_t k = u % p, l = u / p % p, m = u / (p * p) % p, r = u / (p * p * p);
    labels[u] = word_label({{"a", k}, {"b", l}, {"c", m}, {"γ", r}});
    for (std::int64_t v = 0; v < p4; ++v) {
      std::int64_t k2 = v % p, l2 = v / p % p, m2 = v / (p * p) % p, r2 = v / (p * p * p);
      t[u][v] = idx(k + k2, l + l2 + r * m2, m + m2, r + r2);
    }
  }
  FiniteGroup N(labels, t);
  Perm beta(p4);
  for (std::int64_t u = 0; u < p4; ++u) {
    std::int64_t k = u % p, l = u / p % p, m = u / (p * p) % p, r = u / (p * p * p);
    beta[u] = idx(k + m + r, l + r * (r + 1) / 2, m + r, r);
  }
  std::size_t ord = 1;
  Perm cur = beta;
  Perm id(p4);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> action{id};
  while (cur != id) {
    action.push_back(cur);
    Perm next(p4);
    for (std::int64_t u = 0; u < p4; ++u) next[u] = beta[cur[u]];
    cur = next;
    ++ord;
  }
  FiniteGroup G = semidirect_product(N, cyclic(ord), action);
  std::vector<std::string> gl;
  for (std::size_t h = 0; h < ord; ++h)
    for (Index x = 0; x < N.order(); ++x) {
      std::string s = x == N.identity() && h ? "" : N.label(x);
      gl.push_back(s + power_label("β", static_cast<std::int64_t>(h)));
    }
  return G.relabeled(gl);
}

}  // namespace

FiniteGroup order_p5_group(std::int64_t p) {
  if (p == 2) return order32_group();
  if (p == 3) return order_p5_odd(p);
  throw Error(ErrorCode::UnsupportedParameter, "order p^5 group is built for p = 2, 3");
}

Subset subgroup_generated(const FiniteGroup &G, const std::vector<Index> &gens) { return closure(G, gens); }

bool is_subgroup(const FiniteGroup &G, const Subset &S) {
  std::vector<char> in(G.order(), 0);
  for (Index x : S) in[x] = 1;
  if (!in[G.identity()]) return false;
  for (Index x : S)
    for (Index y : S)
      if (!in[G.mul(x, G.inverse(y))]) return false;
  return true;
}

bool is_normal(const FiniteGroup &G, const Subset &S) {
  std::vector<char> in(G.order(), 0);
  for (Index x : S) in[x] = 1;
  for (Index g = 0; g < G.order(); ++g)
    for (Index x : S)
      if (!in[G.mul(G.mul(g, x), G.inverse(g))]) return false;
  return true;
}

bool is_abelian_subset(const FiniteGroup &G, const Subset &S) {
  for (Index x : S)
    for (Index y : S)
      if (G.mul(x, y) != G.mul(y, x)) return false;
  return true;
}

bool is_abelian(const FiniteGroup &G) { return group_center(G).size() == G.order(); }

std::vector<Subset> conjugacy_classes(const FiniteGroup &G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Subset> out;
  for (Index g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    std::vector<char> cls(G.order(), 0);
    for (Index h = 0; h < G.order(); ++h) cls[G.mul(G.mul(h, g), G.inverse(h))] = 1;
    Subset c = from_mask(cls);
    for (Index x : c) seen[x] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

Subset centralizer(const FiniteGroup &G, const Subset &S) {
  Subset out;
  for (Index g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Index x : S)
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

Subset group_center(const FiniteGroup &G) {
  Subset all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return centralizer(G, all);
}

Subset commutator_subgroup(const FiniteGroup &G) {
  std::vector<char> mask(G.order(), 0);
  for (Index x = 0; x < G.order(); ++x)
    for (Index y = 0; y < G.order(); ++y) mask[G.commutator(x, y)] = 1;
  return closure(G, from_mask(mask));
}

std::vector<Subset> upper_central_series(const FiniteGroup &G) {
  std::vector<Subset> series{{G.identity()}};
  for (;;) {
    std::vector<char> prev(G.order(), 0);
    for (Index x : series.back()) prev[x] = 1;
    std::vector<char> next(G.order(), 0);
    for (Index g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (Index h = 0; h < G.order() && ok; ++h) ok = prev[G.commutator(g, h)];
      next[g] = ok;
    }
    Subset z = from_mask(next);
    if (z == series.back()) return series;
    series.push_back(std::move(z));
  }
}

std::optional<int> nilpotence_class(const FiniteGroup &G) {
  auto series = upper_central_series(G);
  if (series.back().size() != G.order()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

std::optional<std::pair<Subset, Subset>> sylow_direct_decomposition(const FiniteGroup &G, std::int64_t p) {
  std::size_t n = G.order(), ppart = 1;
  while ((n / ppart) % static_cast<std::size_t>(p) == 0) ppart *= static_cast<std::size_t>(p);
  auto is_p_power = [&](std::size_t k) {
    while (k % static_cast<std::size_t>(p) == 0) k /= static_cast<std::size_t>(p);
    return k == 1;
  };
  Subset P, H;
  for (Index g = 0; g < n; ++g) {
    std::size_t o = G.element_order(g);
    if (is_p_power(o)) P.push_back(g);
    if (o % static_cast<std::size_t>(p) != 0) H.push_back(g);
  }
  if (P.size() != ppart || H.size() != n / ppart) return std::nullopt;
  if (!is_subgroup(G, P) || !is_subgroup(G, H)) return std::nullopt;
  for (Index x : P)
    for (Index y : H)
      if (G.mul(x, y) != G.mul(y, x)) return std::nullopt;
  return std::make_pair(P, H);
}

FiniteGroup subgroup_as_group(const FiniteGroup &G, const Subset &S) {
  if (!is_subgroup(G, S)) throw Error(ErrorCode::NotAGroup, "subset is not a subgroup");
  std::vector<Index> pos(G.order(), 0);
  for (Index i = 0; i < S.size(); ++i) pos[S[i]] = i;
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> t(S.size(), std::vector<Index>(S.size()));
  for (Index i = 0; i < S.size(); ++i) {
    labels.push_back(G.label(S[i]));
    for (Index j = 0; j < S.size(); ++j) t[i][j] = pos[G.mul(S[i], S[j])];
  }
  return FiniteGroup(labels, t);
}

nlohmann::ordered_json group_to_json(const FiniteGroup &G) {
  nlohmann::ordered_json j;
  j["order"] = G.order();
  j["labels"] = G.labels();
  j["table"] = G.table();
  return j;
}

FiniteGroup group_from_json(const nlohmann::ordered_json &j) {
  try {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<Index>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != labels.size())
      throw Error(ErrorCode::InvalidJson, "/order: disagrees with labels");
    return FiniteGroup(labels, table);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::InvalidJson, std::string("group: ") + e.what());
  }
}

}  // namespace celab
