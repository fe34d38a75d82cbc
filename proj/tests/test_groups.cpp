#include "celab/error.hpp"
#include "celab/groups.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace celab;

namespace {

std::set<std::string> names(const FiniteGroup &G, const Subset &S) {
  std::set<std::string> out;
  for (Index x : S) out.insert(G.label(x));
  return out;
}

// Lower central series oracle: gamma_1 = G, gamma_{i+1} = [gamma_i, G]; class = steps to 1.
std::optional<int> lower_central_class(const FiniteGroup &G) {
  Subset cur(G.order());
  std::iota(cur.begin(), cur.end(), 0);
  for (int c = 0; c <= 64; ++c) {
    if (cur.size() == 1) return c;
    std::vector<Index> gens;
    for (Index x : cur)
      for (Index g = 0; g < G.order(); ++g) gens.push_back(G.commutator(x, g));
    Subset next = subgroup_generated(G, gens);
    if (next == cur) return std::nullopt;
    cur = next;
  }
  return std::nullopt;
}

std::vector<FiniteGroup> zoo() {
  return {cyclic(1),          cyclic(6),        direct_product(cyclic(2), cyclic(2)), quaternion_q8(),
          dihedral(8),        dihedral(6),      generalized_quaternion(16),           semidihedral(16),
          dihedral(16),       heisenberg_G(2, 1), heisenberg_G(3, 1),                 order_p5_group(2),
          direct_product(quaternion_q8(), cyclic(3))};
}

}  // namespace

TEST(Groups, Q8Classes) {
  auto G = quaternion_q8();
  std::set<std::set<std::string>> got;
  for (const auto &c : conjugacy_classes(G)) got.insert(names(G, c));
  std::set<std::set<std::string>> want{{"e"}, {"a^2"}, {"a", "a^3"}, {"b", "a^2b"}, {"ab", "a^3b"}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(nilpotence_class(G), 2);
  EXPECT_EQ(names(G, group_center(G)), (std::set<std::string>{"e", "a^2"}));
}

TEST(Groups, ClassEquationAndNilpotence) {
  for (const auto &G : zoo()) {
    std::size_t total = 0;
    for (const auto &c : conjugacy_classes(G)) {
      total += c.size();
      EXPECT_EQ(G.order() % c.size(), 0u);
      EXPECT_EQ(c.size() * centralizer(G, {c[0]}).size(), G.order());
    }
    EXPECT_EQ(total, G.order());
    EXPECT_EQ(nilpotence_class(G), lower_central_class(G));
    auto series = upper_central_series(G);
    for (std::size_t i = 1; i < series.size(); ++i) {
      EXPECT_LT(series[i - 1].size(), series[i].size());
      EXPECT_TRUE(is_normal(G, series[i]));
    }
  }
}

TEST(Groups, SmallExamples) {
  auto V = direct_product(cyclic(2), cyclic(2));
  EXPECT_EQ(V.order(), 4u);
  EXPECT_EQ(nilpotence_class(V), 1);
  EXPECT_EQ(nilpotence_class(dihedral(6)), std::nullopt);
  auto D4 = dihedral(8);
  EXPECT_EQ(commutator_subgroup(D4), group_center(D4));
  EXPECT_EQ(names(D4, group_center(D4)), (std::set<std::string>{"e", "a^2"}));
  for (auto *G : {new FiniteGroup(dihedral(16)), new FiniteGroup(generalized_quaternion(16)), new FiniteGroup(semidihedral(16))}) {
    EXPECT_EQ(G->order(), 16u);
    EXPECT_EQ(nilpotence_class(*G), 3);
    delete G;
  }
}

TEST(Groups, HeisenbergRelations) {
  for (auto [p, n] : {std::pair<std::int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto G = heisenberg_G(p, n);
    std::int64_t q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    EXPECT_EQ(G.order(), static_cast<std::size_t>(q * q * q));
    Index a = G.at("a"), b = G.at("b"), c = G.at("c");
    EXPECT_EQ(G.mul(G.mul(a, b), G.inverse(a)), G.mul(b, c));
    EXPECT_EQ(G.mul(b, c), G.mul(c, b));
    EXPECT_EQ(G.mul(a, c), G.mul(c, a));
    EXPECT_EQ(G.element_order(a), static_cast<std::size_t>(q));
    EXPECT_EQ(G.element_order(b), static_cast<std::size_t>(q));
    EXPECT_EQ(G.element_order(c), static_cast<std::size_t>(q));
    EXPECT_EQ(nilpotence_class(G), 2);
    // [b^y c^z a^x, b^y' c^z' a^x'] = c^(x y' - y x')
    auto elem = [&](std::int64_t y, std::int64_t z, std::int64_t x) {
      return G.mul(G.mul(G.power(b, y), G.power(c, z)), G.power(a, x));
    };
    for (std::int64_t y = 0; y < q; ++y)
      for (std::int64_t x = 0; x < q; ++x)
        for (std::int64_t y2 = 0; y2 < q; ++y2)
          for (std::int64_t x2 = 0; x2 < q; ++x2)
            EXPECT_EQ(G.commutator(elem(y, 1, x), elem(y2, 2 % q, x2)), G.power(c, ((x * y2 - y * x2) % q + q) % q));
  }
  EXPECT_THROW(heisenberg_G(2, 5), Error);
}

TEST(Groups, Order32) {
  auto G = order_p5_group(2);
  EXPECT_EQ(G.order(), 32u);
  auto series = upper_central_series(G);
  ASSERT_GE(series.size(), 3u);
  EXPECT_EQ(series[1].size(), 2u);
  EXPECT_EQ(names(G, series[1]), (std::set<std::string>{"1", "-1"}));
  EXPECT_EQ(series[2].size(), 8u);
  EXPECT_EQ(series[2], subgroup_generated(G, {G.at("k"), G.at("a")}));
  EXPECT_EQ(centralizer(G, series[2]), series[2]);
  EXPECT_EQ(nilpotence_class(G), 3);
}

TEST(Groups, Order243) {
  auto G = order_p5_group(3);
  EXPECT_EQ(G.order(), 243u);
  auto series = upper_central_series(G);
  ASSERT_GE(series.size(), 3u);
  EXPECT_EQ(series[1], subgroup_generated(G, {G.at("a"), G.at("b")}));
  EXPECT_EQ(series[1].size(), 9u);
  EXPECT_EQ(series[2], subgroup_generated(G, {G.at("a"), G.at("b"), G.at("c")}));
  EXPECT_EQ(centralizer(G, series[2]), series[2]);
  EXPECT_GT(*nilpotence_class(G), 2);
}

TEST(Groups, SylowDecomposition) {
  auto G = direct_product(quaternion_q8(), cyclic(3));
  auto d = sylow_direct_decomposition(G, 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->first.size(), 8u);
  EXPECT_EQ(d->second.size(), 3u);
  EXPECT_FALSE(sylow_direct_decomposition(dihedral(6), 3));
  EXPECT_FALSE(sylow_direct_decomposition(dihedral(6), 2));
  auto Q = quaternion_q8();
  auto e = sylow_direct_decomposition(Q, 2);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->first.size(), 8u);
  EXPECT_EQ(e->second.size(), 1u);
}

// Oracle: G = P x H exists iff some normal complement of a normal Sylow subgroup centralizes it.
TEST(Groups, SylowAgainstExhaustiveComplements) {
  for (const auto &G : zoo())
    for (std::int64_t p : {2, 3}) {
      bool exists = false;
      std::vector<Index> all(G.order());
      std::iota(all.begin(), all.end(), 0);
      std::size_t ppart = 1;
      while (G.order() % (ppart * p) == 0) ppart *= p;
      std::set<Subset> subgroups{all};
      for (Index x : all)
        for (Index y : all) subgroups.insert(subgroup_generated(G, {x, y}));
      for (const auto &P : subgroups) {
        if (P.size() != ppart || !is_normal(G, P)) continue;
        for (const auto &H : subgroups) {
          if (H.size() * ppart != G.order()) continue;
          bool ok = true;
          for (Index x : P)
            for (Index y : H) ok = ok && G.mul(x, y) == G.mul(y, x) && (x == G.identity() || x != y);
          exists = exists || ok;
        }
      }
      EXPECT_EQ(exists, sylow_direct_decomposition(G, p).has_value()) << G.order() << " p=" << p;
    }
}

TEST(Groups, ConstructionErrors) {
  auto N = direct_product(cyclic(2), cyclic(2));
  Perm id{0, 1, 2, 3};
  Perm bad{1, 0, 2, 3};  // not a homomorphism: moves the identity
  EXPECT_THROW(semidirect_product(N, cyclic(2), {id, bad}), Error);
  try {
    FiniteGroup({"x", "y"}, {{0, 1}, {0, 1}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAGroup);
  }
  auto Q = quaternion_q8();
  EXPECT_THROW(homomorphism_from_images(Q, {Q.at("a"), Q.at("b")}, {Q.at("a"), Q.at("a")}), Error);
}

TEST(Groups, JsonRoundTrip) {
  auto G = quaternion_q8();
  auto H = group_from_json(group_to_json(G));
  EXPECT_EQ(H.table(), G.table());
  EXPECT_EQ(group_to_json(H).dump(), group_to_json(G).dump());
}
