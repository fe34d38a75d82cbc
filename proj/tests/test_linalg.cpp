#include "celab/error.hpp"
#include "celab/linalg.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace celab;
using celab::test::all_vectors;
using celab::test::brute_span;
using celab::test::random_rows;
using celab::test::random_vec;

namespace {

Vec iv(const ScalarRing &r, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(r.from_int(x));
  return v;
}

std::vector<ScalarRing> small_rings() {
  return {ScalarRing::prime_field(2), ScalarRing::prime_field(3), ScalarRing::residue_ring(4),
          ScalarRing::residue_ring(6), ScalarRing::residue_ring(8), ScalarRing::galois_field(2, 2, {1, 1, 1})};
}

}  // namespace

TEST(Linalg, CanonicalizeExamples) {
  ScalarRing f2 = ScalarRing::prime_field(2), z4 = ScalarRing::residue_ring(4), q = ScalarRing::rationals();
  auto s = Subspace::span(f2, 2, {iv(f2, {1, 1}), iv(f2, {0, 1})});
  EXPECT_EQ(s.basis(), (std::vector<Vec>{iv(f2, {1, 0}), iv(f2, {0, 1})}));
  auto t = Subspace::span(z4, 2, {iv(z4, {2, 0})});
  EXPECT_EQ(t.basis(), (std::vector<Vec>{iv(z4, {2, 0})}));
  EXPECT_EQ(t.cardinality(), 2u);
  auto u = Subspace::span(q, 2, {iv(q, {1, 2}), iv(q, {2, 4})});
  EXPECT_EQ(u.basis(), (std::vector<Vec>{iv(q, {1, 2})}));
}

TEST(Linalg, KernelSolveExamples) {
  ScalarRing f2 = ScalarRing::prime_field(2), z4 = ScalarRing::residue_ring(4), f5 = ScalarRing::prime_field(5);
  Matrix two(z4, 1, 1);
  two.at(0, 0) = z4.from_int(2);
  EXPECT_EQ(kernel(two), Subspace::span(z4, 1, {iv(z4, {2})}));
  Matrix ones = Matrix::from_rows(f2, {iv(f2, {1, 1})}, 2);
  EXPECT_EQ(kernel(ones), Subspace::span(f2, 2, {iv(f2, {1, 1})}));
  Vec b = iv(f5, {3, 1, 4});
  EXPECT_EQ(solve(Matrix::identity(f5, 3), b), b);
  Matrix m = Matrix::from_rows(z4, {iv(z4, {2, 0}), iv(z4, {0, 2})}, 2);
  EXPECT_FALSE(solve(m, iv(z4, {1, 0})).has_value());
  auto x = solve(m, iv(z4, {2, 2}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), iv(z4, {2, 2}));
}

TEST(Linalg, LatticeExamples) {
  ScalarRing f3 = ScalarRing::prime_field(3), z4 = ScalarRing::residue_ring(4);
  auto a = Subspace::span(f3, 2, {iv(f3, {1, 0})});
  auto b = Subspace::span(f3, 2, {iv(f3, {0, 1})});
  EXPECT_TRUE(subspace_intersect(a, b).is_zero());
  EXPECT_EQ(subspace_intersect(a, a), a);
  auto c = subspace_sum(Subspace::span(z4, 2, {iv(z4, {2, 0})}), Subspace::span(z4, 2, {iv(z4, {0, 2})}));
  EXPECT_EQ(c, Subspace::span(z4, 2, {iv(z4, {2, 0}), iv(z4, {0, 2})}));
  EXPECT_EQ(c.cardinality(), 4u);
}

TEST(Linalg, HowellExtraRows) {
  ScalarRing z4 = ScalarRing::residue_ring(4);
  auto s = Subspace::span(z4, 2, {iv(z4, {2, 1})});
  EXPECT_EQ(s.basis(), (std::vector<Vec>{iv(z4, {2, 1}), iv(z4, {0, 2})}));
  EXPECT_TRUE(s.contains(iv(z4, {0, 2})));
  EXPECT_FALSE(s.contains(iv(z4, {0, 1})));
  EXPECT_EQ(s.cardinality(), 4u);
}

TEST(Linalg, MembershipMatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (const auto &ring : small_rings()) {
    std::size_t maxdim = ring.size() <= 3 ? 6 : 4;
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % maxdim;
      auto rows = random_rows(ring, rng() % 4, n, rng);
      auto s = Subspace::span(ring, n, rows);
      auto span = brute_span(ring, rows, n);
      EXPECT_EQ(s.cardinality(), span.size()) << ring.name();
      std::size_t counted = 0;
      s.for_each_element([&](const Vec &) { ++counted; });
      EXPECT_EQ(counted, span.size());
      for (const auto &v : all_vectors(ring, n)) {
        std::vector<std::uint64_t> key;
        for (const auto &x : v) key.push_back(ring.code(x));
        ASSERT_EQ(s.contains(v), span.count(key) > 0) << ring.name();
        auto coords = s.coordinates(v);
        ASSERT_EQ(coords.has_value(), span.count(key) > 0);
        if (coords) {
          Vec w = zero_vec(ring, n);
          for (std::size_t i = 0; i < s.rank(); ++i) vec_axpy(ring, w, (*coords)[i], s.basis()[i]);
          ASSERT_EQ(w, v);
        }
      }
    }
  }
}

TEST(Linalg, KernelAndSolveMatchBruteForce) {
  std::mt19937_64 rng(2);
  for (const auto &ring : small_rings()) {
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t m = 1 + rng() % 3, n = 1 + rng() % 4;
      Matrix a = Matrix::from_rows(ring, random_rows(ring, m, n, rng), n);
      Subspace k = kernel(a);
      std::size_t zeros = 0;
      for (const auto &x : all_vectors(ring, n)) {
        bool in = is_zero_vec(ring, a.apply(x));
        zeros += in;
        ASSERT_EQ(k.contains(x), in) << ring.name();
      }
      EXPECT_EQ(k.cardinality(), zeros);
      Subspace img = image(a);
      for (int i = 0; i < 10; ++i) {
        Vec b = random_vec(ring, m, rng);
        auto x = solve(a, b);
        ASSERT_EQ(x.has_value(), img.contains(b)) << ring.name();
        if (x) ASSERT_EQ(a.apply(*x), b);
        Vec y = random_vec(ring, n, rng);
        auto z = solve(a, a.apply(y));
        ASSERT_TRUE(z.has_value());
      }
    }
  }
}

TEST(Linalg, ModularLatticeLaws) {
  std::mt19937_64 rng(3);
  for (const auto &ring : small_rings()) {
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t n = 1 + rng() % 4;
      auto u = Subspace::span(ring, n, random_rows(ring, rng() % 3, n, rng));
      auto v = Subspace::span(ring, n, random_rows(ring, rng() % 3, n, rng));
      auto w0 = Subspace::span(ring, n, random_rows(ring, rng() % 3, n, rng));
      auto w = subspace_sum(u, w0);  // u <= w
      ASSERT_EQ(subspace_sum(u, subspace_intersect(v, w)), subspace_intersect(subspace_sum(u, v), w)) << ring.name();
      ASSERT_EQ(subspace_intersect(u, subspace_sum(u, v)), u);
      ASSERT_EQ(subspace_sum(u, subspace_intersect(u, v)), u);
      ASSERT_EQ(subspace_intersect(u, v), subspace_intersect(v, u));
      ASSERT_EQ(subspace_sum(u, v), subspace_sum(v, u));
      ASSERT_TRUE(subspace_intersect(u, v).is_subspace_of(u));
      ASSERT_TRUE(u.is_subspace_of(subspace_sum(u, v)));
    }
  }
}

TEST(Linalg, RowEquivalentMatricesShareCanonicalForm) {
  std::mt19937_64 rng(4);
  for (std::int64_t n : {4, 6, 8, 9, 12}) {
    ScalarRing ring = ScalarRing::residue_ring(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t k = 1 + rng() % 4, cols = 1 + rng() % 5;
      auto rows = random_rows(ring, k, cols, rng);
      auto base = Subspace::span(ring, cols, rows);
      for (int op = 0; op < 10; ++op) {
        std::size_t i = rng() % k, j = rng() % k;
        switch (rng() % 3) {
          case 0: std::swap(rows[i], rows[j]); break;
          case 1:
            if (i != j) vec_axpy(ring, rows[i], ring.random(rng), rows[j]);
            break;
          default: {
            Scalar u = ring.random(rng);
            if (ring.is_unit(u)) rows[i] = vec_scale(ring, u, rows[i]);
          }
        }
      }
      ASSERT_EQ(Subspace::span(ring, cols, rows), base) << n;
    }
  }
}

TEST(Linalg, FieldPathsOverRationals) {
  ScalarRing q = ScalarRing::rationals();
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    Matrix a = Matrix::from_rows(q, random_rows(q, m, n, rng), n);
    Subspace k = kernel(a);
    for (const auto &b : k.basis()) ASSERT_TRUE(is_zero_vec(q, a.apply(b)));
    EXPECT_EQ(k.rank() + image(a).rank(), n);
    Vec y = random_vec(q, n, rng);
    auto x = solve(a, a.apply(y));
    ASSERT_TRUE(x.has_value());
    ASSERT_EQ(a.apply(*x), a.apply(y));
  }
}

TEST(Linalg, DimensionErrors) {
  ScalarRing f2 = ScalarRing::prime_field(2);
  EXPECT_THROW(subspace_sum(Subspace(f2, 2), Subspace(f2, 3)), Error);
  EXPECT_THROW(solve(Matrix::identity(f2, 2), iv(f2, {1})), Error);
  EXPECT_THROW(kernel(Matrix(ScalarRing::polynomial_ring(0, {"x"}), 1, 1).operator+(Matrix::identity(ScalarRing::polynomial_ring(0, {"x"}), 1))), Error);
}
