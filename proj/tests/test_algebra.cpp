#include "celab/algebra.hpp"
#include "celab/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace celab;

namespace {

// Hamilton quaternions over a ring with 1, i, j, k.
Algebra quaternions(const ScalarRing &r) {
  auto s = [&](int v) { return r.from_int(v); };
  // mult[a][b] = (sign, index)
  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<Term>> p(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) p[a * 4 + b] = {{static_cast<std::uint32_t>(idx[a][b]), s(sgn[a][b])}};
  Matrix inv = Matrix::identity(r, 4);
  for (int i = 1; i < 4; ++i) inv.at(i, i) = s(-1);
  return Algebra(r, {"1", "i", "j", "k"}, p, unit_vec(r, 4, 0), inv);
}

// Exterior algebra on three generators: 1, e1, e2, e3, e12, e13, e23, e123.
Algebra exterior3(const ScalarRing &r) {
  std::vector<unsigned> masks{0, 1, 2, 4, 3, 5, 6, 7};
  std::vector<std::string> labels{"1", "e1", "e2", "e3", "e1^e2", "e1^e3", "e2^e3", "e1^e2^e3"};
  std::vector<std::vector<Term>> p(64);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      unsigned x = masks[a], y = masks[b];
      if (x & y) continue;
      int inv = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j)
          if ((y >> j & 1) && (x >> i & 1)) ++inv;
      auto k = std::find(masks.begin(), masks.end(), x | y) - masks.begin();
      p[a * 8 + b] = {{static_cast<std::uint32_t>(k), r.from_int(inv % 2 ? -1 : 1)}};
    }
  return Algebra(r, labels, p, unit_vec(r, 8, 0));
}

}  // namespace

TEST(Algebra, QuaternionBasics) {
  auto r = ScalarRing::rationals();
  auto H = quaternions(r);
  auto i = Element::basis(H, 1), j = Element::basis(H, 2), k = Element::basis(H, 3);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ((i * i).to_string(), "-1*1");
  EXPECT_TRUE(H.is_associative());
  EXPECT_FALSE(H.is_commutative());
  EXPECT_EQ(find_unit(H), H.unit());
  EXPECT_EQ(commutator(i, j).to_string(), "2*k");
}

TEST(Algebra, BilinearityAndInvolution) {
  std::mt19937_64 rng(7);
  for (auto r : {ScalarRing::prime_field(5), ScalarRing::residue_ring(4), ScalarRing::galois_field(3, 2)}) {
    auto H = quaternions(r);
    for (int t = 0; t < 200; ++t) {
      auto a = test::random_vec(r, 4, rng), b = test::random_vec(r, 4, rng), c = test::random_vec(r, 4, rng);
      auto s = r.random(rng);
      EXPECT_EQ(H.multiply(vec_add(r, a, vec_scale(r, s, b)), c),
                vec_add(r, H.multiply(a, c), vec_scale(r, s, H.multiply(b, c))));
      EXPECT_EQ(H.star(H.multiply(a, b)), H.multiply(H.star(b), H.star(a)));
      EXPECT_EQ(H.multiply(*H.unit(), a), a);
      EXPECT_TRUE(is_zero_vec(r, associator(H, a, b, c)));
      EXPECT_EQ(H.left_mult(a).apply(b), H.multiply(a, b));
      EXPECT_EQ(H.right_mult(a).apply(b), H.multiply(b, a));
    }
  }
}

TEST(Algebra, ValidationErrors) {
  auto r = ScalarRing::prime_field(3);
  try {
    Algebra(r, {"a"}, {{{0, r.one()}}}, Vec{r.from_int(2)});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidUnit);
  }
  try {
    Algebra(r, {"a"}, {{{3, r.one()}}});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTable);
  }
  // Identity on a noncommutative algebra is not an anti-automorphism.
  auto H = quaternions(r);
  try {
    Algebra(r, H.labels(), {}, std::nullopt, Matrix::identity(r, 4));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTable);
  }
  std::vector<std::vector<Term>> p(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) p[a * 4 + b] = H.terms(a, b);
  try {
    Algebra(r, H.labels(), p, H.unit(), Matrix::identity(r, 4));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnInvolution);
  }
}

TEST(Algebra, ExteriorRadical) {
  auto r = ScalarRing::prime_field(3);
  auto L = exterior3(r);
  EXPECT_TRUE(L.is_associative());
  EXPECT_FALSE(L.is_commutative());
  Subspace J = Subspace::span(r, 8, {L.basis(1), L.basis(2), L.basis(3)});
  Subspace I = ideal_generated_by(L, J.basis());
  EXPECT_EQ(I.rank(), 7u);
  EXPECT_TRUE(is_two_sided_ideal(L, I));
  EXPECT_FALSE(is_two_sided_ideal(L, J));
  EXPECT_EQ(nilpotency_index(L, I), 4);
  EXPECT_EQ(nilpotency_index(L, Subspace::whole(r, 8)), std::nullopt);
  auto q = quotient_by_ideal(L, I);
  EXPECT_EQ(q.algebra.dim(), 1u);
  EXPECT_THROW(quotient_by_ideal(L, J), Error);
}

TEST(Algebra, QuotientIsMultiplicative) {
  std::mt19937_64 rng(11);
  auto r = ScalarRing::prime_field(5);
  auto L = exterior3(r);
  Subspace I = ideal_generated_by(L, {L.basis(3)});
  auto q = quotient_by_ideal(L, I);
  EXPECT_EQ(q.algebra.dim(), 4u);
  for (int t = 0; t < 300; ++t) {
    auto a = test::random_vec(r, 8, rng), b = test::random_vec(r, 8, rng);
    EXPECT_EQ(q.project(L.multiply(a, b)), q.algebra.multiply(q.project(a), q.project(b)));
  }
  EXPECT_EQ(q.project(*L.unit()), *q.algebra.unit());
}

TEST(Algebra, Constructions) {
  std::mt19937_64 rng(3);
  auto r = ScalarRing::prime_field(3);
  auto H = quaternions(r);
  auto T = tensor_product(H, H);
  EXPECT_EQ(T.dim(), 16u);
  EXPECT_EQ(T.labels()[5], "i⊗i");
  EXPECT_TRUE(T.is_associative());
  EXPECT_EQ(find_unit(T), T.unit());
  auto S = direct_sum(H, exterior3(r));
  EXPECT_EQ(S.dim(), 12u);
  EXPECT_TRUE(S.is_associative());
  EXPECT_EQ(find_unit(S), S.unit());
  auto U = adjoin_unit(H);
  EXPECT_EQ(U.dim(), 5u);
  EXPECT_TRUE(U.is_associative());
  EXPECT_EQ(find_unit(U), U.unit());
  // Basis change and back.
  std::vector<Vec> rows{H.basis(0), vec_add(r, H.basis(0), H.basis(1)), H.basis(2), vec_add(r, H.basis(2), H.basis(3))};
  auto B = with_basis(H, rows, {"a", "b", "c", "d"});
  EXPECT_TRUE(B.is_associative());
  EXPECT_EQ(*B.unit(), B.basis(0));
  for (int t = 0; t < 100; ++t) {
    auto x = test::random_vec(r, 4, rng), y = test::random_vec(r, 4, rng);
    auto to_h = [&](const Vec &c) {
      Vec v = zero_vec(r, 4);
      for (int a = 0; a < 4; ++a) vec_axpy(r, v, c[a], rows[a]);
      return v;
    };
    EXPECT_EQ(to_h(B.multiply(x, y)), H.multiply(to_h(x), to_h(y)));
    EXPECT_EQ(to_h(B.star(x)), H.star(to_h(x)));
  }
  EXPECT_THROW(with_basis(H, {H.basis(0), H.basis(0), H.basis(2), H.basis(3)}, {"a", "b", "c", "d"}), Error);
  // Center of the quaternions over F3 restricted: span{1} subalgebra.
  auto C = subalgebra(H, Subspace::span(r, 4, {H.basis(0)}));
  EXPECT_EQ(C.dim(), 1u);
  EXPECT_TRUE(C.unit().has_value());
  EXPECT_THROW(subalgebra(H, Subspace::span(r, 4, {H.basis(1), H.basis(2)})), Error);
}

TEST(Algebra, FindUnitAbsent) {
  auto r = ScalarRing::prime_field(2);
  Algebra N(r, {"x"}, {{}});
  EXPECT_EQ(find_unit(N), std::nullopt);
  EXPECT_EQ(nilpotency_index(N, Subspace::whole(r, 1)), 2);
}
