#include "celab/analyzers.hpp"
#include "celab/builders.hpp"
#include "celab/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace celab;
using celab::test::all_vectors;

namespace {

using Key = std::vector<std::uint64_t>;

Key key(const ScalarRing &R, const Vec &v) {
  Key k;
  for (const auto &x : v) k.push_back(R.code(x));
  return k;
}

std::set<Key> elements_of(const Subspace &S) {
  std::set<Key> out;
  S.for_each_element([&](const Vec &v) { out.insert(key(S.ring(), v)); });
  return out;
}

// Direct definitions over the whole enumerated algebra.
bool brute_is_central(const Algebra &A, const Vec &z) {
  const auto &R = A.ring();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec e = A.basis(i);
    if (A.multiply(z, e) != A.multiply(e, z)) return false;
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec f = A.basis(j);
      if (!is_zero_vec(R, associator(A, z, e, f)) || !is_zero_vec(R, associator(A, e, z, f)) ||
          !is_zero_vec(R, associator(A, e, f, z)))
        return false;
    }
  }
  return true;
}

std::set<Key> brute_center(const Algebra &A) {
  std::set<Key> out;
  for (const auto &v : all_vectors(A.ring(), A.dim()))
    if (brute_is_central(A, v)) out.insert(key(A.ring(), v));
  return out;
}

bool brute_nilpotent(const Algebra &A, const Vec &x) {
  Vec p = x;
  for (std::size_t k = 0; k <= A.dim() * 8; ++k) {
    if (is_zero_vec(A.ring(), p)) return true;
    p = A.multiply(p, x);
  }
  return false;
}

std::vector<Vec> brute_center_list(const Algebra &A) {
  std::vector<Vec> out;
  for (const auto &v : all_vectors(A.ring(), A.dim()))
    if (brute_is_central(A, v)) out.push_back(v);
  return out;
}

// Unital: every nonzero a has central c with a c central and nonzero.
bool brute_ce(const Algebra &A) {
  const auto &R = A.ring();
  auto all = all_vectors(R, A.dim());
  std::set<Key> Z = brute_center(A);
  auto zl = brute_center_list(A);
  for (const auto &a : all) {
    if (is_zero_vec(R, a)) continue;
    bool found = false;
    for (const auto &x : zl) {
      Vec y = A.multiply(a, x);
      if (!is_zero_vec(R, y) && Z.count(key(R, y))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::size_t brute_idempotent_count(const Algebra &A) {
  std::size_t n = 0;
  for (const auto &v : all_vectors(A.ring(), A.dim()))
    if (A.multiply(v, v) == v) ++n;
  return n;
}

void expect_valid_witness(const Algebra &A, const Report &r) {
  ASSERT_TRUE(r.witness.has_value());
  const auto &w = *r.witness;
  const auto &R = A.ring();
  ASSERT_FALSE(w.x.empty());
  EXPECT_TRUE(brute_is_central(A, w.x));
  Vec y = A.multiply(w.a, w.x);
  vec_axpy(R, y, w.unit_coeff, w.a);
  EXPECT_EQ(y, w.y);
  EXPECT_FALSE(is_zero_vec(R, w.y));
  EXPECT_TRUE(brute_is_central(A, w.y));
}

void expect_valid_counterexample(const Algebra &A, const Report &r) {
  ASSERT_TRUE(r.counterexample.has_value());
  const auto &R = A.ring();
  const Vec &a = *r.counterexample;
  ASSERT_FALSE(is_zero_vec(R, a));
  for (const auto &x : brute_center_list(A)) {
    Vec y = A.multiply(a, x);
    EXPECT_TRUE(is_zero_vec(R, y) || !brute_is_central(A, y));
  }
}

struct Named {
  std::string name;
  Algebra algebra;
};

std::vector<Named> small_algebras() {
  auto F2 = ScalarRing::prime_field(2), F3 = ScalarRing::prime_field(3), Z4 = ScalarRing::residue_ring(4);
  auto GF4 = ScalarRing::galois_field(2, 2);
  auto Z3 = ScalarRing::residue_ring(3);
  std::vector<Named> out;
  out.push_back({"F2Q8", group_algebra(F2, quaternion_q8()).algebra});
  out.push_back({"F2D4", group_algebra(F2, dihedral(8)).algebra});
  out.push_back({"F3C3", group_algebra(F3, cyclic(3)).algebra});
  out.push_back({"F3S3", group_algebra(F3, dihedral(6)).algebra});
  for (int n = 1; n <= 3; ++n) out.push_back({"Lambda" + std::to_string(n), grassmann(F3, n)});
  out.push_back({"T2F2", upper_triangular(F2, 2)});
  out.push_back({"T2F3", upper_triangular(F3, 2)});
  out.push_back({"HZ4", quaternion_algebra(Z4, Z4.one(), Z4.one())});
  out.push_back({"HZ3", quaternion_algebra(Z3, Z3.one(), Z3.one())});
  out.push_back({"Z4", scalar_algebra(Z4)});
  out.push_back({"GF4x", truncated_polynomial(scalar_algebra(GF4), 3)});
  out.push_back({"skew43", skew_poly_quotient(4, 3)});
  return out;
}

}  // namespace

TEST(Analyzers, CenterMatchesBruteForce) {
  for (const auto &[name, A] : small_algebras()) {
    SCOPED_TRACE(name);
    auto Z = center(A);
    EXPECT_EQ(elements_of(Z), brute_center(A));
    std::set<Key> enumerated;
    for (const auto &z : enumerate_center(A)) enumerated.insert(key(A.ring(), z));
    EXPECT_EQ(enumerated, brute_center(A));
    EXPECT_EQ(Z, subspace_intersect(associative_center(A), commutative_center(A)));
  }
}

TEST(Analyzers, NilradicalMatchesBruteForce) {
  for (const auto &[name, A] : small_algebras()) {
    SCOPED_TRACE(name);
    auto Z = center(A);
    std::set<Key> nil;
    Z.for_each_element([&](const Vec &z) {
      if (brute_nilpotent(A, z)) nil.insert(key(A.ring(), z));
    });
    EXPECT_EQ(elements_of(nilradical_in(A, Z)), nil);
  }
}

TEST(Analyzers, NilradicalOverPrimePowerResidues) {
  auto Z8 = ScalarRing::residue_ring(8), Z9 = ScalarRing::residue_ring(9), Z6 = ScalarRing::residue_ring(6);
  for (auto R : {Z8, Z9, Z6}) {
    SCOPED_TRACE(R.name());
    Algebra A = truncated_polynomial(scalar_algebra(R), 2);
    auto W = Subspace::whole(R, A.dim());
    std::set<Key> nil;
    W.for_each_element([&](const Vec &z) {
      if (brute_nilpotent(A, z)) nil.insert(key(R, z));
    });
    EXPECT_EQ(elements_of(nilradical_in(A, W)), nil);
  }
}

TEST(Analyzers, NilradicalOverRationals) {
  auto Q = ScalarRing::rationals();
  Algebra A = truncated_polynomial(scalar_algebra(Q), 3);
  auto N = nilradical_in(A, Subspace::whole(Q, 3));
  EXPECT_EQ(N, Subspace::span(Q, 3, {A.basis(1), A.basis(2)}));
  Algebra K = t_algebra(Q, 'K', Q.one());
  EXPECT_EQ(nilradical_commutative(K).rank(), 1u);
  EXPECT_TRUE(nilradical_commutative(scalar_algebra(Q)).is_zero());
}

TEST(Analyzers, StrategiesAgreeWithBruteForce) {
  for (const auto &[name, A] : small_algebras()) {
    SCOPED_TRACE(name);
    bool expected = brute_ce(A);
    for (auto s : {Strategy::Auto, Strategy::Enumerate, Strategy::Socle}) {
      Report r = is_centrally_essential(A, s);
      EXPECT_EQ(r.holds(), expected) << strategy_name(s);
      EXPECT_NE(r.verdict, Verdict::Unknown);
      if (r.holds() && A.dim() > 0 && !A.is_commutative()) expect_valid_witness(A, r);
      if (!r.holds()) expect_valid_counterexample(A, r);
    }
  }
}

TEST(Analyzers, PerElementStrategy) {
  auto F2 = ScalarRing::prime_field(2);
  Algebra A = group_algebra(F2, quaternion_q8()).algebra;
  std::vector<Vec> elements = all_vectors(F2, A.dim());
  elements.erase(elements.begin());
  Report r = is_centrally_essential(A, Strategy::PerElementLinear, &elements);
  EXPECT_TRUE(r.holds());
  Algebra T = upper_triangular(F2, 2);
  std::vector<Vec> some{T.basis(0), T.basis(1), T.basis(2)};
  Report t = is_centrally_essential(T, Strategy::PerElementLinear, &some);
  EXPECT_EQ(t.verdict, Verdict::False);
  expect_valid_counterexample(T, t);
}

TEST(Analyzers, KnownVerdicts) {
  auto F2 = ScalarRing::prime_field(2), F3 = ScalarRing::prime_field(3), F5 = ScalarRing::prime_field(5);
  auto Q = ScalarRing::rationals();
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(is_centrally_essential(grassmann(F3, n)).holds(), n % 2 == 1) << n;
  EXPECT_EQ(center(grassmann(F3, 3)).rank(), 5u);
  EXPECT_FALSE(is_centrally_essential(group_algebra(F2, order_p5_group(2)).algebra).holds());
  for (auto G : {dihedral(16), generalized_quaternion(16), semidihedral(16)})
    EXPECT_TRUE(is_centrally_essential(group_algebra(F2, G).algebra).holds());
  EXPECT_TRUE(is_centrally_essential(ce_matrix_family(F3, 7)).holds());
  EXPECT_TRUE(is_centrally_essential(ce_matrix_family(F5, 8)).holds());
  for (char c : std::string("KRS")) EXPECT_TRUE(is_centrally_essential(t_algebra(Q, c, Q.one())).holds()) << c;
  Report t = is_centrally_essential(t_algebra(Q, 'T', Q.one()));
  EXPECT_EQ(t.verdict, Verdict::False);
  ASSERT_TRUE(t.counterexample);
  EXPECT_FALSE(center(t_algebra(Q, 'T', Q.one())).contains(*t.counterexample));
}

TEST(Analyzers, NonUnitalEnumerationUsesAdjoinedUnit) {
  auto F3 = ScalarRing::prime_field(3);
  Algebra A = ce_matrix_family(F3, 7, false);
  EXPECT_FALSE(A.unit().has_value());
  Report r = is_centrally_essential(A, Strategy::Enumerate);
  EXPECT_TRUE(r.holds());
  Report z = is_centrally_essential(zero_algebra(F3, 2));
  EXPECT_TRUE(z.holds());
  ASSERT_TRUE(z.witness);
  EXPECT_EQ(F3.residue(z.witness->unit_coeff), 1);
}

TEST(Analyzers, UniserialCriterion) {
  for (std::int64_t p : {2, 3}) {
    Algebra R = uniserial_derivation_ring(p);
    Report r = is_centrally_essential(R);
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.strategy, "uniserial-criterion");
    EXPECT_EQ(r.details["nilpotency_index"], 4);
    EXPECT_GE(r.details["random_witnesses"].get<int>(), 99);
  }
  Report s = is_centrally_essential(skew_poly_quotient(4, 3), Strategy::UniserialCriterion);
  EXPECT_NE(s.verdict, Verdict::True);
}

TEST(Analyzers, FlavorSeparations) {
  auto F3 = ScalarRing::prime_field(3);
  Algebra Z = zero_algebra(F3, 1);
  EXPECT_TRUE(is_centrally_essential(Z).holds());
  EXPECT_EQ(is_strongly_ce(Z).verdict, Verdict::False);
  Algebra E = exterior_plane_radical(F3);
  EXPECT_EQ(is_centrally_essential(E).verdict, Verdict::False);
  EXPECT_TRUE(is_weakly_ce(E).holds());
  EXPECT_EQ(is_strongly_ce(E).verdict, Verdict::False);
  for (const auto &[name, A] : small_algebras()) {
    if (!A.unit()) continue;
    SCOPED_TRACE(name);
    bool ce = is_centrally_essential(A).holds();
    EXPECT_EQ(is_strongly_ce(A).holds(), ce);
    EXPECT_EQ(is_weakly_ce(A).holds(), ce);
    if (A.is_associative()) {
      EXPECT_TRUE(is_n_essential(A).holds());
      EXPECT_EQ(is_k_essential(A).holds(), ce);
    }
  }
}

TEST(Analyzers, CentroidContainsRadicalMaps) {
  auto F3 = ScalarRing::prime_field(3);
  Algebra E = exterior_plane_radical(F3);
  EndoSpace cent = centroid(E);
  std::vector<Vec> flat;
  for (const auto &m : cent.basis) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    flat.push_back(v);
  }
  ASSERT_FALSE(flat.empty());
  auto S = Subspace::span(F3, flat.front().size(), flat);
  // phi(R) in R^2 and phi(R^2) = 0, in both row and column conventions.
  for (auto [c1, c2] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 1}}) {
    Matrix m(F3, 3, 3);
    m.at(2, 0) = F3.from_int(c1);
    m.at(2, 1) = F3.from_int(c2);
    for (const Matrix &phi : {m, m.transpose()}) {
      Vec v;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) v.push_back(phi.at(i, j));
      if (S.contains(v)) goto next;
    }
    ADD_FAILURE() << c1 << "," << c2;
  next:;
  }
  auto F2 = ScalarRing::prime_field(2);
  Algebra Q8 = group_algebra(F2, quaternion_q8()).algebra;
  EXPECT_EQ(centroid(Q8).basis.size(), center(Q8).rank());
}

TEST(Analyzers, Annihilators) {
  auto Z4 = ScalarRing::residue_ring(4);
  Algebra H = quaternion_algebra(Z4, Z4.one(), Z4.one());
  auto two = integer_annihilator(H, 2);
  EXPECT_EQ(two.cardinality(), 256u / 16u);
  two.for_each_element([&](const Vec &v) { EXPECT_TRUE(is_zero_vec(Z4, vec_scale(Z4, Z4.from_int(2), v))); });
  auto F2 = ScalarRing::prime_field(2);
  Algebra T = upper_triangular(F2, 2);
  auto e11 = T.basis(0);
  for (auto side : {Side::Left, Side::Right, Side::TwoSided}) {
    auto S = Subspace::span(F2, T.dim(), {e11});
    auto Ann = annihilator(T, S, side);
    for (const auto &x : all_vectors(F2, T.dim())) {
      bool left = is_zero_vec(F2, T.multiply(x, e11));
      bool right = is_zero_vec(F2, T.multiply(e11, x));
      bool expected = side == Side::Left ? left : side == Side::Right ? right : left && right;
      EXPECT_EQ(Ann.contains(x), expected);
    }
  }
  EXPECT_FALSE(commutator_ideal(T).is_zero());
  EXPECT_TRUE(commutator_ideal(grassmann(F2, 3)).is_zero());
}

TEST(Analyzers, EssentialSubmodules) {
  auto Z4 = ScalarRing::residue_ring(4), Z3 = ScalarRing::residue_ring(3);
  Algebra A4 = scalar_algebra(Z4);
  EXPECT_TRUE(is_essential_submodule(A4, integer_annihilator(A4, 2)));
  Algebra A3 = scalar_algebra(Z3);
  EXPECT_FALSE(is_essential_submodule(A3, integer_annihilator(A3, 2)));
  EXPECT_TRUE(is_essential_submodule(A3, Subspace::whole(Z3, 1)));
}

TEST(Analyzers, LocalRadical) {
  auto F2 = ScalarRing::prime_field(2), F3 = ScalarRing::prime_field(3);
  auto info = group_algebra(F2, quaternion_q8());
  Report r = verify_local_radical(info.algebra, info.augmentation);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.details["quotient_dim"], 1);
  Algebra L = grassmann(F3, 3);
  std::vector<Vec> pos;
  for (std::size_t i = 1; i < L.dim(); ++i) pos.push_back(L.basis(i));
  Report l = verify_local_radical(L, Subspace::span(F3, L.dim(), pos));
  EXPECT_TRUE(l.holds());
  EXPECT_EQ(l.details["nilpotency_index"], 4);
  EXPECT_THROW(verify_local_radical(L, Subspace::span(F3, L.dim(), {L.basis(1)})), Error);
  Algebra T = upper_triangular(F2, 2);
  EXPECT_THROW(verify_local_radical(T, Subspace::span(F2, 3, {T.basis(0)})), Error);
  Algebra C = group_algebra(F2, cyclic(3)).algebra;
  try {
    verify_local_radical(C, group_algebra(F2, cyclic(3)).augmentation);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_TRUE(e.code() == ErrorCode::NotNilpotent || e.code() == ErrorCode::QuotientNotAField);
  }
}

TEST(Analyzers, Idempotents) {
  auto F2 = ScalarRing::prime_field(2);
  for (const auto &[name, A] : small_algebras()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(idempotents(A).size(), brute_idempotent_count(A));
    if (is_centrally_essential(A).holds()) EXPECT_TRUE(all_idempotents_central(A));
  }
  Algebra Q8 = group_algebra(F2, quaternion_q8()).algebra;
  EXPECT_EQ(idempotents(Q8).size(), 2u);
  Algebra T = upper_triangular(F2, 2);
  EXPECT_FALSE(all_idempotents_central(T));
}

TEST(Analyzers, ZeroDivisorSymmetry) {
  for (const auto &[name, A] : small_algebras()) {
    auto all = all_vectors(A.ring(), A.dim());
    if (all.size() > 1000) continue;
    SCOPED_TRACE(name);
    bool brute = true;
    for (const auto &a : all) {
      if (is_zero_vec(A.ring(), a)) continue;
      bool l = false, r = false;
      for (const auto &b : all) {
        if (is_zero_vec(A.ring(), b)) continue;
        l = l || is_zero_vec(A.ring(), A.multiply(a, b));
        r = r || is_zero_vec(A.ring(), A.multiply(b, a));
      }
      EXPECT_EQ(is_left_zero_divisor(A, a), l);
      EXPECT_EQ(is_right_zero_divisor(A, a), r);
      brute = brute && l == r;
    }
    EXPECT_EQ(zero_divisor_sets_equal(A), brute);
    if (is_centrally_essential(A).holds()) EXPECT_TRUE(brute);
  }
}

TEST(Analyzers, DoublingFormulas) {
  auto Z4 = ScalarRing::residue_ring(4), Z3 = ScalarRing::residue_ring(3), Z2 = ScalarRing::residue_ring(2);
  Algebra H = quaternion_algebra(Z4, Z4.one(), Z4.one());
  Algebra O = octonion_algebra(Z4, Z4.one(), Z4.one(), Z4.one());
  std::vector<std::pair<Algebra, std::int64_t>> cases{
      {H, 1}, {H, 3}, {O, 1}, {quaternion_algebra(Z2, Z2.one(), Z2.one()), 1},
      {quaternion_algebra(Z3, Z3.one(), Z3.one()), 1}, {scalar_algebra(Z4), 1}, {scalar_algebra(Z3), 2}};
  for (const auto &[A, a] : cases) {
    SCOPED_TRACE(A.ring().name() + " dim " + std::to_string(A.dim()) + " alpha " + std::to_string(a));
    Vec alpha = vec_scale(A.ring(), A.ring().from_int(a), *A.unit());
    Algebra R = cayley_dickson(A, alpha);
    EXPECT_EQ(cd_nucleus_by_formula(R, A), associative_center(R));
    EXPECT_EQ(cd_center_by_formula(R, A), center(R));
    bool ce = is_centrally_essential(R).holds();
    EXPECT_EQ(cd_ce_criterion(A, alpha), ce);
    auto size = Subspace::whole(R.ring(), R.dim()).cardinality();
    if (size <= 6561) EXPECT_EQ(cd_n_essential_criterion(A, alpha), is_n_essential(R).holds());
    if (size <= 4096) EXPECT_EQ(ce, brute_ce(R));
  }
}

TEST(Analyzers, Alternativity) {
  auto Z4 = ScalarRing::residue_ring(4);
  Algebra O = octonion_algebra(Z4, Z4.one(), Z4.one(), Z4.one());
  EXPECT_TRUE(is_alternative(O));
  EXPECT_FALSE(O.is_associative());
  Algebra D = cayley_dickson(O, *O.unit());
  EXPECT_FALSE(is_right_alternative(D));
  std::mt19937_64 rng(7);
  bool found = false;
  for (int t = 0; t < 200 && !found; ++t) {
    Vec x = celab::test::random_vec(Z4, D.dim(), rng), y = celab::test::random_vec(Z4, D.dim(), rng);
    found = !is_zero_vec(Z4, associator(D, x, y, y));
  }
  EXPECT_TRUE(found);
  auto F3 = ScalarRing::prime_field(3);
  EXPECT_TRUE(is_alternative(grassmann(F3, 2)));
  Algebra E = exterior_plane_radical(F3);
  EXPECT_TRUE(is_left_alternative(E));
}

TEST(Analyzers, GrassmannPredicate) {
  auto F3 = ScalarRing::prime_field(3), Z4 = ScalarRing::residue_ring(4), F2 = ScalarRing::prime_field(2);
  std::vector<Algebra> bases{scalar_algebra(F3), scalar_algebra(Z4), scalar_algebra(F2),
                             quaternion_algebra(Z4, Z4.one(), Z4.one()), upper_triangular(F2, 2)};
  for (const auto &A : bases)
    for (int n = 0; n <= 3; ++n) {
      if (A.dim() * (1u << n) > 32) continue;
      SCOPED_TRACE(A.ring().name() + " dim " + std::to_string(A.dim()) + " n " + std::to_string(n));
      EXPECT_EQ(grassmann_ce_predicate(A, n), is_centrally_essential(grassmann_over(A, n)).holds());
    }
}

TEST(Analyzers, GroupPredicate) {
  auto F2 = ScalarRing::prime_field(2), F3 = ScalarRing::prime_field(3);
  EXPECT_EQ(group_algebra_ce_predicate(F3, dihedral(6)), Verdict::False);
  EXPECT_EQ(group_algebra_ce_predicate(F2, quaternion_q8()), Verdict::True);
  EXPECT_EQ(group_algebra_ce_predicate(F2, order_p5_group(2)), Verdict::False);
  std::vector<std::pair<ScalarRing, FiniteGroup>> cases{
      {F2, cyclic(6)},      {F3, cyclic(6)},          {F2, dihedral(8)},
      {F2, quaternion_q8()}, {F2, dihedral(6)},       {F3, dihedral(6)},
      {F2, direct_product(quaternion_q8(), cyclic(3))}, {F3, heisenberg_G(3, 1)}, {F2, dihedral(16)}};
  for (const auto &[F, G] : cases) {
    Verdict v = group_algebra_ce_predicate(F, G);
    if (v == Verdict::Unknown) continue;
    SCOPED_TRACE(F.name() + " order " + std::to_string(G.order()));
    EXPECT_EQ(v == Verdict::True, is_centrally_essential(group_algebra(F, G).algebra).holds());
  }
}

TEST(Analyzers, RandomAlgebrasAgree) {
  std::mt19937_64 rng(20261016);
  auto F2 = ScalarRing::prime_field(2), F3 = ScalarRing::prime_field(3);
  for (int t = 0; t < 60; ++t) {
    bool binary = t % 2 == 0;
    const auto &F = binary ? F2 : F3;
    int dim = 1 + static_cast<int>(rng() % (binary ? 4 : 3));
    Algebra A = random_unital_algebra(F, dim, rng);
    ASSERT_TRUE(A.is_associative());
    bool expected = brute_ce(A);
    EXPECT_EQ(is_centrally_essential(A, Strategy::Enumerate).holds(), expected);
    EXPECT_EQ(is_centrally_essential(A, Strategy::Socle).holds(), expected);
    EXPECT_EQ(elements_of(center(A)), brute_center(A));
  }
}

TEST(Analyzers, ReportJson) {
  auto F2 = ScalarRing::prime_field(2);
  Algebra T = upper_triangular(F2, 2);
  Report r = is_centrally_essential(T, Strategy::Socle);
  Json j = report_to_json(T, r);
  EXPECT_EQ(j["verdict"], "false");
  EXPECT_EQ(j["strategy"], "socle");
  EXPECT_EQ(j["certification"], "exact");
  EXPECT_TRUE(j.contains("counterexample"));
  EXPECT_EQ(parse_strategy("per-element-linear"), Strategy::PerElementLinear);
  EXPECT_THROW(parse_strategy("bogus"), Error);
}
