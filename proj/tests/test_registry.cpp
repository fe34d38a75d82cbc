#include "celab/analyzers.hpp"
#include "celab/error.hpp"
#include "celab/registry.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace celab;

namespace {

std::string round_trip(const Built &b) {
  std::string text = built_to_json(b).dump(2);
  return built_to_json(built_from_json(parse_json(text))).dump(2);
}

}  // namespace

TEST(Registry, EveryBuilderHasDefaults) {
  std::set<std::string> needs_params{"truncated-polynomial", "tensor-product", "direct-sum", "grassmann-over"};
  for (const auto &name : builder_names()) {
    SCOPED_TRACE(name);
    if (needs_params.count(name)) {
      EXPECT_THROW(build_named(name, Json::object()), Error);
      continue;
    }
    Built b = build_named(name, Json::object());
    int kinds = b.algebra.has_value() + b.semiring.has_value() + b.group_semiring.has_value() + b.derivation.has_value();
    EXPECT_EQ(kinds, 1);
  }
}

TEST(Registry, JsonRoundTripIsByteIdentical) {
  const std::vector<std::pair<std::string, Json>> specs = {
      {"q8-group-algebra", {{"field", "F2"}}},
      {"grassmann", {{"field", "F3"}, {"n", 3}}},
      {"grassmann", {{"field", "F3"}, {"n", 0}}},
      {"cayley-dickson", {{"ring", "Z4"}, {"alphas", "1,1,1"}}},
      {"t-algebra", {{"field", "Q"}, {"variant", "S"}, {"k", 2}}},
      {"skew-poly", {{"q", 4}, {"k", 3}}},
      {"uniserial", {{"p", 3}}},
      {"jelonek", {{"base", 0}}},
      {"semiring", {{"kind", "powerset-example"}}},
      {"semiring", {{"kind", "rational-group"}, {"group", "Q8"}}},
      {"random-algebra", {{"field", "F3"}, {"dim", 3}, {"seed", 4}}},
  };
  for (const auto &[name, params] : specs) {
    SCOPED_TRACE(name + params.dump());
    Built b = build_named(name, params);
    EXPECT_EQ(round_trip(b), built_to_json(b).dump(2));
  }
}

TEST(Registry, BuildIsDeterministic) {
  Json p{{"field", "F2"}, {"dim", 3}, {"seed", 12}};
  EXPECT_EQ(built_to_json(build_named("random-algebra", p)).dump(),
            built_to_json(build_named("random-algebra", p)).dump());
}

TEST(Registry, ParamsAcceptStringsAndNumbers) {
  EXPECT_EQ(build_named("grassmann", Json{{"n", "2"}}).algebra->dim(), 4u);
  EXPECT_EQ(build_named("grassmann", Json{{"n", 2}}).algebra->dim(), 4u);
  EXPECT_EQ(build_named("grassmann", Json{{"n", 0}}).algebra->dim(), 1u);
  EXPECT_THROW(build_named("grassmann", Json{{"n", "two"}}), Error);
  EXPECT_THROW(build_named("no-such-builder", Json::object()), Error);
  EXPECT_THROW(build_named("cayley-dickson", Json{{"alphas", "1,1,1,1,1"}}), Error);
  EXPECT_THROW(build_named("ce-matrix", Json{{"adjoin", "maybe"}}), Error);
}

TEST(Registry, NestedBuilders) {
  Json spec{{"builder", "grassmann"}, {"params", {{"field", "F3"}, {"n", 1}}}};
  Built sum = build_named("direct-sum", Json{{"left", spec}, {"right", spec.dump()}});
  EXPECT_EQ(sum.algebra->dim(), 4u);
  Built tensor = build_named("tensor-product", Json{{"left", spec}, {"right", spec}});
  EXPECT_EQ(tensor.algebra->dim(), 4u);
  EXPECT_THROW(build_named("direct-sum", Json{{"left", spec}}), Error);
}

TEST(Registry, GroupNames) {
  EXPECT_EQ(group_by_name("Q8").order(), 8u);
  EXPECT_EQ(group_by_name("cyclic-5").order(), 5u);
  EXPECT_EQ(group_by_name("dihedral-16").order(), 16u);
  EXPECT_EQ(group_by_name("heisenberg-3-1").order(), 27u);
  EXPECT_EQ(group_by_name("order-p5-2").order(), 32u);
  EXPECT_EQ(group_by_name("symmetric-3").order(), 6u);
  EXPECT_THROW(group_by_name("cyclic-x"), Error);
  EXPECT_THROW(group_by_name("mystery"), Error);
}

TEST(Registry, ParseElement) {
  Built b = build_named("cayley-dickson", Json{{"ring", "Z4"}, {"alphas", "1,1"}});
  const Algebra &A = *b.algebra;
  Vec v = parse_element(A, A.labels()[1] + " - 2*" + A.labels()[2] + " + 3");
  const auto &R = A.ring();
  EXPECT_TRUE(R.is_zero(R.sub(v[0], R.from_int(3))));
  EXPECT_TRUE(R.is_zero(R.sub(v[1], R.one())));
  EXPECT_TRUE(R.is_zero(R.sub(v[2], R.from_int(-2))));
  EXPECT_THROW(parse_element(A, "nope"), Error);
  EXPECT_THROW(parse_element(A, ""), Error);
}

TEST(Registry, SquareZeroSandwichInDihedralAlgebra) {
  Built b = build_named("group-algebra", Json{{"field", "F2"}, {"group", "dihedral-8"}});
  const Algebra &A = *b.algebra;
  const FiniteGroup &G = *b.group;
  Json r = evaluate_check(b, "square-zero-sandwich:1+b");
  EXPECT_EQ(r["value"], true);
  // Hand expansion: (1+b) a (1+b) = a + ba + ab + bab with bab = a^-1.
  auto a = G.at("a"), bb = G.at("b");
  std::set<std::size_t> support{a, G.mul(bb, a), G.mul(a, bb), G.inverse(a)};
  EXPECT_EQ(support.size(), 4u);
  Vec x = parse_element(A, "1+b");
  Vec s = A.multiply(A.multiply(x, A.basis(a)), x);
  for (std::size_t g = 0; g < A.dim(); ++g) EXPECT_EQ(A.ring().is_zero(s[g]), support.count(g) == 0);
}

TEST(Registry, ChecksOnSemiringsAndDerivationRings) {
  Built s = build_named("semiring", Json{{"kind", "truncated-triangular"}, {"bound", 1}});
  EXPECT_EQ(evaluate_check(s, "ce")["value"], false);
  EXPECT_EQ(evaluate_check(s, "size")["value"], 8);
  EXPECT_THROW(evaluate_check(s, "dim"), Error);

  Built d = build_named("jelonek", Json{{"base", 0}});
  EXPECT_EQ(evaluate_check(d, "commutative")["value"], false);
  Json central = evaluate_check(d, "ideal-central");
  EXPECT_EQ(central["value"], true);
  EXPECT_EQ(central["certification"], "sampled");
  EXPECT_THROW(evaluate_check(d, "center"), Error);
}

TEST(Registry, UnknownAndMisappliedChecks) {
  Built b = build_named("grassmann", Json{{"n", 2}});
  EXPECT_THROW(evaluate_check(b, "bogus"), Error);
  EXPECT_THROW(evaluate_check(b, "group-predicate"), Error);
  EXPECT_THROW(evaluate_check(b, "cd-formulas"), Error);
  EXPECT_THROW(evaluate_check(b, "commutator:e1"), Error);
  EXPECT_EQ(evaluate_check(b, "grassmann-predicate")["value"], false);
}

TEST(Registry, NotionsAgreeUsesBothRoutes) {
  Built small = build_named("grassmann", Json{{"n", 2}});
  Json r = evaluate_check(small, "ce-notions-agree");
  EXPECT_EQ(r["route"], "enumerate");
  EXPECT_EQ(r["value"], true);
  Built big = build_named("cayley-dickson", Json{{"ring", "Z4"}, {"alphas", "1,1,1"}});
  Json s = evaluate_check(big, "ce-notions-agree");
  EXPECT_EQ(s["route"], "centroid-reduction");
  EXPECT_EQ(s["value"], true);
  Built nonunital = build_named("zero-algebra", Json{{"n", 1}});
  Json z = evaluate_check(nonunital, "ce-notions-agree");
  EXPECT_EQ(z["value"], false);
  EXPECT_EQ(z["strong"], "false");
}
