#include "celab/oracle.hpp"
#include "celab/suite.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace celab;

TEST(Suite, CasesAreWellFormed) {
  auto cases = suite_cases();
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto &c : cases) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    criteria.insert(c.criterion);
    EXPECT_FALSE(c.expect.empty()) << c.id;
    for (const auto &e : c.expect)
      EXPECT_TRUE(e.basis == "published" || e.basis == "immediate" || e.basis == "computed") << c.id;
  }
  EXPECT_EQ(criteria.size(), 15u);
  EXPECT_EQ(*criteria.begin(), 1);
  EXPECT_EQ(*criteria.rbegin(), 15);
}

TEST(Suite, GlobFilter) {
  EXPECT_TRUE(glob_match("cd-*", "cd-octonion-z4"));
  EXPECT_FALSE(glob_match("cd-*", "grassmann-f3-rank3"));
  SuiteOptions o;
  o.filter = "cd-*";
  SuiteRun run = run_suite(o);
  EXPECT_EQ(run.results.size(), 5u);
  EXPECT_TRUE(run.passed);
  for (const auto &r : run.results) EXPECT_EQ(r.id.rfind("cd-", 0), 0u);
}

TEST(Suite, ResultsOrderedById) {
  SuiteOptions o;
  o.filter = "grassmann-*";
  o.threads = 4;
  SuiteRun run = run_suite(o);
  ASSERT_EQ(run.results.size(), 6u);
  for (std::size_t i = 1; i < run.results.size(); ++i) EXPECT_LT(run.results[i - 1].id, run.results[i].id);
}

TEST(Suite, CorruptedGrassmannSignIsDetected) {
  SuiteOptions o;
  o.filter = "grassmann-*";
  o.corrupt_grassmann_sign = true;
  SuiteRun bad = run_suite(o);
  EXPECT_FALSE(bad.passed);
  EXPECT_NE(std::find(bad.failed.begin(), bad.failed.end(), "grassmann-f3-rank3"), bad.failed.end());
  o.corrupt_grassmann_sign = false;
  EXPECT_TRUE(run_suite(o).passed);
}

TEST(Suite, ReportDeterministicWithoutTiming) {
  SuiteOptions o;
  o.filter = "t-algebra-*";
  Json a = suite_report(run_suite(o), false), b = suite_report(run_suite(o), false);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_FALSE(a.contains("millis"));
  Json timed = suite_report(run_suite(o), true);
  EXPECT_TRUE(timed.contains("millis"));
}

TEST(Suite, MismatchIsReported) {
  SuiteCase c{"probe", 1, "grassmann", Json{{"n", 2}}, "auto", {{"ce", "/value", true, "computed"}}};
  CaseResult r = run_case(c);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.checks[0]["actual"], false);
  SuiteCase broken{"broken", 1, "grassmann", Json{{"n", 2}}, "auto", {{"bogus", "/value", true, "computed"}}};
  CaseResult e = run_case(broken);
  EXPECT_FALSE(e.passed);
  EXPECT_FALSE(e.error.empty());
}

TEST(Oracle, SeedReproducibility) {
  OracleOptions o;
  o.count = 30;
  o.seed = 99;
  OracleResult a = run_oracle(o), b = run_oracle(o);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  o.seed = 100;
  EXPECT_NE(run_oracle(o).report.dump(), a.report.dump());
}

TEST(Oracle, InjectedDisagreementFailsWithMinimizedAlgebra) {
  OracleOptions o;
  o.count = 3;
  o.inject_disagreement = true;
  OracleResult r = run_oracle(o);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.minimized.has_value());
  EXPECT_TRUE(r.minimized->is_associative());
  EXPECT_TRUE(r.minimized->unit().has_value());
  EXPECT_TRUE(r.report.contains("minimized"));
}

TEST(Oracle, RejectsBadOptions) {
  OracleOptions o;
  o.dim = 5;
  EXPECT_ANY_THROW(run_oracle(o));
  o.dim = 2;
  o.scalar = "Z4";
  EXPECT_ANY_THROW(run_oracle(o));
}

TEST(Oracle, FieldOfThreeBatch) {
  OracleOptions o;
  o.count = 40;
  o.dim = 2;
  o.scalar = "F3";
  o.seed = 3;
  OracleResult r = run_oracle(o);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.report["algebras"].size(), 40u);
}
