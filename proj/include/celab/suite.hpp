#ifndef CELAB_SUITE_HPP
#define CELAB_SUITE_HPP

#include "celab/io.hpp"

#include <string>
#include <vector>

namespace celab {

/// One expected value: evaluate `check`, read `path` (JSON pointer into the check result), compare to `expected`.
/// basis is "published" (stated in the source), "immediate" (follows at once) or "computed" (independent oracle).
struct Expectation {
  std::string check;
  std::string path;
  Json expected;
  std::string basis;
};

struct SuiteCase {
  std::string id;
  /// Acceptance criterion number 1..15.
  int criterion = 0;
  /// Registered builder name, or "oracle-batch" for a random-algebra batch with OracleOptions params.
  std::string builder;
  Json params = Json::object();
  std::string strategy = "auto";
  std::vector<Expectation> expect;
};

struct CaseResult {
  std::string id;
  int criterion = 0;
  bool passed = false;
  /// One entry per expectation with the actual value.
  Json checks = Json::array();
  std::string error;
  double millis = 0;
};

struct SuiteOptions {
  /// Glob over case ids.
  std::string filter = "*";
  /// Mutation test hook: corrupt the exterior algebra sign rule for the run.
  bool corrupt_grassmann_sign = false;
  /// 0 means hardware concurrency.
  unsigned threads = 0;
};

struct SuiteRun {
  std::vector<CaseResult> results;
  bool passed = true;
  std::vector<std::string> failed;
};

std::vector<SuiteCase> suite_cases();
bool glob_match(const std::string &pattern, const std::string &text);
CaseResult run_case(const SuiteCase &c);
/// Runs matching cases in parallel; results are ordered by case id.
SuiteRun run_suite(const SuiteOptions &options = {});
/// Consolidated report; timing lives only under "millis" keys.
Json suite_report(const SuiteRun &run, bool with_timing = true);

}  // namespace celab

#endif
