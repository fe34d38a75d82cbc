// Acceptance run: one pass/fail line per criterion, each with a pinned time limit.
#include "celab/suite.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace celab;

namespace {

struct Criterion {
  int number;
  const char *title;
  double limit_ms;
};

const std::vector<Criterion> criteria = {
    {1, "F2[Q8]: size, CE by enumerate and socle, idempotents, local augmentation", 1000},
    {2, "Exterior algebras over F3, ranks 1..6: CE iff rank odd", 5000},
    {3, "F2[D4]: CE with a square-zero element x and xRx != 0", 1000},
    {4, "Group of order 32: upper central series, CE false via socle", 10000},
    {5, "F2 group algebras of the class-3 groups of order 16 are CE", 5000},
    {6, "F3[S3]: CE false by enumeration and by the group predicate", 2000},
    {7, "Nilpotent matrix families over F3 and F5: CE, right ideal not two-sided", 2000},
    {8, "Rational algebras K, R, S CE; T not CE with socle outside the center", 1000},
    {9, "Skew polynomial quotient: center of rank 3, CE false, J^2 central", 1000},
    {10, "Cayley-Dickson doubles over Z4, Z2, Z3 and the formula subspaces", 20000},
    {11, "Separations of CE, strongly CE and weakly CE", 2000},
    {12, "Semirings: powerset example, Boolean[Q8], sampled Q+[Q8]", 5000},
    {13, "Uniserial derivation ring: identities and 100 sampled witnesses", 3000},
    {14, "Preservation under truncation, tensor products and direct sums", 5000},
    {15, "Oracle batch of 200 random unital algebras", 20000},
};

}  // namespace

int main() {
  std::map<int, std::vector<SuiteCase>> by_criterion;
  for (auto &c : suite_cases()) by_criterion[c.criterion].push_back(std::move(c));

  bool all = true;
  double total = 0;
  for (const auto &crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failed;
    const auto &cases = by_criterion[crit.number];
    for (const auto &c : cases)
      if (!run_case(c).passed) failed.push_back(c.id);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    total += ms;
    bool in_time = ms < crit.limit_ms;
    bool ok = !cases.empty() && failed.empty() && in_time;
    all = all && ok;
    std::printf("criterion %2d: %s  %s  [%zu cases, %.0f ms, limit %.0f ms]", crit.number, ok ? "PASS" : "FAIL",
                crit.title, cases.size(), ms, crit.limit_ms);
    if (!in_time) std::printf("  over time limit");
    for (const auto &id : failed) std::printf("  mismatch: %s", id.c_str());
    std::printf("\n");
  }
  std::printf("total %.0f ms; %s\n", total, all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
