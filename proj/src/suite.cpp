#include "celab/suite.hpp"

#include "celab/analyzers.hpp"
#include "celab/error.hpp"
#include "celab/limits.hpp"
#include "celab/oracle.hpp"
#include "celab/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

namespace celab {

namespace {

Expectation published(std::string check, Json expected, std::string path = "/value") {
  return {std::move(check), std::move(path), std::move(expected), "published"};
}
Expectation immediate(std::string check, Json expected, std::string path = "/value") {
  return {std::move(check), std::move(path), std::move(expected), "immediate"};
}
Expectation computed(std::string check, Json expected, std::string path = "/value") {
  return {std::move(check), std::move(path), std::move(expected), "computed"};
}

Json params(std::initializer_list<std::pair<const std::string, Json>> items) {
  Json j = Json::object();
  for (const auto &[k, v] : items) j[k] = v;
  return j;
}

Json nested(const std::string &builder, Json p) { return Json{{"builder", builder}, {"params", std::move(p)}}; }

}  // namespace

std::vector<SuiteCase> suite_cases() {
  std::vector<SuiteCase> cases;
  auto add = [&](std::string id, int criterion, std::string builder, Json p, std::vector<Expectation> expect,
                 std::string strategy = "auto") {
    cases.push_back({std::move(id), criterion, std::move(builder), std::move(p), std::move(strategy), std::move(expect)});
  };

  add("group-algebra-f2-q8", 1, "q8-group-algebra", params({{"field", "F2"}}),
      {published("dim", 8), published("size", 256), published("commutative", false), published("ce-enumerate", true),
       published("ce-socle", true), published("idempotents", Json::array({"0", "e"})),
       published("augmentation-local", true), published("augmentation-local", 1, "/report/details/quotient_dim"),
       computed("center-dim", 5), computed("zero-divisor-symmetry", true)});

  for (int n = 1; n <= 6; ++n) {
    std::vector<Expectation> e{published("ce", n % 2 == 1), published("grassmann-predicate", n % 2 == 1),
                               immediate("commutative", n <= 1)};
    if (n == 3) {
      e.push_back(published("size", 6561));
      e.push_back(immediate("center-dim", 5));
      e.push_back(computed("idempotents-central", true));
    }
    add("grassmann-f3-rank" + std::to_string(n), 2, "grassmann", params({{"field", "F3"}, {"n", n}}), e);
  }

  add("group-algebra-f2-dihedral-8", 3, "group-algebra", params({{"field", "F2"}, {"group", "dihedral-8"}}),
      {published("ce", true), published("square-zero-sandwich:1+b", true),
       published("square-zero-sandwich:1+b", true, "/square_zero")});

  add("group-algebra-f2-order-32", 4, "group-algebra", params({{"field", "F2"}, {"group", "order-p5-2"}}),
      {published("group-invariants", 32, "/value/order"),
       published("group-invariants", 2, "/value/upper_central_orders/1"),
       published("group-invariants", 8, "/value/upper_central_orders/2"),
       published("group-invariants", true, "/value/z2_self_centralizing"), published("ce-socle", false),
       computed("group-predicate", "false")});

  for (const char *g : {"dihedral-16", "quaternion-16", "semidihedral-16"})
    add(std::string("group-algebra-f2-") + g, 5, "group-algebra", params({{"field", "F2"}, {"group", g}}),
        {published("ce", true), published("group-invariants", 3, "/value/nilpotence_class"),
         immediate("group-invariants", 16, "/value/order")});

  add("group-algebra-f3-symmetric-3", 6, "group-algebra", params({{"field", "F3"}, {"group", "symmetric-3"}}),
      {published("ce-enumerate", false), published("group-predicate", "false"),
       computed("group-invariants", false, "/value/sylow_direct_factor"), immediate("size", 729)});

  add("ce-matrix-f3-7", 7, "ce-matrix", params({{"field", "F3"}, {"n", 7}}),
      {published("ce", true), published("commutative", false), published("right-ideal-two-sided", true, "/value/right"),
       published("right-ideal-two-sided", false, "/value/left")});
  add("ce-matrix-f5-8", 7, "ce-matrix", params({{"field", "F5"}, {"n", 8}}),
      {published("ce", true), published("commutative", false), published("right-ideal-two-sided", true, "/value/right"),
       published("right-ideal-two-sided", false, "/value/left")});

  for (const char *v : {"K", "R", "S"})
    add(std::string("t-algebra-") + v, 8, "t-algebra", params({{"field", "Q"}, {"variant", v}, {"k", 1}}),
        {published("commutative", true), immediate("ce", true), immediate("socle-in-center", true)}, "socle");
  add("t-algebra-T", 8, "t-algebra", params({{"field", "Q"}, {"variant", "T"}, {"k", 1}}),
      {published("commutative", false), published("ce", false), published("socle-in-center", false)}, "socle");

  add("skew-poly-4-3", 9, "skew-poly", params({{"q", 4}, {"k", 3}}),
      {published("center-dim", 3), computed("center", Json::array({"1", "x^2", "θx^2"}), "/value/basis"),
       published("ce", false), published("ideal-of:x", true, "/value/square_central")});

  add("cd-quaternion-z4", 10, "cayley-dickson", params({{"ring", "Z4"}, {"alphas", "1,1"}}),
      {published("ce-enumerate", true), published("associative", true), published("commutative", false),
       immediate("size", 256), published("cd-formulas", true)});
  add("cd-octonion-z4", 10, "cayley-dickson", params({{"ring", "Z4"}, {"alphas", "1,1,1"}}),
      {published("ce", true), published("alternative", true), published("associative", false),
       published("cd-formulas", true)});
  add("cd-sedenion-z4", 10, "cayley-dickson", params({{"ring", "Z4"}, {"alphas", "1,1,1,1"}}),
      {published("right-alternative", false), published("cd-formulas", true)});
  add("cd-quaternion-z2", 10, "cayley-dickson", params({{"ring", "Z2"}, {"alphas", "1,1"}}),
      {published("commutative", true), published("cd-formulas", true)});
  add("cd-quaternion-z3", 10, "cayley-dickson", params({{"ring", "Z3"}, {"alphas", "1,1"}}),
      {published("ce", false), published("cd-formulas", true)});

  add("separation-zero-algebra-f3", 11, "zero-algebra", params({{"field", "F3"}, {"n", 1}}),
      {published("ce", true), published("strong-ce", false)});
  add("separation-exterior-plane-radical-f3", 11, "exterior-plane-radical", params({{"field", "F3"}}),
      {published("center-is-square", true), published("weak-ce", true), published("ce", false),
       immediate("dim", 3)});
  // Unital finite suite algebras small enough for the centroid solve.
  const std::vector<std::pair<std::string, Json>> unital = {
      {"q8", nested("q8-group-algebra", params({{"field", "F2"}}))},
      {"dihedral-8", nested("group-algebra", params({{"field", "F2"}, {"group", "dihedral-8"}}))},
      {"dihedral-16", nested("group-algebra", params({{"field", "F2"}, {"group", "dihedral-16"}}))},
      {"quaternion-16", nested("group-algebra", params({{"field", "F2"}, {"group", "quaternion-16"}}))},
      {"semidihedral-16", nested("group-algebra", params({{"field", "F2"}, {"group", "semidihedral-16"}}))},
      {"symmetric-3", nested("group-algebra", params({{"field", "F3"}, {"group", "symmetric-3"}}))},
      {"grassmann-1", nested("grassmann", params({{"field", "F3"}, {"n", 1}}))},
      {"grassmann-2", nested("grassmann", params({{"field", "F3"}, {"n", 2}}))},
      {"grassmann-3", nested("grassmann", params({{"field", "F3"}, {"n", 3}}))},
      {"grassmann-4", nested("grassmann", params({{"field", "F3"}, {"n", 4}}))},
      {"ce-matrix-f3-7", nested("ce-matrix", params({{"field", "F3"}, {"n", 7}}))},
      {"ce-matrix-f5-8", nested("ce-matrix", params({{"field", "F5"}, {"n", 8}}))},
      {"skew-poly-4-3", nested("skew-poly", params({{"q", 4}, {"k", 3}}))},
      {"cd-quaternion-z4", nested("cayley-dickson", params({{"ring", "Z4"}, {"alphas", "1,1"}}))},
      {"cd-octonion-z4", nested("cayley-dickson", params({{"ring", "Z4"}, {"alphas", "1,1,1"}}))},
      {"cd-sedenion-z4", nested("cayley-dickson", params({{"ring", "Z4"}, {"alphas", "1,1,1,1"}}))},
      {"cd-quaternion-z2", nested("cayley-dickson", params({{"ring", "Z2"}, {"alphas", "1,1"}}))},
      {"cd-quaternion-z3", nested("cayley-dickson", params({{"ring", "Z3"}, {"alphas", "1,1"}}))},
      {"truncated-q8", nested("truncated-polynomial", params({{"of", nested("q8-group-algebra", params({}))}, {"k", 2}}))},
  };
  for (const auto &[name, spec] : unital)
    add("separation-unital-" + name, 11, spec.at("builder").get<std::string>(), spec.at("params"),
        {published("ce-notions-agree", true)});

  add("semiring-powerset-example", 12, "semiring", params({{"kind", "powerset-example"}}),
      {published("size", 16), published("center", Json::array({"{}", "{1}", "{c}", "{1,c}"})), published("ce", true),
       published("commutative", false)});
  add("semiring-boolean-q8", 12, "semiring", params({{"kind", "boolean-group"}, {"group", "Q8"}}),
      {published("ce", true), immediate("size", 256)});
  add("semiring-rational-q8", 12, "semiring", params({{"kind", "rational-group"}, {"group", "Q8"}}),
      {published("ce", true), computed("ce", 1000, "/report/details/center_sum_witnesses"), published("reduced", true)});

  add("uniserial-p2", 13, "uniserial", params({{"p", 2}}),
      {published("commutative", false), published("commutator:x,t", "x^3"),
       published("ideal-of:x", 4, "/value/nilpotency_index"), published("ideal-of:x", true, "/value/square_central"),
       published("ce", true), computed("ce", 100, "/report/details/random_witnesses")},
      "uniserial-criterion");

  add("preservation-truncated-q8", 14, "truncated-polynomial",
      params({{"of", nested("q8-group-algebra", params({{"field", "F2"}}))}, {"k", 2}}), {published("ce", true)});
  add("preservation-tensor-c2-grassmann3", 14, "tensor-product",
      params({{"left", nested("group-algebra", params({{"field", "F3"}, {"group", "cyclic-2"}}))},
              {"right", nested("grassmann", params({{"field", "F3"}, {"n", 3}}))}}),
      {published("ce", true)});
  auto grassmann_spec = [&](int n) { return nested("grassmann", params({{"field", "F3"}, {"n", n}})); };
  Json s3 = nested("group-algebra", params({{"field", "F3"}, {"group", "symmetric-3"}}));
  const std::vector<std::tuple<std::string, Json, Json, bool>> sums = {
      {"rank1-rank3", grassmann_spec(1), grassmann_spec(3), true},
      {"rank1-rank2", grassmann_spec(1), grassmann_spec(2), false},
      {"rank2-rank3", grassmann_spec(2), grassmann_spec(3), false},
      {"symmetric3-rank1", s3, grassmann_spec(1), false},
  };
  for (const auto &[name, left, right, ce] : sums)
    add("preservation-direct-sum-" + name, 14, "direct-sum", params({{"left", left}, {"right", right}}),
        {immediate("ce", ce)});

  add("oracle-batch-f2", 15, "oracle-batch", params({{"count", 100}, {"dim", 3}, {"scalar", "F2"}, {"seed", 7}}),
      {computed("oracle", true, "/passed")});
  add("oracle-batch-f3", 15, "oracle-batch", params({{"count", 100}, {"dim", 2}, {"scalar", "F3"}, {"seed", 11}}),
      {computed("oracle", true, "/passed")});

  std::sort(cases.begin(), cases.end(), [](const SuiteCase &a, const SuiteCase &b) { return a.id < b.id; });
  return cases;
}

bool glob_match(const std::string &pattern, const std::string &text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

CaseResult run_case(const SuiteCase &c) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  CaseResult r;
  r.id = c.id;
  r.criterion = c.criterion;
  r.passed = true;
  try {
    std::map<std::string, Json> cache;
    std::optional<Built> built;
    Strategy strategy = parse_strategy(c.strategy);
    for (const auto &e : c.expect) {
      auto it = cache.find(e.check);
      if (it == cache.end()) {
        Json value;
        if (c.builder == "oracle-batch") {
          OracleOptions o;
          o.count = c.params.at("count").get<std::size_t>();
          o.dim = c.params.at("dim").get<int>();
          o.scalar = c.params.at("scalar").get<std::string>();
          o.seed = c.params.at("seed").get<std::uint64_t>();
          value = run_oracle(o).report;
          value.erase("algebras");
        } else {
          if (!built) built = build_named(c.builder, c.params);
          value = evaluate_check(*built, e.check, strategy);
        }
        it = cache.emplace(e.check, std::move(value)).first;
      }
      Json::json_pointer ptr(e.path);
      Json actual = it->second.contains(ptr) ? it->second.at(ptr) : Json(nullptr);
      bool ok = actual == e.expected;
      r.passed = r.passed && ok;
      r.checks.push_back(Json{{"check", e.check}, {"path", e.path}, {"expected", e.expected}, {"actual", actual},
                              {"basis", e.basis}, {"ok", ok}});
    }
  } catch (const std::exception &ex) {
    r.passed = false;
    r.error = ex.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

SuiteRun run_suite(const SuiteOptions &options) {
  std::vector<SuiteCase> selected;
  for (auto &c : suite_cases())
    if (glob_match(options.filter, c.id)) selected.push_back(std::move(c));

  bool saved = limits().flip_grassmann_sign;
  limits().flip_grassmann_sign = options.corrupt_grassmann_sign;
  SuiteRun run;
  run.results.resize(selected.size());
  std::atomic<std::size_t> next{0};
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < selected.size();) run.results[i] = run_case(selected[i]);
    });
  for (auto &t : pool) t.join();
  limits().flip_grassmann_sign = saved;

  for (const auto &r : run.results)
    if (!r.passed) run.failed.push_back(r.id);
  run.passed = run.failed.empty();
  return run;
}

Json suite_report(const SuiteRun &run, bool with_timing) {
  Json cases = Json::array();
  double total = 0;
  for (const auto &r : run.results) {
    Json c;
    c["id"] = r.id;
    c["criterion"] = r.criterion;
    c["passed"] = r.passed;
    c["checks"] = r.checks;
    if (!r.error.empty()) c["error"] = r.error;
    if (with_timing) c["millis"] = r.millis;
    total += r.millis;
    cases.push_back(std::move(c));
  }
  Json j;
  j["passed"] = run.passed;
  j["case_count"] = run.results.size();
  j["failed"] = run.failed;
  j["cases"] = cases;
  if (with_timing) j["millis"] = total;
  return j;
}

}  // namespace celab
