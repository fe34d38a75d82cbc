#include "celab/analyzers.hpp"
#include "celab/error.hpp"
#include "celab/io.hpp"
#include "celab/oracle.hpp"
#include "celab/registry.hpp"
#include "celab/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace celab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

// Turns "--key value" pairs left over by CLI11 into a params object.
Json extras_to_params(const std::vector<std::string> &extras) {
  Json params = Json::object();
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string &arg = extras[i];
    if (arg.rfind("--", 0) != 0 || arg.size() <= 2) throw Error(ErrorCode::UnsupportedParameter, "unexpected argument '" + arg + "'");
    std::string key = arg.substr(2), value;
    auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else if (i + 1 < extras.size() && extras[i + 1].rfind("--", 0) != 0) {
      value = extras[++i];
    } else {
      value = "true";
    }
    // Nested builder specifications are given as JSON text.
    if (!value.empty() && value.front() == '{')
      params[key] = parse_json(value);
    else
      params[key] = value;
  }
  return params;
}

std::string render(const Json &j) { return j.dump(2) + "\n"; }

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_checks(const std::string &list) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  // Commas inside an argument such as commutator:x,t stay with the check.
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!cur.empty() && depth > 0) {
      cur += "," + item;
      depth = 0;
    } else {
      if (!cur.empty()) out.push_back(cur);
      cur = item;
      depth = item.rfind("commutator:", 0) == 0 ? 1 : 0;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool known_check(const std::string &check) {
  auto names = check_names();
  if (std::find(names.begin(), names.end(), check) != names.end()) return true;
  auto colon = check.find(':');
  return colon != std::string::npos &&
         std::find(names.begin(), names.end(), check.substr(0, colon + 1)) != names.end();
}

std::string text_value(const Json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

int cmd_build(const std::string &name, const std::vector<std::string> &extras, const std::string &out) {
  Built b = build_named(name, extras_to_params(extras));
  write_output(out, render(built_to_json(b)));
  return exit_ok;
}

int cmd_analyze(const std::string &file, const std::string &builder, const std::string &params,
                const std::string &checks, const std::string &strategy_name, const std::string &format) {
  Strategy strategy = parse_strategy(strategy_name);
  auto list = split_checks(checks);
  if (list.empty()) throw Error(ErrorCode::UnsupportedParameter, "no checks requested");
  for (const auto &c : list)
    if (!known_check(c)) throw Error(ErrorCode::UnsupportedParameter, "unknown check '" + c + "'");
  if (file.empty() == builder.empty()) throw Error(ErrorCode::UnsupportedParameter, "give exactly one of FILE or --builder");
  Built b = builder.empty() ? built_from_json(read_json_file(file)) : build_named(builder, params.empty() ? Json::object() : parse_json(params));
  Json results = Json::array();
  for (const auto &c : list) {
    Json r = evaluate_check(b, c, strategy);
    if (format == "text")
      std::cout << c << ": " << text_value(r.at("value")) << "\n";
    else
      results.push_back(std::move(r));
  }
  if (format == "json") std::cout << render(results);
  return exit_ok;
}

int cmd_suite(const SuiteOptions &options, const std::string &report, bool timing) {
  SuiteRun run = run_suite(options);
  for (const auto &r : run.results)
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << (r.error.empty() ? "" : "  (" + r.error + ")") << "\n";
  if (!report.empty()) write_output(report, render(suite_report(run, timing)));
  std::cout << run.results.size() - run.failed.size() << "/" << run.results.size() << " cases passed\n";
  if (!run.passed) {
    std::cout << "mismatched cases:";
    for (const auto &id : run.failed) std::cout << " " << id;
    std::cout << "\n";
    return exit_violation;
  }
  return exit_ok;
}

int cmd_oracle(const OracleOptions &options, const std::string &report, const std::string &dump) {
  OracleResult r = run_oracle(options);
  write_output(report, render(r.report));
  if (r.passed) return exit_ok;
  if (r.minimized) {
    write_output(dump, render(algebra_to_json(*r.minimized)));
    std::cerr << "oracle failure; minimized algebra written to " << dump << "\n";
  }
  return exit_violation;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"ce-lab: centrally essential rings workbench"};
  app.require_subcommand(1);

  std::string out, file, builder, checks, strategy = "auto", format = "json", report, dump = "oracle-failure.json";
  std::string build_name, params;

  auto *build = app.add_subcommand("build", "Build a named construction and write its JSON");
  build->add_option("name", build_name, "Builder name")->required();
  build->add_option("--out", out, "Output file (default stdout)");
  build->allow_extras();

  auto *analyze = app.add_subcommand("analyze", "Run checks on an algebra or semiring file");
  analyze->add_option("file", file, "Input JSON file");
  analyze->add_option("--builder", builder, "Build in memory instead of reading a file");
  analyze->add_option("--params", params, "Builder parameters as a JSON object");
  analyze->add_option("--checks", checks, "Comma-separated checks")->required();
  analyze->add_option("--strategy", strategy, "auto, enumerate, per-element-linear, socle, uniserial-criterion");
  analyze->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  SuiteOptions suite_options;
  bool no_timing = false;
  auto *suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_option("--filter", suite_options.filter, "Glob over case ids");
  suite->add_option("--report", report, "Write the consolidated JSON report");
  suite->add_option("--threads", suite_options.threads, "Worker threads (0 = all cores)");
  suite->add_flag("--corrupt-grassmann-sign", suite_options.corrupt_grassmann_sign, "Mutation test hook");
  suite->add_flag("--no-timing", no_timing, "Omit timing fields from the report");

  OracleOptions oracle_options;
  auto *oracle = app.add_subcommand("oracle", "Cross-check strategies on seeded random algebras");
  oracle->add_option("--count", oracle_options.count, "Number of algebras");
  oracle->add_option("--dim", oracle_options.dim, "Maximum dimension (at most 4)");
  oracle->add_option("--scalar", oracle_options.scalar, "Finite field, e.g. F2");
  oracle->add_option("--seed", oracle_options.seed, "RNG seed");
  oracle->add_option("--report", report, "Report file (default stdout)");
  oracle->add_option("--dump", dump, "File for the minimized failing algebra");
  oracle->add_flag("--inject-disagreement", oracle_options.inject_disagreement, "Test hook forcing a failure");

  auto *list = app.add_subcommand("list", "List builders and checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*build) return cmd_build(build_name, build->remaining(), out);
    if (*analyze) return cmd_analyze(file, builder, params, checks, strategy, format);
    if (*suite) return cmd_suite(suite_options, report, !no_timing);
    if (*oracle) return cmd_oracle(oracle_options, report, dump);
    if (*list) {
      std::cout << "builders:";
      for (const auto &n : builder_names()) std::cout << " " << n;
      std::cout << "\nchecks:";
      for (const auto &n : check_names()) std::cout << " " << n;
      std::cout << "\n";
      return exit_ok;
    }
  } catch (const std::exception &e) {
    std::cerr << "ce-lab: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
