#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string &args) {
  std::string cmd = std::string(CE_LAB_PATH) + " " + args + " 2>&1";
  Outcome r{-1, ""};
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("ce_lab_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string &name) const { return (dir / name).string(); }
  fs::path dir;
};

}  // namespace

TEST_F(Cli, BuildAndAnalyze) {
  ASSERT_EQ(run("build q8-group-algebra --field F2 --out " + path("q8.json")).code, 0);
  Outcome a = run("analyze " + path("q8.json") + " --checks ce,center-dim,idempotents --format text");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("ce: true"), std::string::npos);
  EXPECT_NE(a.out.find("center-dim: 5"), std::string::npos);
  EXPECT_NE(a.out.find("idempotents: [\"0\",\"e\"]"), std::string::npos);
}

TEST_F(Cli, BuildIsByteDeterministic) {
  ASSERT_EQ(run("build grassmann --field F3 --n 3 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("build grassmann --field F3 --n 3 --out " + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_NE(slurp(path("a.json")).find("\"dim\": 8"), std::string::npos);
  ASSERT_EQ(run("build grassmann --field F3 --n 0 --out " + path("c.json")).code, 0);
  EXPECT_NE(slurp(path("c.json")).find("\"dim\": 1"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  ASSERT_EQ(run("build t-algebra --field Q --variant T --out " + path("t.json")).code, 0);
  Outcome t = run("analyze " + path("t.json") + " --checks ce --format text");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("ce: false"), std::string::npos);
  EXPECT_EQ(run("analyze " + path("t.json") + " --checks no-such-check").code, 2);
  EXPECT_EQ(run("analyze " + path("missing.json") + " --checks ce").code, 2);
  EXPECT_EQ(run("build no-such-builder").code, 2);
  EXPECT_EQ(run("build grassmann --n seven").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  {
    std::ofstream bad(path("bad.json"));
    bad << "{\"scalar\": {\"kind\": \"PrimeField\", \"p\": 4}, \"dim\": 1}";
  }
  Outcome b = run("analyze " + path("bad.json") + " --checks ce");
  EXPECT_EQ(b.code, 2);
  EXPECT_NE(b.out.find("/scalar"), std::string::npos);
}

TEST_F(Cli, SuiteFilterAndMutation) {
  Outcome ok = run("suite --filter 'cd-*' --report " + path("cd.json"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("5/5 cases passed"), std::string::npos);
  Outcome bad = run("suite --filter 'grassmann-*' --corrupt-grassmann-sign");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("grassmann-f3-rank3"), std::string::npos);
}

TEST_F(Cli, OracleReproducibleAndInjectable) {
  EXPECT_EQ(run("oracle --count 20 --dim 3 --scalar F2 --seed 7 --report " + path("o1.json")).code, 0);
  EXPECT_EQ(run("oracle --count 20 --dim 3 --scalar F2 --seed 7 --report " + path("o2.json")).code, 0);
  EXPECT_EQ(slurp(path("o1.json")), slurp(path("o2.json")));
  Outcome inj = run("oracle --count 2 --inject-disagreement --report " + path("o3.json") + " --dump " + path("dump.json"));
  EXPECT_EQ(inj.code, 1);
  EXPECT_TRUE(fs::exists(path("dump.json")));
  EXPECT_EQ(run("oracle --dim 9").code, 2);
}

TEST_F(Cli, EnumerationCapFromEnvironment) {
  ASSERT_EQ(run("build grassmann --field F3 --n 3 --out " + path("g.json")).code, 0);
  EXPECT_EQ(run("analyze " + path("g.json") + " --checks ce-enumerate").code, 0);
  std::string env = "CE_LAB_MAX_ENUM=100 ";
  std::string cmd = env + CE_LAB_PATH + " analyze " + path("g.json") + " --checks ce-enumerate >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
