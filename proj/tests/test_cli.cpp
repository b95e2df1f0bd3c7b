#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fano4/checks.hpp"
#include "fano4/report.hpp"

using namespace fano;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(FANO4_VERIFY_BIN) + " " + args + " 2>&1";
  Result r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, BadPrimeIsAConfigError) {
  for (const char* p : {"5", "15", "x"}) {
    Result r = run(std::string("count --primes ") + p);
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_NE(r.out.find("prime"), std::string::npos);
  }
}

TEST(Cli, UnknownThetaAndMissingFile) {
  EXPECT_EQ(run("models --theta nonsense").code, 2);
  EXPECT_EQ(run("models --theta file:/nonexistent.json").code, 2);
}

TEST(Cli, ConfigSuitePassesAndWritesReport) {
  std::string path = tmp("config_report.json");
  Result r = run("config --report " + path);
  EXPECT_EQ(r.code, 0) << r.out;
  Report rep = parse_report(slurp(path));
  EXPECT_FALSE(rep.records.empty());
  for (const auto& c : rep.records) EXPECT_EQ(c.group(), "config");
  EXPECT_EQ(rep.config.at("seed"), "1729");
}

TEST(Cli, OnlyFilter) {
  std::string path = tmp("only.json");
  Result r = run("all --only 'chow.porteous.*' --report " + path);
  EXPECT_EQ(r.code, 0) << r.out;
  Report rep = parse_report(slurp(path));
  ASSERT_EQ(rep.records.size(), 3u);
  for (const auto& c : rep.records) EXPECT_EQ(c.id.rfind("chow.porteous.", 0), 0u);
}

TEST(Cli, FailingChecksGiveNonzeroExit) {
  Result r = run("models --only models.lift.cycle");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("models.lift.cycle"), std::string::npos);
}

TEST(Cli, DiscrepanciesDoNotFail) {
  Result r = run("audit --only 'audit.ledger.*'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("discrepancies"), std::string::npos);
}

TEST(Cli, ReportIndependentOfThreads) {
  std::string a = tmp("t1.json"), b = tmp("t3.json");
  ASSERT_EQ(run("count --primes 7 --threads 1 --report " + a).code, 0);
  ASSERT_EQ(run("count --primes 7 --threads 3 --report " + b).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, CustomTensorFile) {
  Result r = run(std::string("models --theta file:") + FANO4_DATA_DIR + "/s5_rebased.json --primes 7");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, ConfigFile) {
  std::string path = tmp("cfg.json");
  std::ofstream(path) << R"({"theta": "s5", "primes": [7], "only": ["count.s5.p7.X0"], "seed": 5})";
  std::string rep = tmp("cfg_report.json");
  Result r = run("all --config " + path + " --report " + rep);
  EXPECT_EQ(r.code, 0) << r.out;
  Report p = parse_report(slurp(rep));
  ASSERT_EQ(p.records.size(), 1u);
  EXPECT_EQ(p.config.at("seed"), "5");
  std::ofstream(path) << R"({"primes": [4]})";
  EXPECT_EQ(run("all --config " + path).code, 2);
}

TEST(Library, ValidateRejectsBadConfigs) {
  RunConfig c;
  c.primes = {9};
  EXPECT_THROW(validate(c), ConfigError);
  c.primes = {};
  c.suites = {"nope"};
  EXPECT_THROW(validate(c), ConfigError);
  c.suites = {"config"};
  c.threads = 0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(Library, ReportRoundTrip) {
  RunConfig c;
  c.suites = {"rep"};
  Report r = run_checks(c);
  std::string j = to_json(r);
  Report back = parse_report(j);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(exit_code(r.records), 0);
}

TEST(Library, GlobMatch) {
  EXPECT_TRUE(glob_match("chow.*", "chow.x4.K4"));
  EXPECT_TRUE(glob_match("*.prop.*", "rep.prop.serre_duality"));
  EXPECT_TRUE(glob_match("count.s5.p?.X0", "count.s5.p7.X0"));
  EXPECT_FALSE(glob_match("count.s5.p?.X0", "count.s5.p11.X0"));
}
