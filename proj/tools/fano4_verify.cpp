// fano4-verify: runs the check suites and writes a JSON report.
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fano4/checks.hpp"
#include "fano4/report.hpp"

namespace {

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      try {
        size_t used = 0;
        long long v = std::stoll(cur, &used);
        if (used != cur.size() || v <= 0) throw std::invalid_argument(cur);
        out.push_back(static_cast<std::uint64_t>(v));
      } catch (const std::exception&) {
        throw fano::ConfigError("bad prime '" + cur + "'");
      }
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the Fano fourfold X4 defined by theta in V4^* (x) Lambda^2 V5^*"};
  app.require_subcommand(1, 1);

  std::string config_path, theta, primes, only, report;
  int threads = 0;
  std::uint64_t seed = 0;
  bool quiet = false;

  std::vector<CLI::App*> subs;
  subs.push_back(app.add_subcommand("all", "run every suite"));
  for (const auto& s : fano::all_suites()) subs.push_back(app.add_subcommand(s, "run the " + s + " suite"));
  for (auto* sub : subs) {
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--theta", theta, "default | s5 | ozeki | file:PATH");
    sub->add_option("--primes", primes, "comma separated primes >= 7");
    sub->add_option("--only", only, "comma separated globs on check ids");
    sub->add_option("--report", report, "write the JSON report here");
    sub->add_option("--threads", threads, "worker threads for the point counts");
    sub->add_option("--seed", seed, "seed for the randomized checks");
    sub->add_flag("--quiet", quiet, "print only the totals line");
  }
  CLI11_PARSE(app, argc, argv);

  fano::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = fano::load_config(config_path);
    if (!theta.empty()) cfg.theta = theta;
    if (!primes.empty()) cfg.primes = parse_primes(primes);
    if (!only.empty()) cfg.only = split(only);
    if (!report.empty()) cfg.report_path = report;
    if (threads) cfg.threads = threads;
    if (seed) cfg.seed = seed;
    const std::string name = app.get_subcommands().front()->get_name();
    if (name != "all") cfg.suites = {name};
    fano::validate(cfg);
  } catch (const fano::ConfigError& e) {
    std::cerr << "fano4-verify: " << e.what() << "\n";
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  fano::Report r;
  try {
    r = fano::run_checks(cfg);
  } catch (const fano::ConfigError& e) {
    std::cerr << "fano4-verify: " << e.what() << "\n";
    return 2;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (!cfg.report_path.empty()) {
    std::ofstream out(cfg.report_path);
    if (!out) {
      std::cerr << "fano4-verify: cannot write " << cfg.report_path << "\n";
      return 2;
    }
    out << fano::to_json(r);
  }
  std::string s = fano::summary(r, secs);
  if (quiet) s = s.substr(s.rfind('\n', s.size() - 2) + 1);
  std::cout << s;
  return fano::exit_code(r.records);
}
