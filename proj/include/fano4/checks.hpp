// The verification suites behind fano4-verify.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano4/report.hpp"

namespace fano {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // "default" (both built-in forms), "s5", "ozeki" or "file:PATH"
  std::string theta = "default";
  std::vector<std::uint64_t> primes;  // empty: per-form defaults
  std::vector<std::string> only;      // id globs; empty selects everything
  std::vector<std::string> suites = {"models", "count", "chow", "rep", "config", "audit"};
  std::string report_path;
  int threads = 1;
  std::uint64_t seed = 1729;
};

const std::vector<std::string>& all_suites();
// Reads a JSON config file with the RunConfig fields.
RunConfig load_config(const std::string& path);
// Throws ConfigError on bad primes, unknown theta sources or unreadable files.
void validate(const RunConfig& c);
Report run_checks(const RunConfig& c);

}  // namespace fano
