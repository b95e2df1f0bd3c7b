// Check records, the JSON report and the human summary.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace fano {

enum class CheckStatus { Pass, Fail, PaperDiscrepancy, Skipped };
// Where the expected value comes from: a printed claim, a trivial identity,
// or an independent derivation.
enum class Source { Printed, Trivial, Derived };

std::string to_string(CheckStatus s);
std::string to_string(Source s);

struct CheckRecord {
  std::string id;  // group.name..., e.g. chow.porteous.degree
  CheckStatus status = CheckStatus::Pass;
  Source source = Source::Derived;
  std::string expected;
  std::string computed;
  std::string note;
  std::string group() const { return id.substr(0, id.find('.')); }
};

struct Report {
  std::map<std::string, std::string> config;  // theta, primes, seeds, ...
  std::vector<CheckRecord> records;
};

// Shell-style glob with * and ?.
bool glob_match(const std::string& pattern, const std::string& text);

// Sorted by id; keys sorted; no timing information.
std::string to_json(const Report& r);
Report parse_report(const std::string& json_text);
std::string summary(const Report& r, double seconds);
int exit_code(const std::vector<CheckRecord>& records);

}  // namespace fano
