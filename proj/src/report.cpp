#include "fano4/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fano {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::PaperDiscrepancy: return "paper_discrepancy";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string to_string(Source s) {
  switch (s) {
    case Source::Printed: return "printed";
    case Source::Trivial: return "trivial";
    case Source::Derived: return "derived";
  }
  return "?";
}

static CheckStatus status_from(const std::string& s) {
  for (auto x : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::PaperDiscrepancy, CheckStatus::Skipped})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown status " + s);
}

static Source source_from(const std::string& s) {
  for (auto x : {Source::Printed, Source::Trivial, Source::Derived})
    if (to_string(x) == s) return x;
  throw std::invalid_argument("unknown source " + s);
}

bool glob_match(const std::string& p, const std::string& t) {
  size_t i = 0, j = 0, star = std::string::npos, mark = 0;
  while (j < t.size()) {
    if (i < p.size() && (p[i] == '?' || p[i] == t[j])) {
      ++i;
      ++j;
    } else if (i < p.size() && p[i] == '*') {
      star = i++;
      mark = j;
    } else if (star != std::string::npos) {
      i = star + 1;
      j = ++mark;
    } else {
      return false;
    }
  }
  while (i < p.size() && p[i] == '*') ++i;
  return i == p.size();
}

static std::vector<CheckRecord> sorted(std::vector<CheckRecord> r) {
  std::stable_sort(r.begin(), r.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return r;
}

std::string to_json(const Report& r) {
  json doc;
  doc["format"] = "fano4-report";
  doc["version"] = 1;
  doc["config"] = r.config;
  json checks = json::array();
  std::map<std::string, int> counts;
  for (auto s : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::PaperDiscrepancy, CheckStatus::Skipped})
    counts[to_string(s)] = 0;
  for (const auto& c : sorted(r.records)) {
    json j;
    j["id"] = c.id;
    j["status"] = to_string(c.status);
    j["source"] = to_string(c.source);
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(j);
    ++counts[to_string(c.status)];
  }
  doc["checks"] = checks;
  doc["totals"] = counts;
  doc["exit_code"] = exit_code(r.records);
  return doc.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  json doc = json::parse(text);
  Report r;
  for (auto& [k, v] : doc.at("config").items()) r.config[k] = v.get<std::string>();
  for (const auto& j : doc.at("checks")) {
    CheckRecord c;
    c.id = j.at("id").get<std::string>();
    c.status = status_from(j.at("status").get<std::string>());
    c.source = source_from(j.at("source").get<std::string>());
    c.expected = j.at("expected").get<std::string>();
    c.computed = j.at("computed").get<std::string>();
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    r.records.push_back(c);
  }
  return r;
}

std::string summary(const Report& r, double seconds) {
  std::map<std::string, std::map<CheckStatus, int>> by_group;
  for (const auto& c : r.records) ++by_group[c.group()][c.status];
  std::ostringstream s;
  s << std::left << std::setw(10) << "group" << std::right << std::setw(7) << "pass" << std::setw(7) << "fail"
    << std::setw(13) << "discrepancy" << std::setw(9) << "skipped" << "\n";
  for (auto& [g, m] : by_group)
    s << std::left << std::setw(10) << g << std::right << std::setw(7) << m[CheckStatus::Pass] << std::setw(7)
      << m[CheckStatus::Fail] << std::setw(13) << m[CheckStatus::PaperDiscrepancy] << std::setw(9)
      << m[CheckStatus::Skipped] << "\n";
  auto list = sorted(r.records);
  for (auto st : {CheckStatus::Fail, CheckStatus::PaperDiscrepancy}) {
    bool header = false;
    for (const auto& c : list) {
      if (c.status != st) continue;
      if (!header) s << "\n" << (st == CheckStatus::Fail ? "failures" : "discrepancies with printed values") << ":\n";
      header = true;
      s << "  " << c.id << "\n      expected: " << c.expected << "\n      computed: " << c.computed << "\n";
      if (!c.note.empty()) s << "      note: " << c.note << "\n";
    }
  }
  s << "\n" << r.records.size() << " checks in " << std::fixed << std::setprecision(1) << seconds << " s\n";
  return s.str();
}

int exit_code(const std::vector<CheckRecord>& records) {
  for (const auto& c : records)
    if (c.status == CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace fano
