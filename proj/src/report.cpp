#include "liefield/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace liefield {

const char* statusName(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

bool VerificationReport::allPassed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status != Status::Pass; }));
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks.push_back(std::move(c));
  }
  for (auto [k, v] : other.findings) {
    if (!prefix.empty()) k = prefix + "." + k;
    findings.emplace_back(std::move(k), std::move(v));
  }
}

std::string VerificationReport::toJson(bool includeTimings) const {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema"] = kReportSchema;
  doc["engine_version"] = kEngineVersion;
  doc["suite"] = suite;
  json cfg = json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  doc["config"] = cfg;

  std::vector<CheckResult> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  json arr = json::array();
  for (const auto& c : sorted) {
    json j;
    j["name"] = c.name;
    j["status"] = statusName(c.status);
    j["residual"] = c.residual;
    if (!c.convention.empty()) j["convention"] = c.convention;
    if (!c.notes.empty()) j["notes"] = c.notes;
    if (includeTimings && c.seconds) j["duration_s"] = *c.seconds;
    arr.push_back(std::move(j));
  }
  doc["checks"] = arr;

  auto sortedFindings = findings;
  std::stable_sort(sortedFindings.begin(), sortedFindings.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  json f = json::object();
  for (const auto& [k, v] : sortedFindings) f[k] = v;
  doc["findings"] = f;
  doc["summary"] = {{"checks", checks.size()}, {"failures", failures()}, {"passed", allPassed()}};
  return doc.dump(2) + "\n";
}

CheckResult passFail(std::string name, bool ok, std::string residual) {
  CheckResult c;
  c.name = std::move(name);
  c.status = ok ? Status::Pass : Status::Fail;
  c.residual = std::move(residual);
  return c;
}

}  // namespace liefield
