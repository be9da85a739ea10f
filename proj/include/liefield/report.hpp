#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liefield {

inline constexpr const char* kEngineVersion = "liefield 1.0.0";
inline constexpr const char* kReportSchema = "liefield.report/1";

enum class Status { Pass, Fail, Error };

const char* statusName(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  /// Term count of the residual, "0", or a max-abs figure in float mode.
  std::string residual = "0";
  std::string convention;
  std::vector<std::string> notes;
  std::optional<double> seconds;
};

/// Structured record of one suite run. Checks are kept sorted by name on
/// serialization so the output bytes never depend on evaluation order.
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckResult> checks;
  /// Empirical answers to questions the run settles (conventions found,
  /// relation sets satisfied, ...).
  std::vector<std::pair<std::string, std::string>> findings;

  bool allPassed() const;
  std::size_t failures() const;
  const CheckResult* find(const std::string& name) const;

  void add(CheckResult check) { checks.push_back(std::move(check)); }
  void finding(std::string key, std::string value) { findings.emplace_back(std::move(key), std::move(value)); }
  /// Appends other's checks and findings, prefixing names with "prefix.".
  void merge(const VerificationReport& other, const std::string& prefix = {});

  /// JSON document; durations are emitted only when includeTimings is set,
  /// which keeps the default output byte-stable across runs.
  std::string toJson(bool includeTimings = false) const;
};

CheckResult passFail(std::string name, bool ok, std::string residual = "0");

}  // namespace liefield
