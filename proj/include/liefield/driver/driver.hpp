#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "liefield/embedding/embedding.hpp"
#include "liefield/report.hpp"

namespace liefield {

/// Everything a suite run depends on. Settings are addressed by the same
/// keys on the command line (--key) and in config files (key = value).
struct SuiteConfig {
  std::string suite;
  Signature sig{0, 3};
  Sign sign = Sign::Plus;
  int window = 8;
  int jetOrder = 6;
  /// Empty: formal t.
  std::vector<mpq_class> qValues;
  /// "auto" or an explicit triple such as "eps=+1,q4=root,y=+1".
  std::string convention = "auto";
  std::size_t maxTerms = 50'000'000;
  std::uint64_t seed = 1;
  std::string out;
  std::string cacheDir;
  bool timings = false;
  mpq_class yValue = 2;
  /// Polynomial tests for the shell suites, and their degree.
  int tests = 3;
  int degree = 4;
  /// Random jets for the symbolic/numeric agreement check.
  int jets = 10;
  /// exact or float (shell suites only).
  std::string arithmetic = "exact";
  /// Deliberately broken fixture for negative runs; "none" by default.
  std::string control = "none";
  /// default or identity (qdeform only).
  std::string candidate = "default";
  /// series:s entries for the spectra suite.
  std::vector<std::string> points;
};

/// closure, theorem41, quartic, lemma31, qdeform, fundamental, spectra.
const std::vector<std::string>& suiteNames();
/// "verify-closure" -> "closure", "spectra" -> "spectra".
std::optional<std::string> suiteForCommand(const std::string& command);

/// Keys accepted by applySetting, in documentation order.
const std::vector<std::string>& settingKeys();
/// Repeatable keys append; a comma-separated value appends each item.
bool isRepeatable(const std::string& key);
/// Throws Config for unknown keys and unparsable values.
void applySetting(SuiteConfig& cfg, const std::string& key, const std::string& value);
void clearSetting(SuiteConfig& cfg, const std::string& key);
/// key = value lines; '#' starts a comment. Throws Config.
void applyConfigFile(SuiteConfig& cfg, const std::string& path);
/// Bounds and cross-field constraints. Throws Config.
void validate(const SuiteConfig& cfg);

/// The settings that determine the result; out, cache-dir and timings are
/// left out so they cannot change the report bytes.
std::vector<std::pair<std::string, std::string>> configEcho(const SuiteConfig& cfg);

struct SuiteOutcome {
  VerificationReport report;
  /// 0 all checks pass, 1 a check failed or errored, 2 configuration error.
  int exitCode = 0;
  /// Set when exitCode is 2.
  std::string configError;
};

int exitCodeFor(const VerificationReport& report);

/// Validates cfg, dispatches to the suite and returns its report. Math errors
/// inside a suite become an error check; configuration errors give exit 2.
SuiteOutcome runSuite(const SuiteConfig& cfg);

/// The report document (JSON, schema string included).
std::string renderReport(const SuiteOutcome& outcome, const SuiteConfig& cfg);

}  // namespace liefield
