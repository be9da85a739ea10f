#include "liefield/driver/driver.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>

#include "liefield/algebra/cache.hpp"
#include "liefield/algebra/substitute.hpp"
#include "liefield/driver/spectra.hpp"
#include "liefield/error.hpp"
#include "liefield/lie/fundamental.hpp"
#include "liefield/qdeform/qdeform.hpp"
#include "liefield/shell/shell.hpp"

namespace liefield {

namespace {

Error configError(const std::string& what) { return Error(ErrorKind::Config, what); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parseInt(const std::string& key, const std::string& v, long long lo, long long hi) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw configError(key + ": '" + v + "' is not an integer");
  if (x < lo || x > hi) throw configError(key + ": " + v + " out of range");
  return x;
}

mpq_class parseRationalValue(const std::string& key, const std::string& v) {
  mpq_class x;
  if (v.empty() || x.set_str(v, 10) != 0 || x.get_den() == 0) {
    throw configError(key + ": '" + v + "' is not a rational number");
  }
  x.canonicalize();
  return x;
}

bool parseBool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw configError(key + ": '" + v + "' is not a boolean");
}

std::vector<std::string> splitList(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Controls each suite accepts; "none" is always allowed.
const std::vector<std::pair<std::string, std::vector<std::string>>>& controlTable() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> t{
      {"closure", {"flip-square-sign", "scale-square"}},
      {"theorem41", {"flip-c2prime"}},
      {"quartic", {"flip-c2prime", "flip-square-sign"}},
      {"lemma31", {"flip-square-sign", "spin-shift", "lemma-n"}},
      {"qdeform", {}},
      {"fundamental", {"bad-matrix"}},
      {"spectra", {}},
  };
  return t;
}

std::string joinRationals(const std::vector<mpq_class>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x.get_str();
  return s;
}

std::vector<Convention> conventionsFor(const SuiteConfig& cfg) {
  if (cfg.convention == "auto") return {};
  return {*Convention::parse(cfg.convention)};
}

EngineOptions engineOptions(const SuiteConfig& cfg) {
  EngineOptions e;
  e.maxTerms = cfg.maxTerms;
  if (!cfg.cacheDir.empty()) e.cache = std::make_shared<PolynomialStore>(cfg.cacheDir);
  return e;
}

EmbeddingContext context(const SuiteConfig& cfg) {
  DeformOptions d;
  d.engine = engineOptions(cfg);
  d.flipSquareSign = cfg.control == "flip-square-sign";
  if (cfg.control == "scale-square") d.squareScale = 2;
  return buildDeformed(cfg.sig, cfg.sign, d);
}

// Runs one phase, merges its report under prefix and stamps its duration on
// every check it added.
void phase(VerificationReport& into, const std::string& prefix, const std::function<VerificationReport()>& f) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r = f();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t first = into.checks.size();
  into.merge(r, prefix);
  for (std::size_t k = first; k < into.checks.size(); ++k) into.checks[k].seconds = secs;
}

VerificationReport runClosure(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto ctx = context(cfg);
  phase(rep, "", [&] { return verifyClosure(ctx); });
  return rep;
}

VerificationReport runTheorem41(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto ctx = context(cfg);
  const auto convs = conventionsFor(cfg);
  Theorem41Options printed;
  printed.flipC2prime = cfg.control == "flip-c2prime";
  Theorem41Options corrected = printed;
  corrected.correctedPrimes = true;
  phase(rep, "", [&] { return verifyTheorem41(ctx, convs, printed).report; });
  phase(rep, "corrected", [&] { return verifyTheorem41(ctx, convs, corrected).report; });
  rep.finding("reading", "theorem41.* evaluate the formulas as printed; corrected.* the sign-corrected primes");
  return rep;
}

VerificationReport runQuartic(const SuiteConfig& cfg) {
  VerificationReport rep;
  auto ctx = context(cfg);
  Theorem41Options printed;
  printed.flipC2prime = cfg.control == "flip-c2prime";
  Theorem41Options corrected = printed;
  corrected.correctedPrimes = true;
  phase(rep, "", [&] { return verifyQuartic(ctx, printed); });
  phase(rep, "corrected", [&] { return verifyQuartic(ctx, corrected); });
  rep.finding("convention", cfg.convention == "auto" ? "independent of the convention triple" : cfg.convention);
  return rep;
}

template <class T>
VerificationReport runShell(const SuiteConfig& cfg) {
  VerificationReport rep;
  ShellConfig sc;
  sc.sig = cfg.sig;
  sc.sign = cfg.sign;
  sc.Yval = cfg.yValue;
  sc.order = cfg.jetOrder;
  if (cfg.control == "spin-shift") sc.spinShift = 1;
  ShellRealization<T> r(sc);
  auto ctx = context(cfg);
  auto polys = polynomialTests(r, cfg.tests, cfg.degree, cfg.seed);
  auto jets = randomJetTests(r, cfg.jets, cfg.seed);
  std::optional<int> nOverride;
  if (cfg.control == "lemma-n") nOverride = cfg.sig.n() + 1;
  phase(rep, "", [&] { return verifyCondition32(r, polys); });
  phase(rep, "", [&] { return verifyLemma31Numeric(r, ctx, buildLemma31Elements(ctx, nOverride), polys); });
  phase(rep, "", [&] { return measureCondition36(r, ctx, polys); });
  phase(rep, "numeric", [&] { return crossCheckClosure(r, ctx, jets); });
  phase(rep, "", [&] { return symbolicNumericAgreement(r, ctx, jets, cfg.seed); });
  rep.finding("orbital_sign", std::to_string(r.orbitalSign()));
  return rep;
}

VerificationReport runLemma31(const SuiteConfig& cfg) {
  return cfg.arithmetic == "float" ? runShell<Quad>(cfg) : runShell<mpq_class>(cfg);
}

VerificationReport runQdeform(const SuiteConfig& cfg) {
  VerificationReport rep;
  QdeformConfig qc;
  qc.Yval = cfg.yValue;
  qc.window = cfg.window;
  qc.qValues = cfg.qValues;
  qc.formal = cfg.qValues.empty();
  qc.candidate = cfg.candidate == "identity" ? CasimirCandidate::Identity : CasimirCandidate::Default;
  phase(rep, "", [&] { return verifyQdeform(qc); });
  return rep;
}

VerificationReport runFundamental(const SuiteConfig& cfg) {
  VerificationReport rep;
  MatrixOverrides overrides;
  if (cfg.control == "bad-matrix") {
    // L_01 replaced by twice itself
    overrides[{0, 1}] = generatorMatrix(cfg.sig, 0, 1).scaled(2);
  }
  phase(rep, "", [&] { return verifyMatrixBrackets(cfg.sig, overrides); });
  phase(rep, "so", [&] {
    Algebra alg(buildSo(cfg.sig).presentation, engineOptions(cfg));
    return checkJacobi(alg);
  });
  phase(rep, "poincare", [&] {
    Algebra alg(buildPoincare(cfg.sig).presentation, engineOptions(cfg));
    return checkJacobi(alg);
  });
  auto cm = casimirMatrix(cfg.sig);
  rep.finding("casimir_matrix", cm.scalar ? cm.scalar->toString() + " * identity" : "not scalar");
  return rep;
}

VerificationReport runSpectra(const SuiteConfig& cfg) {
  VerificationReport rep;
  phase(rep, "", [&] { return verifySpectra(cfg.sig, cfg.sign, cfg.points); });
  return rep;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"closure", "theorem41", "quartic", "lemma31",
                                              "qdeform", "fundamental", "spectra"};
  return names;
}

std::optional<std::string> suiteForCommand(const std::string& command) {
  if (command == "spectra") return command;
  if (command.rfind("verify-", 0) != 0) return std::nullopt;
  std::string name = command.substr(7);
  if (name == "spectra") return std::nullopt;
  if (std::find(suiteNames().begin(), suiteNames().end(), name) == suiteNames().end()) return std::nullopt;
  return name;
}

const std::vector<std::string>& settingKeys() {
  static const std::vector<std::string> keys{
      "p",         "q",          "sign",   "window", "jet-order",  "q-value", "seed",
      "out",       "max-terms",  "convention", "cache-dir", "timings", "y-value", "tests",
      "degree",    "jets",       "arithmetic", "control", "candidate", "point"};
  return keys;
}

bool isRepeatable(const std::string& key) { return key == "q-value" || key == "point"; }

void clearSetting(SuiteConfig& cfg, const std::string& key) {
  if (key == "q-value") cfg.qValues.clear();
  if (key == "point") cfg.points.clear();
}

void applySetting(SuiteConfig& cfg, const std::string& rawKey, const std::string& rawValue) {
  const std::string key = trim(rawKey);
  const std::string v = trim(rawValue);
  constexpr long long kIntMax = std::numeric_limits<int>::max();
  if (key == "p") {
    cfg.sig.p = static_cast<int>(parseInt(key, v, 0, 16));
  } else if (key == "q") {
    cfg.sig.q = static_cast<int>(parseInt(key, v, 1, 16));
  } else if (key == "sign") {
    if (v == "plus" || v == "+") {
      cfg.sign = Sign::Plus;
    } else if (v == "minus" || v == "-") {
      cfg.sign = Sign::Minus;
    } else {
      throw configError("sign: expected plus or minus, got '" + v + "'");
    }
  } else if (key == "window") {
    cfg.window = static_cast<int>(parseInt(key, v, 1, kIntMax));
  } else if (key == "jet-order") {
    cfg.jetOrder = static_cast<int>(parseInt(key, v, 1, kIntMax));
  } else if (key == "q-value") {
    for (const auto& item : splitList(v)) cfg.qValues.push_back(parseRationalValue(key, item));
  } else if (key == "seed") {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
      throw configError("seed: '" + v + "' is not a non-negative integer");
    }
    try {
      cfg.seed = std::stoull(v);
    } catch (const std::exception&) {
      throw configError("seed: '" + v + "' out of range");
    }
  } else if (key == "out") {
    cfg.out = v;
  } else if (key == "max-terms") {
    cfg.maxTerms = static_cast<std::size_t>(parseInt(key, v, 1, std::numeric_limits<long long>::max()));
  } else if (key == "convention") {
    if (v != "auto" && !Convention::parse(v)) throw configError("convention: cannot parse '" + v + "'");
    cfg.convention = v == "auto" ? v : Convention::parse(v)->toString();
  } else if (key == "cache-dir") {
    cfg.cacheDir = v;
  } else if (key == "timings") {
    cfg.timings = parseBool(key, v);
  } else if (key == "y-value") {
    cfg.yValue = parseRationalValue(key, v);
  } else if (key == "tests") {
    cfg.tests = static_cast<int>(parseInt(key, v, 1, 1000));
  } else if (key == "degree") {
    cfg.degree = static_cast<int>(parseInt(key, v, 0, 64));
  } else if (key == "jets") {
    cfg.jets = static_cast<int>(parseInt(key, v, 1, 1000));
  } else if (key == "arithmetic") {
    if (v != "exact" && v != "float") throw configError("arithmetic: expected exact or float");
    cfg.arithmetic = v;
  } else if (key == "control") {
    cfg.control = v;
  } else if (key == "candidate") {
    if (v != "default" && v != "identity") throw configError("candidate: expected default or identity");
    cfg.candidate = v;
  } else if (key == "point") {
    for (const auto& item : splitList(v)) {
      parseSpectralPoint(item);
      cfg.points.push_back(item);
    }
  } else if (key == "suite") {
    if (std::find(suiteNames().begin(), suiteNames().end(), v) == suiteNames().end()) {
      throw configError("unknown suite '" + v + "'");
    }
    cfg.suite = v;
  } else {
    throw configError("unknown setting '" + key + "'");
  }
}

void applyConfigFile(SuiteConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw configError("cannot read config file " + path);
  int lineNo = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw configError(path + ":" + std::to_string(lineNo) + ": expected key = value");
    }
    try {
      applySetting(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw configError(path + ":" + std::to_string(lineNo) + ": " + e.what());
    }
  }
}

void validate(const SuiteConfig& cfg) {
  if (std::find(suiteNames().begin(), suiteNames().end(), cfg.suite) == suiteNames().end()) {
    throw configError("unknown suite '" + cfg.suite + "'");
  }
  if (cfg.sig.p < 0 || cfg.sig.q < 1) throw configError("signature needs p >= 0 and q >= 1");
  if (cfg.window < 4) throw configError("window must be at least 4");
  if (cfg.jetOrder < 2) throw configError("jet-order must be at least 2");
  if (sgn(cfg.yValue) <= 0) throw configError("y-value must be positive");
  for (const auto& q : cfg.qValues) {
    if (sgn(q) <= 0) throw configError("q-value must be positive, got " + q.get_str());
  }
  if (cfg.suite == "theorem41" || cfg.suite == "quartic") {
    if (cfg.sig.p != 0 || cfg.sig.q != 3 || cfg.sign != Sign::Plus) {
      throw configError(cfg.suite + " is defined for p = 0, q = 3, sign plus only");
    }
  }
  if (cfg.convention != "auto" && cfg.suite != "theorem41") {
    if (cfg.suite != "quartic") throw configError("convention applies to theorem41 and quartic only");
  }
  if (!cfg.qValues.empty() && cfg.suite != "qdeform") throw configError("q-value applies to qdeform only");
  if (!cfg.points.empty() && cfg.suite != "spectra") throw configError("point applies to spectra only");
  if (cfg.arithmetic == "float" && cfg.suite != "lemma31") throw configError("float arithmetic applies to lemma31 only");
  if (cfg.candidate != "default" && cfg.suite != "qdeform") throw configError("candidate applies to qdeform only");
  if (cfg.control != "none") {
    for (const auto& [suite, allowed] : controlTable()) {
      if (suite != cfg.suite) continue;
      if (std::find(allowed.begin(), allowed.end(), cfg.control) == allowed.end()) {
        throw configError("control '" + cfg.control + "' is not available for " + cfg.suite);
      }
    }
  }
}

std::vector<std::pair<std::string, std::string>> configEcho(const SuiteConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> e{
      {"suite", cfg.suite},
      {"p", std::to_string(cfg.sig.p)},
      {"q", std::to_string(cfg.sig.q)},
      {"sign", signName(cfg.sign)},
      {"seed", std::to_string(cfg.seed)},
      {"max-terms", std::to_string(cfg.maxTerms)},
      {"control", cfg.control},
  };
  auto add = [&](const std::string& k, const std::string& v) { e.emplace_back(k, v); };
  if (cfg.suite == "theorem41" || cfg.suite == "quartic") add("convention", cfg.convention);
  if (cfg.suite == "lemma31") {
    add("jet-order", std::to_string(cfg.jetOrder));
    add("y-value", cfg.yValue.get_str());
    add("tests", std::to_string(cfg.tests));
    add("degree", std::to_string(cfg.degree));
    add("jets", std::to_string(cfg.jets));
    add("arithmetic", cfg.arithmetic);
    if (cfg.arithmetic == "float") add("tolerance", "1e-20 relative");
  }
  if (cfg.suite == "qdeform") {
    add("window", std::to_string(cfg.window));
    add("y-value", cfg.yValue.get_str());
    add("q-value", cfg.qValues.empty() ? "formal" : joinRationals(cfg.qValues));
    add("candidate", cfg.candidate);
  }
  if (cfg.suite == "spectra") {
    std::string pts;
    for (const auto& p : cfg.points) pts += (pts.empty() ? "" : ",") + p;
    add("point", pts.empty() ? "defaults" : pts);
  }
  return e;
}

int exitCodeFor(const VerificationReport& report) { return report.allPassed() ? 0 : 1; }

SuiteOutcome runSuite(const SuiteConfig& cfg) {
  SuiteOutcome out;
  out.report.suite = cfg.suite;
  try {
    validate(cfg);
    out.report.config = configEcho(cfg);
    VerificationReport body;
    try {
      if (cfg.suite == "closure") body = runClosure(cfg);
      if (cfg.suite == "theorem41") body = runTheorem41(cfg);
      if (cfg.suite == "quartic") body = runQuartic(cfg);
      if (cfg.suite == "lemma31") body = runLemma31(cfg);
      if (cfg.suite == "qdeform") body = runQdeform(cfg);
      if (cfg.suite == "fundamental") body = runFundamental(cfg);
      if (cfg.suite == "spectra") body = runSpectra(cfg);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Config) throw;
      CheckResult c;
      c.name = cfg.suite + ".run";
      c.status = Status::Error;
      c.residual = kindName(e.kind());
      c.notes.push_back(e.what());
      body = VerificationReport{};
      body.add(std::move(c));
    }
    out.report.merge(body);
    out.exitCode = exitCodeFor(out.report);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Config) throw;
    out.exitCode = 2;
    out.configError = e.what();
  }
  return out;
}

std::string renderReport(const SuiteOutcome& outcome, const SuiteConfig& cfg) {
  return outcome.report.toJson(cfg.timings);
}

}  // namespace liefield
