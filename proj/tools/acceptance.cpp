// One PASS/FAIL line per acceptance criterion. Exit status 0 only when every
// criterion passes.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "liefield/algebra/substitute.hpp"
#include "liefield/driver/driver.hpp"
#include "liefield/driver/spectra.hpp"
#include "liefield/error.hpp"
#include "liefield/lie/fundamental.hpp"
#include "liefield/qdeform/qdeform.hpp"
#include "liefield/shell/shell.hpp"

using namespace liefield;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitBrackets = 5;
constexpr double kLimitJacobi = 10;
constexpr double kLimitClosureEach = 300;
constexpr double kLimitTheorem41 = 1800;
constexpr double kLimitQuartic = 600;
constexpr double kLimitLemma = 300;
constexpr double kLimitAgreement = 120;
constexpr double kLimitRoundTrip = 60;
constexpr double kLimitYsq = 60;
constexpr double kLimitSpectra = 1;
constexpr double kLimitDeterminismOverhead = 60;

constexpr std::size_t kTermGuard = 50'000'000;
constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = false;
  std::string detail;
  /// Overrides the measured time when the limit applies per item.
  bool timeChecked = false;
};

struct Config3 {
  Signature sig;
  Sign sign;
};

std::string label(const Config3& c) {
  return "(" + std::to_string(c.sig.p) + "," + std::to_string(c.sig.q) + "," + (c.sign == Sign::Plus ? "+" : "-") + ")";
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EngineOptions guarded() {
  EngineOptions e;
  e.maxTerms = kTermGuard;
  return e;
}

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<Verdict()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("error: ") + e.what();
  }
  double secs = since(t0);
  if (!v.timeChecked && secs > limit) {
    v.pass = false;
    v.detail += (v.detail.empty() ? "" : "; ") + std::string("over time limit");
  }
  if (!v.pass) ++failures;
  std::ostringstream line;
  line << (v.pass ? "PASS" : "FAIL") << " " << n << " " << title << " [" << std::fixed << std::setprecision(2) << secs
       << "s / " << std::setprecision(0) << limit << "s]";
  if (!v.detail.empty()) line << " " << v.detail;
  std::cout << line.str() << std::endl;
}

const std::vector<Signature> kPresets{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
const std::vector<Config3> kShellConfigs{{{0, 2}, Sign::Minus}, {{0, 3}, Sign::Plus}, {{0, 3}, Sign::Minus},
                                        {{1, 3}, Sign::Plus}};

bool namesPass(const VerificationReport& r, const std::function<bool(const std::string&)>& select,
               std::size_t& seen) {
  bool ok = true;
  for (const auto& c : r.checks) {
    if (!select(c.name)) continue;
    ++seen;
    ok = ok && c.status == Status::Pass;
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "structure constants agree with matrix commutators", kLimitBrackets, [] {
    Verdict v{true, ""};
    std::size_t checks = 0;
    for (const auto& sig : kPresets) {
      auto r = verifyMatrixBrackets(sig);
      checks += r.checks.size();
      if (!r.allPassed()) {
        v.pass = false;
        v.detail += "mismatch at " + sig.toString() + " ";
      }
    }
    if (v.pass) v.detail = std::to_string(checks) + " bracket checks";
    return v;
  });

  criterion(2, "Jacobi identity on every preset", kLimitJacobi, [] {
    Verdict v{true, ""};
    std::vector<std::pair<std::string, LieModel>> models;
    for (const auto& sig : kPresets) models.emplace_back("so" + sig.toString(), buildSo(sig));
    for (const auto& sig : {Signature{0, 3}, Signature{1, 3}}) {
      models.emplace_back("poincare" + sig.toString(), buildPoincare(sig));
    }
    for (auto& [name, m] : models) {
      Algebra alg(m.presentation, guarded());
      if (!checkJacobi(alg).allPassed()) {
        v.pass = false;
        v.detail += name + " fails ";
      }
    }
    if (v.pass) v.detail = std::to_string(models.size()) + " algebras";
    return v;
  });

  criterion(3, "deformation closure is identically zero", kLimitClosureEach, [] {
    Verdict v{true, ""};
    v.timeChecked = true;
    std::vector<Config3> cases{{{0, 1}, Sign::Plus}, {{0, 1}, Sign::Minus}, {{0, 2}, Sign::Plus},
                               {{0, 2}, Sign::Minus}, {{0, 3}, Sign::Plus}, {{0, 3}, Sign::Minus},
                               {{1, 2}, Sign::Plus}};
    double worst = 0;
    for (const auto& c : cases) {
      auto t0 = std::chrono::steady_clock::now();
      DeformOptions d;
      d.engine = guarded();
      auto ctx = buildDeformed(c.sig, c.sign, d);
      bool ok = verifyClosure(ctx).allPassed();
      double secs = since(t0);
      worst = std::max(worst, secs);
      if (!ok || secs > kLimitClosureEach) {
        v.pass = false;
        v.detail += label(c) + (ok ? " over time " : " nonzero ");
      }
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << "slowest case " << worst << "s";
    v.detail += (v.detail.empty() ? "" : "; ") + os.str();
    return v;
  });

  DeformOptions d03;
  d03.engine = guarded();
  auto ctx03 = std::make_shared<EmbeddingContext>(buildDeformed({0, 3}, Sign::Plus, d03));

  criterion(4, "exactly one convention zeroes the four cleared residuals", kLimitTheorem41, [&] {
    auto printed = verifyTheorem41(*ctx03);
    Theorem41Options opt;
    opt.correctedPrimes = true;
    auto corrected = verifyTheorem41(*ctx03, {}, opt);
    Verdict v;
    v.pass = printed.passing.size() == 1;
    std::string conv = v.pass ? printed.passing.front().toString() : "";
    v.detail = "printed reading: " + std::to_string(printed.passing.size()) + " of 8 conventions pass" +
               (v.pass ? " (" + conv + ")" : "") + "; corrected primes: " +
               std::to_string(corrected.passing.size()) + " pass" +
               (corrected.passing.size() == 1 ? " (" + corrected.passing.front().toString() + ")" : "");
    return v;
  });

  criterion(5, "quartic relation and its spin-zero factorization", kLimitQuartic, [&] {
    auto printed = verifyQuartic(*ctx03);
    Theorem41Options opt;
    opt.correctedPrimes = true;
    auto corrected = verifyQuartic(*ctx03, opt);
    auto status = [](const VerificationReport& r, const std::string& name) {
      const auto* c = r.find(name);
      return c ? std::string(statusName(c->status)) + " (" + c->residual + " terms)" : std::string("missing");
    };
    Verdict v;
    v.pass = printed.allPassed();
    v.detail = "printed reading: relation " + status(printed, "quartic.relation") + ", factorization " +
               status(printed, "quartic.spin_zero_factorization") + "; corrected primes: relation " +
               status(corrected, "quartic.relation") + ", factorization " +
               status(corrected, "quartic.spin_zero_factorization");
    return v;
  });

  criterion(6, "translation-Laplacian condition and lemma relation on polynomial tests", kLimitLemma, [] {
    Verdict v{true, ""};
    std::size_t tests = 0;
    for (const auto& c : kShellConfigs) {
      ShellConfig sc;
      sc.sig = c.sig;
      sc.sign = c.sign;
      ExactShell r(sc);
      DeformOptions d;
      d.engine = guarded();
      auto ctx = buildDeformed(c.sig, c.sign, d);
      auto polys = polynomialTests(r, 3, 4, kSeed);
      tests += polys.size();
      bool ok = verifyCondition32(r, polys).allPassed() &&
                verifyLemma31Numeric(r, ctx, buildLemma31Elements(ctx), polys).allPassed();
      if (!ok) {
        v.pass = false;
        v.detail += label(c) + " nonzero ";
      }
    }
    if (v.pass) v.detail = std::to_string(tests) + " degree-4 tests, exact";
    return v;
  });

  criterion(7, "engine zeros annihilate seeded random jets; controls fail in both", kLimitAgreement, [] {
    Verdict v{true, ""};
    for (const auto& c : kShellConfigs) {
      ShellConfig sc;
      sc.sig = c.sig;
      sc.sign = c.sign;
      ExactShell r(sc);
      DeformOptions d;
      d.engine = guarded();
      auto ctx = buildDeformed(c.sig, c.sign, d);
      auto jets = randomJetTests(r, 10, kSeed);
      if (!symbolicNumericAgreement(r, ctx, jets, kSeed).allPassed()) {
        v.pass = false;
        v.detail += label(c) + " disagrees ";
      }
    }
    if (v.pass) v.detail = "10 jets per configuration";
    return v;
  });

  QdeformConfig qc;
  qc.qValues = {2, mpq_class(3, 2), 5};
  std::shared_ptr<VerificationReport> qrep;

  criterion(8, "q round trip on the interior window and classical limits", kLimitRoundTrip, [&] {
    qrep = std::make_shared<VerificationReport>(verifyQdeform(qc));
    std::size_t seen = 0;
    bool ok = namesPass(
        *qrep,
        [](const std::string& n) {
          return n.find(".roundtrip.") != std::string::npos || n.rfind("classical_limit.", 0) == 0;
        },
        seen);
    Verdict v;
    v.pass = ok && seen >= 2 * 5 + 5;
    v.detail = std::to_string(seen) + " checks: formal, classical and q = 2, 3/2, 5";
    return v;
  });

  criterion(9, "Casimir candidate equals Yval^2 - 1/4 on the interior", kLimitYsq, [&] {
    if (!qrep) qrep = std::make_shared<VerificationReport>(verifyQdeform(qc));
    std::size_t seen = 0;
    bool ok = namesPass(
        *qrep, [](const std::string& n) { return n.find("ysq.default") != std::string::npos; }, seen);
    Verdict v;
    v.pass = ok && seen >= 5;
    v.detail = std::to_string(seen) + " fields, candidate E F + [(H-1)/2]_q^2 - 1/4";
    return v;
  });

  criterion(10, "spectra arithmetic and the tachyonic chain", kLimitSpectra, [] {
    SpectralPoint pt;
    pt.s = GaussianRational::imag(2);
    auto hs = spectralSignature({0, 3}, Sign::Plus);
    pt = tachyonMass(spectrumEigenvalue(hs.p, hs.q, pt), {0, 3}, Sign::Plus);
    bool chain = pt.C2eig == mpq_class(-25, 4) && *pt.Ysq == 4 && *pt.Psq == 4 && *pt.massSq == -4 && pt.tachyonic;
    auto rejects = [&](Series series) {
      SpectralPoint z;
      z.series = series;
      try {
        tachyonMass(spectrumEigenvalue(hs.p, hs.q, z), {0, 3}, Sign::Plus);
      } catch (const Error& e) {
        return std::string(e.what()).find("Y not strictly positive") != std::string::npos;
      }
      return false;
    };
    Verdict v;
    bool r0 = rejects(Series::Continuous);
    bool rd = rejects(Series::Discrete);
    v.pass = chain && r0 && rd;
    v.detail = std::string("chain ") + (chain ? "ok" : "wrong") + ", s=0 " + (r0 ? "rejected" : "accepted") +
               ", discrete s=0 " + (rd ? "rejected" : "accepted");
    return v;
  });

  criterion(11, "byte-identical reports on repeat, with and without the cache", kLimitDeterminismOverhead, [] {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("liefield-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    std::vector<SuiteConfig> configs;
    auto make = [](const std::string& suite, Signature sig, Sign sign) {
      SuiteConfig c;
      c.suite = suite;
      c.sig = sig;
      c.sign = sign;
      c.seed = kSeed;
      return c;
    };
    configs.push_back(make("closure", {0, 2}, Sign::Plus));
    configs.push_back(make("lemma31", {0, 2}, Sign::Minus));
    configs.push_back(make("fundamental", {1, 2}, Sign::Plus));
    configs.push_back(make("spectra", {0, 3}, Sign::Plus));
    auto q = make("qdeform", {0, 3}, Sign::Plus);
    q.qValues = {2};
    configs.push_back(q);
    Verdict v{true, ""};
    for (auto cfg : configs) {
      auto plain = renderReport(runSuite(cfg), cfg);
      auto again = renderReport(runSuite(cfg), cfg);
      cfg.cacheDir = dir.string();
      auto cold = renderReport(runSuite(cfg), cfg);
      auto warm = renderReport(runSuite(cfg), cfg);
      if (plain != again || plain != cold || plain != warm) {
        v.pass = false;
        v.detail += cfg.suite + " differs ";
      }
    }
    std::size_t entries = 0;
    if (fs::exists(dir)) {
      for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
    }
    fs::remove_all(dir);
    if (entries == 0) {
      v.pass = false;
      v.detail += "cache never written";
    }
    if (v.pass) v.detail = std::to_string(configs.size()) + " suites x 4 runs, " + std::to_string(entries) + " cache entries";
    return v;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
