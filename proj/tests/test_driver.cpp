#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "liefield/algebra/cache.hpp"
#include "liefield/driver/driver.hpp"
#include "liefield/driver/spectra.hpp"
#include "liefield/error.hpp"

using namespace liefield;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("liefield-test-" + std::to_string(::getpid()) + "-" + name);
  std::filesystem::remove_all(p);
  return p;
}

SpectralPoint point(Series s, GaussianRational v) {
  SpectralPoint pt;
  pt.series = s;
  pt.s = std::move(v);
  return pt;
}

}  // namespace

TEST_CASE("spectrum eigenvalues") {
  auto d = spectrumEigenvalue(1, 3, point(Series::Discrete, 1));
  CHECK(d.shifted == mpq_class(25, 4));
  CHECK(d.C2eig == 4);
  auto c = spectrumEigenvalue(1, 3, point(Series::Continuous, GaussianRational::imag(2)));
  CHECK(c.shifted == -4);
  CHECK(c.C2eig == mpq_class(-25, 4));
  // lowest admissible discrete s is the first integer above -(p+q-1)/2
  CHECK_NOTHROW(spectrumEigenvalue(1, 3, point(Series::Discrete, -1)));
  CHECK_THROWS_AS(spectrumEigenvalue(1, 3, point(Series::Discrete, -2)), Error);
  CHECK_THROWS_AS(spectrumEigenvalue(1, 3, point(Series::Discrete, GaussianRational::fraction(1, 2))), Error);
  CHECK_THROWS_AS(spectrumEigenvalue(1, 3, point(Series::Continuous, 1)), Error);
  CHECK_THROWS_AS(spectrumEigenvalue(1, 1, point(Series::Discrete, 0)), Error);
  CHECK_NOTHROW(spectrumEigenvalue(1, 1, point(Series::Continuous, GaussianRational::imag(1))));
}

TEST_CASE("tachyonic chain") {
  auto hs = spectralSignature({0, 3}, Sign::Plus);
  CHECK(hs.p == 1);
  CHECK(hs.q == 3);
  auto pt = tachyonMass(spectrumEigenvalue(hs.p, hs.q, point(Series::Continuous, GaussianRational::imag(2))), {0, 3},
                        Sign::Plus);
  CHECK(*pt.Ysq == 4);
  CHECK(*pt.Psq == 4);
  CHECK(*pt.massSq == -4);
  CHECK(pt.tachyonic);

  auto minus = spectralSignature({0, 3}, Sign::Minus);
  CHECK(minus.q == 4);
  auto m = tachyonMass(spectrumEigenvalue(minus.p, minus.q, point(Series::Continuous, GaussianRational::imag(2))),
                       {0, 3}, Sign::Minus);
  CHECK(*m.Ysq == 4);
  CHECK(*m.Psq == -4);
  CHECK(*m.massSq == 4);
  CHECK_FALSE(m.tachyonic);

  for (auto s : {Series::Continuous, Series::Discrete}) {
    try {
      tachyonMass(spectrumEigenvalue(hs.p, hs.q, point(s, 0)), {0, 3}, Sign::Plus);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("Y not strictly positive") != std::string::npos);
    }
  }
}

TEST_CASE("inequality readings disagree on the continuous series") {
  auto hs = spectralSignature({0, 3}, Sign::Plus);
  auto pt = spectrumEigenvalue(hs.p, hs.q, point(Series::Continuous, GaussianRational::imag(2)));
  auto r = inequalityReadings(pt, {0, 3}, Sign::Plus);
  CHECK(r.value == -4);
  CHECK_FALSE(r.printed);
  CHECK(r.positivity);
}

TEST_CASE("spectral point parsing") {
  CHECK(parseSpectralPoint("continuous:2i").s == GaussianRational::imag(2));
  CHECK(parseSpectralPoint("continuous:-i").s == GaussianRational::imag(-1));
  CHECK(parseSpectralPoint("discrete:3").series == Series::Discrete);
  CHECK_THROWS_AS(parseSpectralPoint("discrete"), Error);
  CHECK_THROWS_AS(parseSpectralPoint("weird:1"), Error);
}

TEST_CASE("settings and config files") {
  SuiteConfig cfg;
  applySetting(cfg, "p", "1");
  applySetting(cfg, "sign", "minus");
  applySetting(cfg, "q-value", "2, 3/2");
  applySetting(cfg, "q-value", "5");
  CHECK(cfg.sig.p == 1);
  CHECK(cfg.sign == Sign::Minus);
  CHECK(cfg.qValues.size() == 3);
  CHECK(cfg.qValues[1] == mpq_class(3, 2));
  applySetting(cfg, "convention", "+,root,+");
  CHECK(cfg.convention == "eps=+1,q4=root,y=+1");
  CHECK_THROWS_AS(applySetting(cfg, "convention", "sideways"), Error);
  CHECK_THROWS_AS(applySetting(cfg, "window", "eight"), Error);
  CHECK_THROWS_AS(applySetting(cfg, "q", "0"), Error);
  CHECK_THROWS_AS(applySetting(cfg, "sign", "up"), Error);
  CHECK_THROWS_AS(applySetting(cfg, "nonsense", "1"), Error);
  CHECK_THROWS_AS(applySetting(cfg, "seed", "-3"), Error);

  auto path = scratch("cfg");
  {
    std::ofstream f(path);
    f << "# a suite definition\n  p = 0  \nq=2\nsign = plus # trailing\n\nq-value = 2\n";
  }
  SuiteConfig fromFile;
  applyConfigFile(fromFile, path.string());
  CHECK(fromFile.sig.q == 2);
  CHECK(fromFile.qValues.size() == 1);
  // flags applied afterwards win; repeatable keys are replaced, not extended
  clearSetting(fromFile, "q-value");
  applySetting(fromFile, "q-value", "5");
  applySetting(fromFile, "q", "3");
  CHECK(fromFile.qValues == std::vector<mpq_class>{5});
  CHECK(fromFile.sig.q == 3);
  {
    std::ofstream f(path);
    f << "p = 0\nwindow\n";
  }
  try {
    applyConfigFile(fromFile, path.string());
    FAIL("expected a configuration error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(applyConfigFile(fromFile, path.string()), Error);
}

TEST_CASE("command names") {
  CHECK(suiteForCommand("verify-closure") == "closure");
  CHECK(suiteForCommand("spectra") == "spectra");
  CHECK_FALSE(suiteForCommand("verify-spectra"));
  CHECK_FALSE(suiteForCommand("closure"));
  CHECK(suiteNames().size() == 7);
}

TEST_CASE("runSuite exit codes") {
  SuiteConfig closure;
  closure.suite = "closure";
  closure.sig = {0, 1};
  auto ok = runSuite(closure);
  CHECK(ok.exitCode == 0);
  CHECK(ok.report.allPassed());
  CHECK(renderReport(ok, closure).find("\"schema\": \"liefield.report/1\"") != std::string::npos);
  CHECK(renderReport(ok, closure).find("\"seed\": \"1\"") != std::string::npos);

  closure.sig = {0, 2};
  closure.control = "flip-square-sign";
  auto bad = runSuite(closure);
  CHECK(bad.exitCode == 1);
  const auto* mm = bad.report.find("closure.MM");
  REQUIRE(mm != nullptr);
  CHECK(mm->status == Status::Fail);
  CHECK(mm->residual != "0");

  SuiteConfig q;
  q.suite = "qdeform";
  auto qd = runSuite(q);
  CHECK(qd.exitCode == 0);
  CHECK(qd.report.find("formal.roundtrip.P1") != nullptr);

  SuiteConfig wrong = closure;
  wrong.control = "lemma-n";
  CHECK(runSuite(wrong).exitCode == 2);
  SuiteConfig thm;
  thm.suite = "theorem41";
  thm.sig = {1, 3};
  auto t = runSuite(thm);
  CHECK(t.exitCode == 2);
  CHECK(t.configError.find("p = 0, q = 3") != std::string::npos);
  SuiteConfig small = q;
  small.window = 3;
  CHECK(runSuite(small).exitCode == 2);
  SuiteConfig unknown;
  unknown.suite = "nothing";
  CHECK(runSuite(unknown).exitCode == 2);

  // a math error inside a suite is an error check, not a configuration error
  SuiteConfig degenerate = q;
  degenerate.yValue = mpq_class(3, 2);
  degenerate.qValues = {1};
  auto dg = runSuite(degenerate);
  CHECK(dg.exitCode == 1);
}

TEST_CASE("reports are byte-identical with and without the cache") {
  auto dir = scratch("cache");
  SuiteConfig cfg;
  cfg.suite = "lemma31";
  cfg.sig = {0, 2};
  cfg.sign = Sign::Minus;
  cfg.seed = 11;
  auto plain = renderReport(runSuite(cfg), cfg);
  CHECK(plain == renderReport(runSuite(cfg), cfg));
  cfg.cacheDir = dir.string();
  auto cold = renderReport(runSuite(cfg), cfg);
  CHECK(std::filesystem::exists(dir));
  CHECK_FALSE(std::filesystem::is_empty(dir));
  auto warm = renderReport(runSuite(cfg), cfg);
  CHECK(cold == plain);
  CHECK(warm == plain);

  // a corrupted entry is a miss, not a wrong answer
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream(e.path(), std::ios::trunc) << "garbage";
  }
  CHECK(renderReport(runSuite(cfg), cfg) == plain);
  std::filesystem::remove_all(dir);

  cfg.seed = 12;
  cfg.cacheDir.clear();
  CHECK(renderReport(runSuite(cfg), cfg) != plain);
}

TEST_CASE("timings are opt-in") {
  SuiteConfig cfg;
  cfg.suite = "spectra";
  auto out = runSuite(cfg);
  CHECK(renderReport(out, cfg).find("duration_s") == std::string::npos);
  cfg.timings = true;
  CHECK(renderReport(out, cfg).find("duration_s") != std::string::npos);
}

TEST_CASE("polynomial store round trip") {
  auto dir = scratch("store");
  PolynomialStore store(dir);
  CHECK_FALSE(store.load("k"));
  auto ctx = buildDeformed({0, 2}, Sign::Plus);
  store.store("Q2|x", ctx.Q2);
  auto back = store.load("Q2|x");
  REQUIRE(back);
  CHECK(*back == ctx.Q2);
  CHECK(parsePolynomial(serializePolynomial(ctx.Psq)) == ctx.Psq);
  CHECK_FALSE(store.load("Q2|y"));
  CHECK_THROWS_AS(parsePolynomial("terms 2\n1 0"), Error);
  std::filesystem::remove_all(dir);
}
