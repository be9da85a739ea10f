#include <doctest.h>

#include <random>

#include "liefield/error.hpp"
#include "liefield/shell/shell.hpp"

using namespace liefield;

namespace {

ExactShell shell(Signature sig, Sign sign, int order = 6) {
  ShellConfig c;
  c.sig = sig;
  c.sign = sign;
  c.order = order;
  return ExactShell(c);
}

ExactJet randomPoly(std::mt19937_64& rng, const std::shared_ptr<const JetSpace>& sp, int vars) {
  std::uniform_int_distribution<int> c(-4, 4);
  ExactJet f = ExactJet::constant(sp, c(rng));
  for (int t = 0; t < 4; ++t) {
    ExactJet m = ExactJet::constant(sp, c(rng));
    for (int v = 0; v < vars; ++v) {
      int e = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int k = 0; k < e; ++k) m = m * ExactJet::variable(sp, v, mpq_class(v + 1, 2));
    }
    f += m;
  }
  return f;
}

}  // namespace

TEST_CASE("jet product rule and square root") {
  auto sp = JetSpace::get(3, 6);
  std::mt19937_64 rng(1);
  for (int it = 0; it < 20; ++it) {
    auto f = randomPoly(rng, sp, 3);
    auto g = randomPoly(rng, sp, 3);
    for (int v = 0; v < 3; ++v) {
      auto lhs = (f * g).derivative(v);
      auto rhs = f.derivative(v) * g + f * g.derivative(v);
      CHECK((lhs - rhs).isZero());
    }
  }
  // (4 + x)^2 expanded, then the root recovered exactly
  auto x = ExactJet::variable(sp, 0, 4);
  auto y = ExactJet::variable(sp, 1, 0);
  auto s = x * x + y * x;
  auto r = s.sqrt();
  CHECK(((r * r) - s).isZero());
  CHECK(r[0] == 4);
  CHECK_THROWS_AS(ExactJet::constant(sp, 2).sqrt(), Error);
  CHECK_THROWS_AS(ExactJet::constant(sp, -1).sqrt(), Error);
}

TEST_CASE("derivative lowers the valid order") {
  auto sp = JetSpace::get(2, 2);
  auto x = ExactJet::variable(sp, 0, 1);
  auto d = x.derivative(0);
  CHECK(d.valid() == 1);
  auto dd = d.derivative(1);
  CHECK(dd.valid() == 0);
  CHECK(dd.isZero());
  CHECK_THROWS_AS(dd.derivative(0), Error);
}

TEST_CASE("shell points satisfy the shell relation") {
  for (auto sign : {Sign::Plus, Sign::Minus}) {
    for (Signature sig : {Signature{0, 2}, Signature{0, 3}, Signature{1, 3}}) {
      auto r = shell(sig, sign);
      std::mt19937_64 rng(9);
      for (int k = 0; k < 5; ++k) {
        auto a = r.samplePoint(rng);
        auto at = r.point(a);
        mpq_class p2 = at->p0 * at->p0;
        mpq_class spatial2 = 0;
        for (int j = 1; j <= sig.p + sig.q; ++j) {
          const auto& v = a[static_cast<std::size_t>(j - 1)];
          p2 += v * v * sig.e(j);
          spatial2 += v * v;
        }
        CHECK(p2 == r.shellValue());
        if (sign == Sign::Minus) CHECK(spatial2 >= 4 * r.config().Yval * r.config().Yval);
        // the root jet squares back to the shell
        auto w = at->coord[0];
        auto arg = ExactJet::constant(w.spacePtr(), r.shellValue());
        for (int j = 1; j <= sig.p + sig.q; ++j) {
          const auto& c = at->coord[static_cast<std::size_t>(j)];
          arg -= (c * c).scaled(sig.e(j));
        }
        CHECK(((w * w) - arg).isZero());
      }
    }
  }
}

TEST_CASE("generator actions") {
  auto r = shell({0, 3}, Sign::Plus);
  CHECK(r.orbitalSign() == 1);
  std::mt19937_64 rng(2);
  auto at = r.point(r.samplePoint(rng));
  auto f = r.randomPolynomial(at, rng, 3);
  const auto& m = r.model();
  auto p1f = r.applyWord(m.P(1), f);
  CHECK((p1f.re - at->coord[1] * f.re).isZero());

  ShellFunction<mpq_class> p1{at, at->coord[1], ExactJet(at->coord[1].spacePtr())};
  auto l12p1 = r.applyWord(m.L(1, 2), p1);
  CHECK((l12p1.re + at->coord[2]).isZero());

  auto P1 = static_cast<Symbol>(m.presentation->require("P1"));
  auto P2 = static_cast<Symbol>(m.presentation->require("P2"));
  CHECK(r.applyRaw({{1, {P1, P2}}, {-1, {P2, P1}}}, f).isZero());
}

TEST_CASE("realized translation brackets on monomials") {
  for (auto sig : {Signature{0, 2}, Signature{1, 2}}) {
    auto r = shell(sig, Sign::Plus, 4);
    std::mt19937_64 rng(4);
    auto at = r.point(r.samplePoint(rng));
    const auto& m = r.model();
    const auto& pres = *m.presentation;
    auto sp = at->coord[0].spacePtr();
    const int n = sig.n();
    for (std::size_t idx = 0; idx < sp->size(); ++idx) {
      if (sp->degree(idx) > r.config().order - 1) continue;
      ExactJet mono(sp);
      mono[idx] = 1;
      ShellFunction<mpq_class> f{at, mono, ExactJet(sp)};
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            auto l = static_cast<Symbol>(m.lId(i, j));
            auto p = static_cast<Symbol>(pres.require(translationName(k)));
            auto lhs = r.applyRaw({{1, {l, p}}, {-1, {p, l}}}, f);
            NCPolynomial expect = m.P(i).scaled(-(j == k ? m.g(j) : 0)) + m.P(j).scaled(i == k ? m.g(i) : 0);
            auto rhs = r.applyWord(expect, f);
            CHECK((lhs.re - rhs.re).isZero());
          }
        }
      }
    }
  }
}

TEST_CASE("translation-Laplacian condition holds for the orbital realization") {
  for (auto sig : {Signature{0, 3}, Signature{1, 3}}) {
    auto r = shell(sig, Sign::Plus);
    auto tests = polynomialTests(r, 4, 4, 17);
    CHECK(verifyCondition32(r, tests).allPassed());
  }
  ShellConfig bad;
  bad.sig = {0, 3};
  bad.spinShift = 1;
  ExactShell rb(bad);
  CHECK_FALSE(verifyCondition32(rb, polynomialTests(rb, 3, 4, 17)).allPassed());
}

TEST_CASE("Lemma relation on polynomial tests") {
  struct Case {
    Signature sig;
    Sign sign;
  };
  for (auto c : {Case{{0, 2}, Sign::Minus}, Case{{0, 3}, Sign::Plus}, Case{{0, 3}, Sign::Minus},
                 Case{{1, 3}, Sign::Plus}}) {
    CAPTURE(c.sig.toString());
    auto r = shell(c.sig, c.sign);
    auto ctx = buildDeformed(c.sig, c.sign);
    auto tests = polynomialTests(r, 3, 4, 23);
    CHECK(verifyLemma31Numeric(r, ctx, buildLemma31Elements(ctx), tests).allPassed());
  }
  auto r = shell({0, 3}, Sign::Plus);
  auto ctx = buildDeformed({0, 3}, Sign::Plus);
  auto tests = polynomialTests(r, 2, 4, 23);
  CHECK_FALSE(verifyLemma31Numeric(r, ctx, buildLemma31Elements(ctx, 5), tests).allPassed());
  auto other = buildDeformed({0, 3}, Sign::Minus);
  CHECK_THROWS_AS(verifyLemma31Numeric(r, other, buildLemma31Elements(other), tests), Error);
}

TEST_CASE("numeric closure agrees with the engine") {
  auto r = shell({0, 3}, Sign::Plus);
  auto ctx = buildDeformed({0, 3}, Sign::Plus);
  auto tests = randomJetTests(r, 10, 31);
  CHECK(crossCheckClosure(r, ctx, tests).allPassed());
  CHECK(verifyClosure(ctx).allPassed());

  DeformOptions flipped;
  flipped.flipSquareSign = true;
  auto bad = buildDeformed({0, 3}, Sign::Plus, flipped);
  auto numeric = crossCheckClosure(r, bad, tests);
  auto symbolic = verifyClosure(bad);
  CHECK(numeric.find("closure.MM")->status == Status::Fail);
  CHECK(symbolic.find("closure.MM")->status == Status::Fail);
}

TEST_CASE("symbolic zero implies numeric zero") {
  for (auto sign : {Sign::Plus, Sign::Minus}) {
    auto r = shell({0, 3}, sign);
    auto ctx = buildDeformed({0, 3}, sign);
    auto tests = randomJetTests(r, 10, 41);
    auto rep = symbolicNumericAgreement(r, ctx, tests, 41);
    CHECK(rep.allPassed());
    CHECK(rep.checks.size() == 4);
  }
}

TEST_CASE("deformed translation-Laplacian condition is measured") {
  auto r = shell({0, 3}, Sign::Plus);
  auto ctx = buildDeformed({0, 3}, Sign::Plus);
  auto rep = measureCondition36(r, ctx, polynomialTests(r, 2, 3, 5));
  bool found = false;
  for (const auto& [k, v] : rep.findings) {
    if (k == "condition36.vanishes") {
      found = true;
      CHECK(v == "yes");
    }
  }
  CHECK(found);
  CHECK(rep.checks.empty());
}

TEST_CASE("insufficient jet order is reported") {
  auto r = shell({0, 2}, Sign::Plus, 1);
  auto ctx = buildDeformed({0, 2}, Sign::Plus);
  auto tests = polynomialTests(r, 1, 2, 3);
  try {
    r.applyWord(ctx.Q2, tests[0]);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InsufficientOrder);
    CHECK(std::string(e.what()).find(">= 2") != std::string::npos);
  }
}

TEST_CASE("tests are reproducible from the seed") {
  auto r = shell({0, 2}, Sign::Minus);
  auto a = randomJetTests(r, 3, 77);
  auto b = randomJetTests(r, 3, 77);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].at->spatial == b[k].at->spatial);
    CHECK((a[k].re - b[k].re).isZero());
  }
}

TEST_CASE("float mode") {
  ShellConfig c;
  c.sig = {0, 3};
  FloatShell r(c);
  auto ctx = buildDeformed({0, 3}, Sign::Plus);
  auto tests = polynomialTests(r, 2, 4, 23);
  auto rep = verifyLemma31Numeric(r, ctx, buildLemma31Elements(ctx), tests);
  CHECK(rep.allPassed());
  CHECK_FALSE(verifyLemma31Numeric(r, ctx, buildLemma31Elements(ctx, 5), tests).allPassed());
}
