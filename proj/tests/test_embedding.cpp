#include <doctest.h>

#include "liefield/embedding/embedding.hpp"
#include "liefield/error.hpp"

using namespace liefield;

namespace {

GaussianRational frac(long a, long b) { return GaussianRational::fraction(a, b); }
const GaussianRational kI = GaussianRational::i();

NCPolynomial W(EmbeddingContext& ctx) { return buildCasimirs(*ctx.alg, ctx.poincare, {"W"}, false).get("W"); }

// Theorem41 construction costs a few seconds; share the two readings.
struct Thm {
  EmbeddingContext ctx = buildDeformed({0, 3}, Sign::Plus);
  Theorem41 printed{ctx};
  Theorem41 corrected{ctx, [] {
                        Theorem41Options o;
                        o.correctedPrimes = true;
                        return o;
                      }()};
};

Thm& thm() {
  static Thm t;
  return t;
}

}  // namespace

TEST_CASE("M_0 for Poincare(0,1)") {
  auto ctx = buildDeformed({0, 1}, Sign::Plus);
  auto& alg = *ctx.alg;
  auto l01 = ctx.poincare.L(0, 1);
  auto p0 = ctx.poincare.P(0);
  auto p1 = ctx.poincare.P(1);
  CHECK(ctx.Q2 == alg.multiply(l01, l01));
  auto expect = (alg.multiply(l01, p1).scaled(2) - p0).scaled(kI) + alg.multiply(ctx.Y(), p0).scaled(2);
  CHECK(ctx.M[0] == expect);
  CHECK(alg.multiply(ctx.Y(), ctx.Y()) == ctx.Psq);
}

TEST_CASE("deformed brackets close") {
  struct Case {
    Signature sig;
    Sign sign;
  };
  for (auto c : {Case{{0, 1}, Sign::Plus}, Case{{0, 1}, Sign::Minus}, Case{{0, 2}, Sign::Plus},
                 Case{{0, 2}, Sign::Minus}, Case{{0, 3}, Sign::Plus}, Case{{0, 3}, Sign::Minus},
                 Case{{1, 2}, Sign::Plus}}) {
    CAPTURE(c.sig.toString());
    CAPTURE(signName(c.sign));
    auto ctx = buildDeformed(c.sig, c.sign);
    auto rep = verifyClosure(ctx);
    CHECK(rep.allPassed());
    CHECK(rep.checks.size() == 2);
  }
}

TEST_CASE("closure negative controls") {
  DeformOptions scaled;
  scaled.squareScale = 2;
  auto a = buildDeformed({0, 2}, Sign::Plus, scaled);
  auto ra = verifyClosure(a);
  CHECK_FALSE(ra.allPassed());
  CHECK(ra.find("closure.MM")->status == Status::Fail);

  DeformOptions flipped;
  flipped.flipSquareSign = true;
  auto b = buildDeformed({0, 3}, Sign::Plus, flipped);
  CHECK_FALSE(verifyClosure(b).allPassed());
}

TEST_CASE("quadratic Casimir of the deformed algebra") {
  auto c01 = buildDeformed({0, 1}, Sign::Plus);
  auto r01 = computeCasimirC2(c01);
  CHECK(r01.residual.isZero());
  CHECK(analyzeC2Residual(c01, r01).allPassed());

  for (auto sign : {Sign::Plus, Sign::Minus}) {
    auto ctx = buildDeformed({0, 3}, sign);
    auto c2 = computeCasimirC2(ctx);
    // spin enters only through W
    CHECK(c2.residual == W(ctx).scaled(-4 * signValue(sign)));
    auto rep = analyzeC2Residual(ctx, c2);
    CHECK(rep.allPassed());
    CHECK(rep.find("c2.residual_in_P2_W_span")->status == Status::Pass);
  }

  auto c12 = buildDeformed({1, 2}, Sign::Plus);
  auto r12 = computeCasimirC2(c12);
  CHECK_FALSE(r12.residual.isZero());
  CHECK(analyzeC2Residual(c12, r12).allPassed());
}

TEST_CASE("Lemma elements for n = 4 and n = 3") {
  auto ctx = buildDeformed({0, 3}, Sign::Plus);
  auto& alg = *ctx.alg;
  auto Y = ctx.Y();
  auto Yk = [&](int k) { return alg.power(Y, k); };
  const auto& Q2 = ctx.Q2;
  NCPolynomial one(1);
  auto D = buildLemma31Elements(ctx).D;
  auto expect = (Q2 + one.scaled(frac(3, 4))).scaled(frac(1, 4)) +
                alg.multiply(Y, Q2 + one.scaled(frac(1, 2))).scaled(kI) -
                alg.multiply(Yk(2), Q2 - one.scaled(frac(1, 2))) + Yk(3).scaled(kI * 2) - Yk(4);
  CHECK(D == expect);

  // Y-free part after splitting off odd powers of Y
  auto odd = alg.multiply(Y, Q2 + one.scaled(frac(1, 2))).scaled(kI) + Yk(3).scaled(kI * 2);
  auto evenPart = D - odd;
  CHECK(evenPart == (Q2 + one.scaled(frac(3, 4))).scaled(frac(1, 4)) - alg.multiply(ctx.Psq, Q2 - one.scaled(frac(1, 2))) -
                        alg.multiply(ctx.Psq, ctx.Psq));

  auto c3 = buildDeformed({0, 2}, Sign::Plus);
  auto& a3 = *c3.alg;
  auto D3 = buildLemma31Elements(c3).D;
  auto Y3 = c3.Y();
  CHECK(D3 == a3.power(Y3, 3).scaled(kI) - a3.multiply(a3.power(Y3, 2), c3.Q2) - a3.power(Y3, 4));

  CHECK(buildLemma31Elements(ctx, 5).D != D);
}

TEST_CASE("so(2,3) Casimir images") {
  auto& t = thm();
  const auto& f = t.printed.field();
  const auto& im = t.printed.images();
  auto w = f.make(W(t.ctx));
  auto y2 = f.yPow(2);
  CHECK((im.C2 + y2 + f.constant(frac(9, 4)) + w * f.yPow(-2)).isZero());
  CHECK((im.C4 - w - w.scaled(frac(1, 4)) * f.yPow(-2)).isZero());

  // the catalog substitution agrees with the direct contraction
  auto c2 = computeCasimirC2(t.ctx);
  CHECK(f.numeratorOver(im.C2, 2).scaled(4) == c2.cleared);
}

TEST_CASE("printed D, A formulas have no passing convention") {
  auto& t = thm();
  for (const auto& c : Convention::all()) {
    CAPTURE(c.toString());
    CHECK_FALSE(t.printed.residual(c, 0).isZero());
  }
  CHECK_FALSE(t.printed.quartic().isZero());
}

TEST_CASE("D, A formulas with the corrected C' reading") {
  auto& t = thm();
  std::vector<Convention> passing;
  for (const auto& c : Convention::all()) {
    bool ok = true;
    for (int mu = 0; mu < 4 && ok; ++mu) ok = t.corrected.residual(c, mu).isZero();
    if (ok) passing.push_back(c);
  }
  REQUIRE(passing.size() == 1);
  CHECK(passing.front() == Convention{1, true, 1});
  CHECK(passing.front().toString() == "eps=+1,q4=root,y=+1");
  CHECK(t.corrected.quartic().isZero());
  for (int mu = 0; mu < 4; ++mu) CHECK_FALSE(t.corrected.residualOtherSign(passing.front(), mu).isZero());
}

TEST_CASE("D, A reconstruction negative control") {
  auto& t = thm();
  Theorem41Options o;
  o.correctedPrimes = true;
  o.flipC2prime = true;
  Theorem41 broken(t.ctx, o);
  Convention c{1, true, 1};
  CHECK_FALSE(broken.residual(c, 0).isZero());
  CHECK_FALSE(broken.quartic().isZero());
}

TEST_CASE("quartic report") {
  auto& t = thm();
  Theorem41Options o;
  o.correctedPrimes = true;
  auto rep = verifyQuartic(t.ctx, o);
  CHECK(rep.allPassed());
  auto printed = verifyQuartic(t.ctx);
  CHECK(printed.find("quartic.relation")->status == Status::Fail);
  CHECK(printed.find("quartic.spin_zero_factorization")->status == Status::Pass);
}

TEST_CASE("convention parsing") {
  auto c = Convention::parse("eps=-1,q4=root,y=+1");
  REQUIRE(c);
  CHECK(*c == Convention{-1, true, 1});
  CHECK(Convention::parse("+,square,-") == Convention{1, false, -1});
  CHECK_FALSE(Convention::parse("eps=2,q4=root,y=1"));
  CHECK_FALSE(Convention::parse("+,root"));
  CHECK(Convention::all().size() == 8);
  for (const auto& x : Convention::all()) CHECK(Convention::parse(x.toString()) == x);
}

TEST_CASE("Theorem41 needs the (0,3) context") {
  auto ctx = buildDeformed({0, 2}, Sign::Plus);
  CHECK_THROWS_AS(Theorem41{ctx}, Error);
}
