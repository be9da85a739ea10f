#include <doctest.h>

#include "liefield/error.hpp"
#include "liefield/qdeform/qdeform.hpp"

using namespace liefield;

namespace {

RationalFunction qs(int x) { return qNumberFraction(HalfInt::of(x), QBase::SqrtQ); }

}  // namespace

TEST_CASE("numeric q picks the smallest exact field") {
  CHECK(std::holds_alternative<RootQ>(numericField(2)));
  CHECK(std::holds_alternative<RootQ>(numericField(mpq_class(3, 2))));
  CHECK(std::get<RootQ>(numericField(4)).describe().find("t^2 - 2") != std::string::npos);
  CHECK(std::holds_alternative<PointQ>(numericField(16)));
  CHECK(std::get<PointQ>(numericField(1)).classical());
  CHECK_THROWS_AS(numericField(0), Error);
  CHECK_THROWS_AS(numericField(-2), Error);
}

TEST_CASE("banded operators") {
  using Op = BandedOperator<GaussianRational>;
  Op up = Op::shift(4, 1, 1);
  Op down = Op::shift(4, -1, 1);
  Op prod = up * down;
  CHECK(prod.bandwidth() == 2);
  CHECK(prod.effectiveBandwidth() == 0);
  CHECK_FALSE(prod.column(-4).complete);
  CHECK(prod.column(-3).complete);
  CHECK(compareInterior(commutator(up, down), Op(4, 0)).holds());
  Op d = Op::diagonal(4, [](int m) { return m == 0 ? std::nullopt : std::optional(GaussianRational(m)); });
  auto c = compareInterior(d * up, d * up);
  CHECK(c.holds());
  CHECK(c.excluded == std::vector<int>{-1});
}

TEST_CASE("E(2) realization") {
  FormalQ f;
  auto e2 = buildE2Realization(f, 2, 8);
  CHECK(e2.l12 == GaussianRational::i());
  CHECK(e2.hSlope == -2);
  auto rep = verifyE2Relations(f, e2, e2.P1, e2.P2);
  CHECK(rep.allPassed());
  CHECK(rep.checks.size() == 4);
  CHECK_THROWS_AS(buildE2Realization(f, 2, 3), Error);
  CHECK_THROWS_AS(buildE2Realization(f, 0, 8), Error);
}

TEST_CASE("tilde generators have the expected entries") {
  FormalQ f;
  const mpq_class Y = 2;
  auto e2 = buildE2Realization(f, Y, 8);
  auto tl = buildTildeGenerators(f, e2);
  CHECK(tl.L31.effectiveBandwidth() == 1);
  CHECK(tl.L32.effectiveBandwidth() == 1);
  // with [-iL_21] = -m: entry m -> m+s of L~31 is (Y/2)(1 + ([m+s]^2 - [m]^2)/([2] Y))
  for (int m = -6; m <= 6; ++m) {
    for (int s : {-1, 1}) {
      RationalFunction expect =
          RationalFunction(GaussianRational(Y / 2)) *
          (RationalFunction(1) + (qs(m + s) * qs(m + s) - qs(m) * qs(m)) / (qs(2) * RationalFunction(GaussianRational(Y))));
      CHECK(tl.L31.column(m).entries.at(m + s) == expect);
    }
  }
}

TEST_CASE("round trip in every field") {
  auto check = [](const auto& ctx) {
    auto e2 = buildE2Realization(ctx, 2, 8);
    auto tl = buildTildeGenerators(ctx, e2);
    auto rec = reconstructTranslations(ctx, e2, tl);
    CHECK(rec.degenerate == std::vector<int>{0});
    auto c1 = compareInterior(rec.P1, e2.P1);
    auto c2 = compareInterior(rec.P2, e2.P2);
    CHECK(c1.holds());
    CHECK(c2.holds());
    CHECK(c1.excluded == std::vector<int>{-1, 1});
    CHECK(c1.compared.size() == 13);

    ReconstructOptions cont;
    cont.continueZeroWeight = true;
    auto full = reconstructTranslations(ctx, e2, tl, cont);
    CHECK(full.degenerate.empty());
    CHECK(compareInterior(full.P1, e2.P1).excluded.empty());
    CHECK(compareInterior(full.P1, e2.P1).holds());

    ReconstructOptions bad;
    bad.corruptDSign = true;
    auto wrong = reconstructTranslations(ctx, e2, tl, bad);
    CHECK_FALSE(compareInterior(wrong.P1, e2.P1).holds());
    // -P satisfies the same brackets
    CHECK(verifyE2Relations(ctx, e2, wrong.P1, wrong.P2).allPassed());
    ReconstructOptions inner;
    inner.corruptDInner = true;
    auto rescaled = reconstructTranslations(ctx, e2, tl, inner);
    CHECK_FALSE(compareInterior(rescaled.P1, e2.P1).holds());
    if constexpr (!std::is_same_v<std::decay_t<decltype(ctx)>, FormalQ>) {
      CHECK_FALSE(verifyE2Relations(ctx, e2, rescaled.P1, rescaled.P2).allPassed());
    }
  };
  check(FormalQ{});
  check(PointQ(1));
  for (mpq_class q : {mpq_class(2), mpq_class(3, 2), mpq_class(5), mpq_class(16)}) {
    CAPTURE(q.get_str());
    std::visit(check, numericField(q));
  }
}

TEST_CASE("window size does not change interior results") {
  FormalQ f;
  for (int M : {4, 5, 10}) {
    auto e2 = buildE2Realization(f, mpq_class(5, 3), M);
    auto rec = reconstructTranslations(f, e2, buildTildeGenerators(f, e2));
    auto c = compareInterior(rec.P1, e2.P1);
    CHECK(c.holds());
    CHECK(c.compared.size() == static_cast<std::size_t>(2 * M - 3));
  }
}

TEST_CASE("vanishing D is reported with its modes") {
  // classically D = 0 where H^2 = (1 - 2Y)^2; Y = 3/2 hits H = -2m = +-2
  PointQ classical(1);
  auto e2 = buildE2Realization(classical, mpq_class(3, 2), 8);
  auto tl = buildTildeGenerators(classical, e2);
  try {
    reconstructTranslations(classical, e2, tl);
    FAIL("expected a degenerate D");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
    CHECK(std::string(e.what()).find("-1,1") != std::string::npos);
  }
  FormalQ f;
  auto fe = buildE2Realization(f, mpq_class(3, 2), 8);
  CHECK_NOTHROW(reconstructTranslations(f, fe, buildTildeGenerators(f, fe)));
}

TEST_CASE("Casimir candidate") {
  FormalQ f;
  const mpq_class Y = 2;
  auto e2 = buildE2Realization(f, Y, 8);
  auto tl = buildTildeGenerators(f, e2);
  auto rep = verifyYsqRelation(f, e2, tl);
  CHECK(rep.allPassed());
  CHECK_FALSE(verifyYsqRelation(f, e2, tl, CasimirCandidate::Identity).allPassed());

  // E F on basis_m is Y^2 - ([2m+1]_sqrtq / [2]_sqrtq)^2
  const auto i = RationalFunction(GaussianRational::i());
  auto E = tl.L31 - tl.L32.scaled(i);
  auto F = tl.L31 + tl.L32.scaled(i);
  auto EF = E * F;
  for (int m = -6; m <= 6; ++m) {
    auto r = qs(2 * m + 1) / qs(2);
    CHECK(EF.column(m).entries.at(m) == RationalFunction(GaussianRational(Y * Y)) - r * r);
  }
  std::map<std::string, std::string> found(rep.findings.begin(), rep.findings.end());
  CHECK(found["relations.[E,F]=[H]_q"] == "holds");
  CHECK(found["relations.[H,E]=2E"] == "holds");
  CHECK(found["relations.[E,F]=[H]_sqrtq"] == "fails");
}

TEST_CASE("qdeform suite") {
  QdeformConfig cfg;
  cfg.qValues = {2, mpq_class(3, 2), 5};
  auto rep = verifyQdeform(cfg);
  CHECK(rep.allPassed());
  CHECK(rep.find("formal.control.corrupted_D_breaks_e2") != nullptr);
  CHECK(rep.find("formal.roundtrip.P1") != nullptr);
  CHECK(rep.find("q=3/2.roundtrip.P2") != nullptr);
  CHECK(rep.find("classical_limit.P1hat") != nullptr);
  CHECK(rep.toJson() == verifyQdeform(cfg).toJson());

  QdeformConfig none;
  none.formal = false;
  CHECK_THROWS_AS(verifyQdeform(none), Error);
}
