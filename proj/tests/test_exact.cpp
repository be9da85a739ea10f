#include <doctest.h>

#include <random>

#include "liefield/error.hpp"
#include "liefield/exact/gaussian_rational.hpp"
#include "liefield/exact/laurent.hpp"
#include "liefield/exact/qnumber.hpp"
#include "liefield/exact/rational_function.hpp"
#include "liefield/exact/root_field.hpp"

using namespace liefield;

namespace {

GaussianRational randomGR(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

LaurentPoly randomLaurent(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> ex(-3, 3);
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) p.addTerm(ex(rng), randomGR(rng));
  return p;
}

RationalFunction randomRF(std::mt19937& rng) {
  LaurentPoly den;
  while (den.isZero()) den = randomLaurent(rng, 2);
  return {randomLaurent(rng), den};
}

ErrorKind kindOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Config;
}

}  // namespace

TEST_CASE("gaussian rational basics") {
  auto a = GaussianRational::parse("1/2+i");
  auto b = GaussianRational::parse("1/2-i");
  CHECK(a * b == GaussianRational::fraction(5, 4));
  CHECK(GaussianRational::parse("2i") == GaussianRational::imag(2));
  CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
  CHECK(GaussianRational::parse("1/2-3/4i").toString() == "1/2-3/4i");
  CHECK(GaussianRational::i().pow(2) == -1);
  CHECK(GaussianRational(mpq_class(6, 4)).re() == mpq_class(3, 2));
  CHECK(kindOf([] { (void)GaussianRational(0).inv(); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("field laws on random gaussian rationals") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    auto a = randomGR(rng);
    auto b = randomGR(rng);
    auto c = randomGR(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.isZero()) CHECK(a * a.inv() == 1);
  }
}

TEST_CASE("laurent polynomials") {
  auto t = LaurentPoly::t();
  auto ti = LaurentPoly::monomial(-1);
  auto s = (t + ti) * (t + ti);
  CHECK(s == LaurentPoly::monomial(2) + LaurentPoly(2) + LaurentPoly::monomial(-2));
  CHECK(kindOf([&] { (void)(LaurentPoly::monomial(2) - LaurentPoly::monomial(2)).inv(); }) ==
        ErrorKind::DivisionByZero);
  CHECK(kindOf([&] { (void)(t + 1).inv(); }) == ErrorKind::NotInvertible);
  CHECK(kindOf([&] { (void)RationalFunction(LaurentPoly(1), t.pow(2) - t.pow(2)); }) == ErrorKind::DivisionByZero);
  auto q = LaurentPoly::divideExact(t.pow(4) - ti.pow(4), t - ti);
  CHECK(q * (t - ti) == t.pow(4) - ti.pow(4));
  CHECK(kindOf([&] { (void)LaurentPoly::divideExact(t + 1, t - 1); }) == ErrorKind::InexactDivision);
  CHECK(LaurentPoly::gcd(t.pow(2) - 1, (t - 1) * (t - 1)) == t - 1);
}

TEST_CASE("rational functions are canonical and obey field laws") {
  std::mt19937 rng(5);
  for (int it = 0; it < 60; ++it) {
    auto a = randomRF(rng);
    auto b = randomRF(rng);
    auto c = randomRF(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.isZero()) CHECK(a * a.inv() == RationalFunction(1));
    CHECK(a - a == RationalFunction(0));
  }
  auto t = LaurentPoly::t();
  RationalFunction x(t * t - 1, t - 1);
  CHECK(x == RationalFunction(t + 1));
  RationalFunction y(LaurentPoly(2) * t, LaurentPoly(4) * t * t);
  CHECK(y.den().minExponent() == 0);
  CHECK(y.den().coeff(y.den().minExponent()) == 1);
}

TEST_CASE("evaluation") {
  auto t = LaurentPoly::t();
  auto ti = LaurentPoly::monomial(-1);
  CHECK((t + ti).evaluate(1) == 2);
  RationalFunction f(t.pow(2) - ti.pow(2), t - ti);
  CHECK(f.evaluateAt(2) == GaussianRational::fraction(5, 2));
  RationalFunction g(LaurentPoly(1), t - 1);
  CHECK(kindOf([&] { (void)g.evaluateAt(1); }) == ErrorKind::Pole);
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
  std::mt19937 rng(17);
  GaussianRational t0 = GaussianRational::parse("3/2+1/3i");
  for (int it = 0; it < 40; ++it) {
    auto a = randomRF(rng);
    auto b = randomRF(rng);
    try {
      auto va = a.evaluateAt(t0);
      auto vb = b.evaluateAt(t0);
      CHECK((a + b).evaluateAt(t0) == va + vb);
      CHECK((a * b).evaluateAt(t0) == va * vb);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Pole);
    }
  }
}

TEST_CASE("q-numbers") {
  auto t = LaurentPoly::t();
  CHECK(qNumber(HalfInt::of(2), QBase::Q) == t.pow(2) + t.pow(-2));
  CHECK(qNumber(HalfInt::of(1), QBase::Q) == LaurentPoly(1));
  CHECK(qNumber(HalfInt::of(3), QBase::Q) == t.pow(4) + LaurentPoly(1) + t.pow(-4));
  CHECK(qNumber(HalfInt::of(2), QBase::SqrtQ) == t + t.pow(-1));
  CHECK(qNumber(HalfInt::of(0), QBase::SqrtQ).isZero());
  CHECK(kindOf([] { (void)qNumber(HalfInt::half(1), QBase::SqrtQ); }) == ErrorKind::NotIntegral);
  // [1/2]_q = (t - t^-1)/(t^2 - t^-2) = 1/(t + t^-1), not a Laurent polynomial
  CHECK(kindOf([] { (void)qNumber(HalfInt::half(1), QBase::Q); }) == ErrorKind::InexactDivision);
  CHECK(qNumberFraction(HalfInt::half(1), QBase::Q) == RationalFunction(LaurentPoly(1), t + t.pow(-1)));
}

TEST_CASE("q-number symmetry and classical limit") {
  for (int m = -7; m <= 7; ++m) {
    for (auto base : {QBase::Q, QBase::SqrtQ}) {
      CHECK(qNumber(HalfInt::of(-m), base) == -qNumber(HalfInt::of(m), base));
      CHECK(qNumber(HalfInt::of(m), base).inverted() == qNumber(HalfInt::of(m), base));
      CHECK(qNumber(HalfInt::of(m), base).evaluate(1) == m);
    }
  }
}

TEST_CASE("quartic root field") {
  for (auto q : {GaussianRational(2), GaussianRational::fraction(3, 2), GaussianRational(5)}) {
    auto t = RootFieldElement::generator(4, q);
    CHECK(t * t * t * t == RootFieldElement(4, q, q));
    auto x = t + RootFieldElement(4, q, 1);
    CHECK(x * x.inv() == RootFieldElement(4, q, 1));
    auto lp = qNumber(HalfInt::of(3), QBase::SqrtQ);
    auto img = RootFieldElement::fromLaurent(4, q, lp);
    auto ti = t.inv();
    CHECK(img == t * t + RootFieldElement(4, q, 1) + ti * ti);
  }
}
