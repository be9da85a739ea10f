#include <doctest.h>

#include <random>

#include "liefield/algebra/algebra.hpp"
#include "liefield/algebra/substitute.hpp"
#include "liefield/error.hpp"
#include "liefield/lie/presets.hpp"

using namespace liefield;

namespace {

NCPolynomial randomPoly(std::mt19937& rng, const Algebra& alg, int maxDeg, int terms) {
  std::uniform_int_distribution<int> gen(0, static_cast<int>(alg.presentation().size()) - 1);
  std::uniform_int_distribution<int> deg(0, maxDeg);
  std::uniform_int_distribution<long> c(-4, 4);
  RawPolynomial raw;
  for (int k = 0; k < terms; ++k) {
    RawTerm t{GaussianRational(mpq_class(c(rng)), mpq_class(c(rng))), {}};
    int d = deg(rng);
    for (int j = 0; j < d; ++j) t.word.push_back(gen(rng));
    raw.push_back(t);
  }
  return const_cast<Algebra&>(alg).normalOrder(raw);
}

}  // namespace

TEST_CASE("normal ordering examples") {
  auto so23 = buildSo({1, 3});
  Algebra alg(so23.presentation);
  auto l01 = so23.lId(0, 1);
  auto l02 = so23.lId(0, 2);
  auto l12 = so23.lId(1, 2);
  auto lhs = alg.normalOrder(std::vector<Symbol>{l12, l01});
  CHECK(lhs == alg.multiply(alg.gen(l01), alg.gen(l12)) + alg.gen(l02));
  CHECK(alg.format(lhs) == "L02 + L01*L12");
  auto ordered = alg.normalOrder(std::vector<Symbol>{l01, l12});
  CHECK(ordered.size() == 1);
  CHECK(alg.normalOrder(RawPolynomial{{1, {l01, l12}}}) == ordered);
  CHECK(alg.commutator(alg.gen(l01), alg.gen(l12)) == -alg.gen(l02));
  CHECK(alg.commutator(alg.gen(l01), alg.gen(so23.lId(2, 3))).isZero());

  auto poin = buildPoincare({0, 3});
  Algebra pa(poin.presentation);
  auto p0 = poin.presentation->require("P0");
  auto p1 = poin.presentation->require("P1");
  auto p10 = pa.normalOrder(std::vector<Symbol>{p1, p0});
  CHECK(p10 == pa.normalOrder(std::vector<Symbol>{p0, p1}));
  CHECK(pa.format(p10) == "P0*P1");
  CHECK(pa.commutator(poin.L(0, 1), poin.P(1)) == poin.P(0));
}

TEST_CASE("normal ordering is idempotent and linear") {
  auto m = buildPoincare({1, 2});
  Algebra alg(m.presentation);
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    auto a = randomPoly(rng, alg, 3, 4);
    auto b = randomPoly(rng, alg, 3, 4);
    RawPolynomial raw;
    for (const auto& t : a.terms()) {
      RawTerm r{t.coeff, {}};
      for (int g = 0; g < static_cast<int>(kMaxGenerators); ++g) {
        for (int e = 0; e < t.mono.exps[static_cast<std::size_t>(g)]; ++e) r.word.push_back(g);
      }
      raw.push_back(r);
    }
    CHECK(alg.normalOrder(raw) == a);
    CHECK(alg.multiply(a + b, b) == alg.multiply(a, b) + alg.multiply(b, b));
  }
}

TEST_CASE("commutator is bilinear, antisymmetric and satisfies Jacobi on random inputs") {
  auto m = buildPoincare({0, 3});
  Algebra alg(m.presentation);
  std::mt19937 rng(7);
  for (int it = 0; it < 12; ++it) {
    auto a = randomPoly(rng, alg, 2, 3);
    auto b = randomPoly(rng, alg, 2, 3);
    auto c = randomPoly(rng, alg, 2, 2);
    CHECK(alg.commutator(a, b) == -alg.commutator(b, a));
    CHECK(alg.commutator(a + c, b) == alg.commutator(a, b) + alg.commutator(c, b));
    CHECK(alg.commutator(a.scaled(GaussianRational::parse("2-i")), b) ==
          alg.commutator(a, b).scaled(GaussianRational::parse("2-i")));
    auto j = alg.commutator(alg.commutator(a, b), c) + alg.commutator(alg.commutator(b, c), a) +
             alg.commutator(alg.commutator(c, a), b);
    CHECK(j.isZero());
  }
}

TEST_CASE("associativity of the normal-ordered product") {
  auto m = buildSo({1, 2});
  Algebra alg(m.presentation);
  std::mt19937 rng(21);
  for (int it = 0; it < 15; ++it) {
    auto a = randomPoly(rng, alg, 3, 3);
    auto b = randomPoly(rng, alg, 3, 3);
    auto c = randomPoly(rng, alg, 2, 3);
    CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
  }
}

TEST_CASE("adjoining a central root") {
  auto m = buildPoincare({0, 3});
  Algebra base(m.presentation);
  auto psq = base.multiply(m.P(0), m.P(0)) - base.multiply(m.P(1), m.P(1)) - base.multiply(m.P(2), m.P(2)) -
             base.multiply(m.P(3), m.P(3));
  auto ext = adjoinCentralRoot(m.presentation, "Y", psq);
  Algebra alg(ext);
  auto l01 = m.lId(0, 1);
  auto y2l = alg.normalOrder(std::vector<Symbol>{kSymbolY, kSymbolY, l01});
  CHECK(y2l == alg.multiply(psq, alg.gen(l01)));
  CHECK(y2l.maxY() == 0);
  CHECK(alg.commutator(alg.y(), alg.gen(m.presentation->require("P0"))).isZero());
  auto y3 = alg.power(alg.y(), 3);
  CHECK(y3 == alg.multiply(psq, alg.y()));

  auto so23 = buildSo({1, 3});
  try {
    (void)adjoinCentralRoot(so23.presentation, "Y", NCPolynomial::generator(so23.lId(0, 1)));
    FAIL("expected NotCentral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCentral);
    CHECK(std::string(e.what()).find("L02") != std::string::npos);
  }
}

TEST_CASE("term guard") {
  auto m = buildSo({1, 3});
  Algebra alg(m.presentation, EngineOptions{20});
  auto x = alg.gen(m.lId(0, 1)) + alg.gen(m.lId(1, 2)) + alg.gen(m.lId(2, 3)) + alg.gen(m.lId(0, 4));
  try {
    (void)alg.power(x, 6);
    FAIL("expected TermLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TermLimit);
  }
}

TEST_CASE("substitution") {
  auto m = buildPoincare({0, 1});
  Algebra alg(m.presentation);
  Substitution id(*m.presentation, alg);
  for (std::size_t g = 0; g < m.presentation->size(); ++g) id.map(static_cast<GenId>(g), alg.gen(static_cast<GenId>(g)));
  std::mt19937 rng(2);
  auto x = randomPoly(rng, alg, 3, 5);
  CHECK(id.apply(x) == x);

  Substitution s(*m.presentation, alg);
  s.map("L01", m.P(0));
  s.map("P0", m.P(0));
  auto l01 = static_cast<Symbol>(m.lId(0, 1));
  auto p0 = static_cast<Symbol>(m.presentation->require("P0"));
  CHECK(s.apply(RawPolynomial{{1, {l01, p0}}}) == alg.multiply(m.P(0), m.P(0)));

  Substitution partial(*m.presentation, alg);
  partial.map("P0", m.P(0));
  try {
    (void)partial.apply(alg.gen(m.lId(0, 1)));
    FAIL("expected UnmappedGenerator");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnmappedGenerator);
    CHECK(std::string(e.what()).find("L01") != std::string::npos);
  }
}

TEST_CASE("substitution is multiplicative and functorial for automorphisms") {
  auto m = buildPoincare({0, 3});
  Algebra alg(m.presentation);
  // parity on index 1 and a rescaling of translations are both automorphisms
  auto parity = [&](int k) { return k == 1 ? -1 : 1; };
  Substitution par(*m.presentation, alg);
  Substitution dil(*m.presentation, alg);
  Substitution both(*m.presentation, alg);
  for (int i = 0; i < 4; ++i) {
    par.map(translationName(i), m.P(i).scaled(parity(i)));
    dil.map(translationName(i), m.P(i).scaled(3));
    both.map(translationName(i), m.P(i).scaled(3 * parity(i)));
    for (int j = i + 1; j < 4; ++j) {
      par.map(rotationName(i, j), m.L(i, j).scaled(parity(i) * parity(j)));
      dil.map(rotationName(i, j), m.L(i, j));
      both.map(rotationName(i, j), m.L(i, j).scaled(parity(i) * parity(j)));
    }
  }
  std::mt19937 rng(9);
  for (int it = 0; it < 10; ++it) {
    auto a = randomPoly(rng, alg, 3, 3);
    auto b = randomPoly(rng, alg, 2, 3);
    CHECK(par.apply(alg.multiply(a, b)) == alg.multiply(par.apply(a), par.apply(b)));
    CHECK(dil.apply(par.apply(a)) == both.apply(a));
  }
}

TEST_CASE("jacobi check and negative control") {
  for (auto sig : {Signature{0, 1}, Signature{0, 2}, Signature{0, 3}, Signature{1, 2}, Signature{1, 3}}) {
    Algebra alg(buildSo(sig).presentation);
    CHECK(checkJacobi(alg).allPassed());
  }
  auto so23 = buildSo({1, 3});
  Algebra a23(so23.presentation);
  auto rep = checkJacobi(a23);
  CHECK(rep.find("jacobi.all")->notes.front() == "120 triples");
  for (auto sig : {Signature{0, 3}, Signature{1, 3}}) {
    Algebra alg(buildPoincare(sig).presentation);
    CHECK(checkJacobi(alg).allPassed());
  }

  PresentationBuilder b;
  const auto& src = *so23.presentation;
  for (const auto& g : src.generators()) b.addGenerator(g);
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t y = x + 1; y < src.size(); ++y) {
      auto f = src.bracket(static_cast<GenId>(x), static_cast<GenId>(y));
      if (!f.empty()) b.setBracket(static_cast<GenId>(x), static_cast<GenId>(y), f);
    }
  }
  auto a = so23.lId(0, 1);
  auto c = so23.lId(1, 2);
  LinearForm flipped = src.bracket(a, c);
  for (auto& [k, v] : flipped) v = -v;
  b.setBracket(a, c, flipped);
  CHECK_THROWS_AS((void)PresentationBuilder(b).build(), Error);
  Algebra bad(b.build(Validation::Skip));
  auto badRep = checkJacobi(bad);
  CHECK_FALSE(badRep.allPassed());
  CHECK(badRep.failures() >= 2);
}
