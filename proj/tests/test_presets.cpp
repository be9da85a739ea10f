#include <doctest.h>

#include "liefield/error.hpp"
#include "liefield/lie/presets.hpp"

using namespace liefield;

namespace {

NCPolynomial form(const LinearForm& f) {
  NCPolynomial p;
  for (const auto& [k, c] : f) p += NCPolynomial::generator(static_cast<GenId>(k)).scaled(c);
  return p;
}

}  // namespace

TEST_CASE("so(p+1,q) brackets") {
  auto m = buildSo({1, 3});
  CHECK(m.presentation->size() == 10);
  CHECK(m.presentation->bracketPoly(m.lId(0, 1), m.lId(1, 2)) == -m.L(0, 2));
  CHECK(m.presentation->bracketPoly(m.lId(1, 2), m.lId(2, 3)) == m.L(1, 3));
  auto abelian = buildSo({0, 1});
  CHECK(abelian.presentation->size() == 1);
  CHECK(abelian.presentation->bracket(0, 0).empty());
  CHECK_THROWS_AS(buildSo({4, 4}), Error);
  CHECK_THROWS_AS(buildSo({0, 0}), Error);
}

TEST_CASE("poincare brackets") {
  auto m = buildPoincare({0, 3});
  const auto& pr = *m.presentation;
  auto P = [&](int k) { return pr.require(translationName(k)); };
  CHECK(pr.bracketPoly(m.lId(0, 1), P(1)) == m.P(0));
  CHECK(pr.bracketPoly(P(1), P(2)).isZero());
  auto m13 = buildPoincare({1, 3});
  CHECK(m13.presentation->bracketPoly(m13.lId(0, 1), m13.presentation->require("P0")) == m13.P(1));
  // order: translations first, then rotations lexicographically
  CHECK(pr.info(0).name == "P0");
  CHECK(pr.info(4).name == "L01");
  CHECK(pr.info(9).name == "L23");
}

TEST_CASE("four-term and three-index bracket rules agree") {
  for (auto sig : {Signature{0, 1}, Signature{0, 2}, Signature{0, 3}, Signature{1, 2}, Signature{1, 3}, Signature{2, 3}}) {
    auto m = buildSo(sig);
    const auto& pr = *m.presentation;
    for (std::size_t a = 0; a < pr.size(); ++a) {
      for (std::size_t b = 0; b < pr.size(); ++b) {
        CHECK(form(pr.bracket(static_cast<GenId>(a), static_cast<GenId>(b))) ==
              form(threeIndexBracket(m, static_cast<GenId>(a), static_cast<GenId>(b))));
      }
    }
  }
}

TEST_CASE("casimir catalog") {
  auto m01 = buildPoincare({0, 1});
  Algebra a01(m01.presentation);
  auto c01 = buildCasimirs(a01, m01, {"Q2", "Psq"});
  CHECK(c01.get("Q2") == a01.multiply(m01.L(0, 1), m01.L(0, 1)));

  auto m = buildPoincare({0, 3});
  Algebra alg(m.presentation);
  auto cat = buildCasimirs(alg, m, {"Q2", "Psq", "Delta", "W", "Q4root", "Q4", "Lsq"});
  auto sq = [&](const NCPolynomial& x) { return alg.multiply(x, x); };
  CHECK(cat.get("Psq") == sq(m.P(0)) - sq(m.P(1)) - sq(m.P(2)) - sq(m.P(3)));
  auto root = alg.multiply(m.L(1, 2), m.L(3, 0)) + alg.multiply(m.L(2, 3), m.L(1, 0)) + alg.multiply(m.L(3, 1), m.L(2, 0));
  CHECK(cat.get("Q4root") == root);
  CHECK(cat.get("Q4") == sq(root));
  // Q2 in the Lorentz block matches the expanded form: boosts^2 minus rotations^2
  CHECK(cat.get("Q2") == sq(m.L(0, 1)) + sq(m.L(0, 2)) + sq(m.L(0, 3)) - cat.get("Lsq"));
  for (const auto& r : cat.centrality()) {
    INFO(r.element);
    CHECK(r.central);
  }
  CHECK_FALSE(cat.get("W").isZero());
  CHECK_THROWS_AS(buildCasimirs(a01, m01, {"W"}), Error);
  CHECK_THROWS_AS(buildCasimirs(alg, m, {"C4so23"}), Error);
}

TEST_CASE("so(2,3) casimirs") {
  auto m = buildSoWithMetric(antiDeSitterMetric());
  Algebra alg(m.presentation);
  auto cat = buildCasimirs(alg, m, {"Q2", "C2so23", "C4so23", "C2prime", "C4prime", "Q4root", "Q4", "Lsq"});
  for (const auto& r : cat.centrality()) {
    INFO(r.element << " over " << r.over);
    if (r.element == "Q2") continue;
    CHECK(r.central);
  }
  // with this metric the displayed C_2 is the contracted quadratic Casimir
  CHECK(cat.get("C2so23") == cat.get("Q2"));
  CHECK(cat.get("C2prime") == -(cat.get("C2so23") + NCPolynomial(GaussianRational::fraction(5, 2))));

  // L12, L^2, Q2 (Lorentz), Q4, C2, C4 pairwise commute
  auto lorentz = buildSo({0, 3});
  std::vector<NCPolynomial> six = {m.L(1, 2), cat.get("Lsq"),
                                   alg.multiply(m.L(0, 1), m.L(0, 1)) + alg.multiply(m.L(0, 2), m.L(0, 2)) +
                                       alg.multiply(m.L(0, 3), m.L(0, 3)) - cat.get("Lsq"),
                                   cat.get("Q4"), cat.get("C2so23"), cat.get("C4so23")};
  for (std::size_t a = 0; a < six.size(); ++a) {
    for (std::size_t b = a + 1; b < six.size(); ++b) {
      INFO(a << "," << b);
      CHECK(alg.commutator(six[a], six[b]).isZero());
    }
  }
}
