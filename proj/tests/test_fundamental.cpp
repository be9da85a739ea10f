#include <doctest.h>

#include "liefield/error.hpp"
#include "liefield/lie/fundamental.hpp"

using namespace liefield;

TEST_CASE("generator matrices") {
  Signature s{1, 3};
  auto E = [&](int i, int j) { return ExactMatrix::unit(5, i, j); };
  CHECK(generatorMatrix(s, 0, 1) == (E(0, 1) - E(1, 0)).scaled(-1));
  CHECK(generatorMatrix(s, 3, 4) == E(3, 4) - E(4, 3));
  CHECK(generatorMatrix(s, 0, 2) == E(0, 2) + E(2, 0));
  CHECK_THROWS_AS(generatorMatrix(s, 2, 2), Error);
  CHECK_THROWS_AS(generatorMatrix(s, 0, 5), Error);
}

TEST_CASE("generator matrices lie in so(p+1,q)") {
  for (auto sig : {Signature{0, 1}, Signature{0, 3}, Signature{1, 2}, Signature{1, 3}, Signature{2, 4}}) {
    for (int i = 0; i < sig.n(); ++i) {
      for (int j = i + 1; j < sig.n(); ++j) CHECK(membershipDefect(sig, generatorMatrix(sig, i, j)).isZero());
    }
  }
}

TEST_CASE("matrix units obey their commutation rule") {
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          ExactMatrix expect(n);
          if (j == k) expect += ExactMatrix::unit(n, i, l);
          if (l == i) expect -= ExactMatrix::unit(n, k, j);
          CHECK(commutator(ExactMatrix::unit(n, i, j), ExactMatrix::unit(n, k, l)) == expect);
        }
      }
    }
  }
}

TEST_CASE("matrix brackets agree with the structure constants") {
  auto r13 = verifyMatrixBrackets({1, 3});
  CHECK(r13.allPassed());
  CHECK(r13.find("bracket.all")->notes.front() == "45 pairs");
  CHECK(verifyMatrixBrackets({0, 1}).allPassed());
  for (auto sig : {Signature{0, 2}, Signature{0, 3}, Signature{1, 2}}) CHECK(verifyMatrixBrackets(sig).allPassed());

  Signature s{1, 3};
  MatrixOverrides bad{{{0, 2}, generatorMatrix(s, 0, 2).transposed().scaled(-1)}};
  auto rep = verifyMatrixBrackets(s, bad);
  CHECK_FALSE(rep.allPassed());
  CHECK(rep.find("bracket.L01,L02") != nullptr);
}

TEST_CASE("quadratic casimir in the fundamental representation") {
  // each diagonal entry collects one unit from each of the n-1 planes through it
  auto c13 = casimirMatrix({1, 3});
  REQUIRE(c13.scalar);
  CHECK(*c13.scalar == 4);
  auto c01 = casimirMatrix({0, 1});
  REQUIRE(c01.scalar);
  CHECK(*c01.scalar == 1);
  auto l = generatorMatrix({0, 1}, 0, 1);
  CHECK(c01.matrix == l * l);
}
