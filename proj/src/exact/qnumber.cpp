#include "liefield/exact/qnumber.hpp"

#include <string>

#include "liefield/error.hpp"

namespace liefield {

namespace {

// t-exponents of b^(x/2) and b^(1/2).
std::pair<int, int> exponents(HalfInt x, QBase base) {
  if (base == QBase::Q) return {x.twice, 2};
  if (!x.isInteger()) {
    throw Error(ErrorKind::NotIntegral,
                "exponent not integral: [" + std::to_string(x.twice) + "/2]_sqrt(q) needs t^(" +
                    std::to_string(x.twice) + "/2)");
  }
  return {x.twice / 2, 1};
}

LaurentPoly antisym(int e) { return LaurentPoly::monomial(e) - LaurentPoly::monomial(-e); }

}  // namespace

LaurentPoly qNumber(HalfInt x, QBase base) {
  auto [num, den] = exponents(x, base);
  return LaurentPoly::divideExact(antisym(num), antisym(den));
}

RationalFunction qNumberFraction(HalfInt x, QBase base) {
  auto [num, den] = exponents(x, base);
  return {antisym(num), antisym(den)};
}

}  // namespace liefield
