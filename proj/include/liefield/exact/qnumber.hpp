#pragma once

#include "liefield/exact/laurent.hpp"
#include "liefield/exact/rational_function.hpp"

namespace liefield {

enum class QBase { Q, SqrtQ };

/// An integer or half-integer weight, stored as twice its value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt of(int v) { return {2 * v}; }
  static constexpr HalfInt half(int twiceValue) { return {twiceValue}; }
  constexpr bool isInteger() const { return twice % 2 == 0; }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
};

/// [x]_b = (b^(x/2) - b^(-x/2)) / (b^(1/2) - b^(-1/2)) as a Laurent polynomial
/// in t = q^(1/4). Base q uses t^(2x), base sqrt-q uses t^x.
///
/// Throws NotIntegral when the required t-exponent is fractional, and
/// InexactDivision when the quotient is not a Laurent polynomial (e.g. [1/2]_q).
LaurentPoly qNumber(HalfInt x, QBase base);

/// Same quantity as an element of Q(i)(t); defined for every weight whose
/// t-exponents are integral.
RationalFunction qNumberFraction(HalfInt x, QBase base);

}  // namespace liefield
