#include "liefield/exact/rational_function.hpp"

#include "liefield/error.hpp"

namespace liefield {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw Error(ErrorKind::DivisionByZero, "division by zero in RationalFunction");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.isZero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.isMonomial()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!(g.isMonomial())) {
      num_ = LaurentPoly::divideExact(num_, g);
      den_ = LaurentPoly::divideExact(den_, g);
    }
  }
  // unit normalization: den = 1 + ... with minimum exponent 0
  int shift = den_.minExponent();
  GaussianRational lowInv = den_.coeff(shift).inv();
  den_ = den_.shifted(-shift).scaled(lowInv);
  num_ = num_.shifted(-shift).scaled(lowInv);
}

RationalFunction RationalFunction::inv() const {
  if (num_.isZero()) throw Error(ErrorKind::DivisionByZero, "division by zero in RationalFunction::inv");
  return {den_, num_};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inv(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

GaussianRational RationalFunction::evaluateAt(const GaussianRational& t0) const {
  if (t0.isZero() && (num_.minExponent() < 0)) {
    throw Error(ErrorKind::Pole, "RationalFunction::evaluateAt: pole at t=0 of " + toString());
  }
  GaussianRational d = den_.evaluate(t0);
  if (d.isZero()) {
    throw Error(ErrorKind::Pole, "RationalFunction::evaluateAt: pole at t=" + t0.toString() + " of " +
                                     toString());
  }
  return num_.evaluate(t0) / d;
}

std::string RationalFunction::toString() const {
  if (den_ == LaurentPoly(1)) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

}  // namespace liefield
