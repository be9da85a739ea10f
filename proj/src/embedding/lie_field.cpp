#include "liefield/embedding/lie_field.hpp"

#include "liefield/error.hpp"

namespace liefield {

namespace {

const LieField& fieldOf(const LieFieldElement& a, const LieFieldElement& b) {
  const LieField* f = a.field ? a.field : b.field;
  if (!f || (a.field && b.field && a.field != b.field)) throw Error(ErrorKind::Domain, "mixed or missing Lie field");
  return *f;
}

}  // namespace

LieFieldElement& LieFieldElement::operator+=(const LieFieldElement& o) { return *this = fieldOf(*this, o).add(*this, o); }

LieFieldElement operator*(const LieFieldElement& a, const LieFieldElement& b) { return fieldOf(a, b).multiply(a, b); }

LieFieldElement LieField::yPow(int k) const {
  if (k <= 0) return make(NCPolynomial(1), -k);
  Monomial m;
  m.y = 1;
  return make(alg_->power(NCPolynomial::monomial(m), k));
}

NCPolynomial LieField::numeratorOver(const LieFieldElement& a, int d) const {
  if (d < a.yDen) throw Error(ErrorKind::Domain, "numeratorOver: denominator too small");
  if (d == a.yDen || a.num.isZero()) return a.num;
  return alg_->multiply(yPow(d - a.yDen).num, a.num);
}

LieFieldElement LieField::add(const LieFieldElement& a, const LieFieldElement& b) const {
  if (a.num.isZero()) return make(b.num, b.yDen);
  if (b.num.isZero()) return make(a.num, a.yDen);
  int d = std::max(a.yDen, b.yDen);
  return make(numeratorOver(a, d) + numeratorOver(b, d), d);
}

LieFieldElement LieField::multiply(const LieFieldElement& a, const LieFieldElement& b) const {
  if (a.num.isZero() || b.num.isZero()) return make({}, 0);
  return make(alg_->multiply(a.num, b.num), a.yDen + b.yDen);
}

}  // namespace liefield
