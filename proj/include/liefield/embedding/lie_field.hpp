#pragma once

#include "liefield/algebra/algebra.hpp"

namespace liefield {

class LieField;

/// num / Y^yDen with Y the adjoined central root. Y is central and the
/// enveloping algebra has no zero divisors, so the element is zero exactly
/// when its numerator normal-orders to zero.
struct LieFieldElement {
  const LieField* field = nullptr;
  NCPolynomial num;
  int yDen = 0;

  bool isZero() const { return num.isZero(); }
  LieFieldElement scaled(const GaussianRational& c) const { return {field, num.scaled(c), yDen}; }
  LieFieldElement& operator+=(const LieFieldElement& o);
  LieFieldElement& operator-=(const LieFieldElement& o) { return *this += o.scaled(-1); }
  friend LieFieldElement operator+(LieFieldElement a, const LieFieldElement& b) { return a += b; }
  friend LieFieldElement operator-(LieFieldElement a, const LieFieldElement& b) { return a -= b; }
  LieFieldElement operator-() const { return scaled(-1); }
  friend LieFieldElement operator*(const LieFieldElement& a, const LieFieldElement& b);
};

/// Arithmetic in the Y-extended enveloping algebra with powers of Y allowed
/// in denominators. Denominators are only ever powers of Y, which is all the
/// deformation formulas need.
class LieField {
 public:
  explicit LieField(Algebra& alg) : alg_(&alg) {}

  Algebra& algebra() const { return *alg_; }
  LieFieldElement make(NCPolynomial num, int yDen = 0) const { return {this, std::move(num), yDen}; }
  LieFieldElement constant(const GaussianRational& c) const { return make(NCPolynomial(c)); }
  /// Y^k for any integer k.
  LieFieldElement yPow(int k) const;
  LieFieldElement multiply(const LieFieldElement& a, const LieFieldElement& b) const;
  LieFieldElement add(const LieFieldElement& a, const LieFieldElement& b) const;
  /// Numerator over Y^yDen, multiplied up so the denominator is exactly Y^d
  /// (d >= yDen).
  NCPolynomial numeratorOver(const LieFieldElement& a, int d) const;

 private:
  Algebra* alg_;
};

}  // namespace liefield
