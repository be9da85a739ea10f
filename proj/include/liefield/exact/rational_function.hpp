#pragma once

#include <string>

#include "liefield/exact/laurent.hpp"

namespace liefield {

/// Element of Q(i)(t). Canonical form: numerator and denominator coprime,
/// denominator has minimum exponent 0 and lowest coefficient 1. Equality
/// is structural on the canonical pair.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(implicit)
  RationalFunction(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT(implicit)
  /// Throws DivisionByZero if den is zero.
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }

  RationalFunction inv() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at t0; throws Error(Pole) when the canonical denominator
  /// vanishes there.
  GaussianRational evaluateAt(const GaussianRational& t0) const;

  std::string toString() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace liefield
