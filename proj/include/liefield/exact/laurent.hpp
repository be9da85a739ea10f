#pragma once

#include <map>
#include <string>
#include <utility>

#include "liefield/exact/gaussian_rational.hpp"

namespace liefield {

/// Laurent polynomial in the formal variable t = q^(1/4) with Q(i)
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(const GaussianRational& c) { addTerm(0, c); }  // NOLINT(implicit)
  LaurentPoly(int c) : LaurentPoly(GaussianRational(c)) {}  // NOLINT(implicit)

  static LaurentPoly monomial(int exponent, const GaussianRational& c = 1);
  static LaurentPoly t() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  /// A unit of the Laurent ring: a single nonzero term c*t^k.
  bool isMonomial() const { return terms_.size() == 1; }
  int minExponent() const;
  int maxExponent() const;
  GaussianRational coeff(int exponent) const;

  LaurentPoly& addTerm(int exponent, const GaussianRational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly scaled(const GaussianRational& c) const;
  LaurentPoly shifted(int k) const;
  /// t -> t^-1
  LaurentPoly inverted() const;
  LaurentPoly pow(int k) const;
  /// Inverse in the Laurent ring; only monomials are invertible.
  LaurentPoly inv() const;

  /// Exact quotient a / b; throws InexactDivision when b does not divide a.
  static LaurentPoly divideExact(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd, normalized to minimum exponent 0 (defined up to units).
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact evaluation; t0 must be nonzero when negative exponents occur.
  GaussianRational evaluate(const GaussianRational& t0) const;

  std::string toString() const;

 private:
  Terms terms_;
};

}  // namespace liefield
