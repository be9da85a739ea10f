#pragma once

#include <string>
#include <vector>

#include "liefield/exact/gaussian_rational.hpp"
#include "liefield/exact/laurent.hpp"

namespace liefield {

/// Element of Q(i)[t]/(t^d - c): used to evaluate q-identities exactly at a
/// numeric q, where t = q^(1/4) is generally irrational (d = 4, c = q).
/// Inversion solves the multiplication-matrix system and throws
/// DivisionByZero when the element is a zero divisor.
class RootFieldElement {
 public:
  RootFieldElement() = default;
  RootFieldElement(int degree, GaussianRational c, GaussianRational value = {});

  static RootFieldElement generator(int degree, const GaussianRational& c);
  /// Image of a Laurent polynomial under t -> root (t^-1 = t^(d-1)/c).
  static RootFieldElement fromLaurent(int degree, const GaussianRational& c, const LaurentPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const GaussianRational& modulus() const { return c_; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  bool isZero() const;

  RootFieldElement inv() const;
  RootFieldElement& operator+=(const RootFieldElement& o);
  RootFieldElement& operator-=(const RootFieldElement& o);
  RootFieldElement& operator*=(const RootFieldElement& o);
  RootFieldElement& operator/=(const RootFieldElement& o) { return *this *= o.inv(); }
  friend RootFieldElement operator+(RootFieldElement a, const RootFieldElement& b) { return a += b; }
  friend RootFieldElement operator-(RootFieldElement a, const RootFieldElement& b) { return a -= b; }
  friend RootFieldElement operator*(RootFieldElement a, const RootFieldElement& b) { return a *= b; }
  friend RootFieldElement operator/(RootFieldElement a, const RootFieldElement& b) { return a /= b; }
  RootFieldElement operator-() const;
  friend bool operator==(const RootFieldElement& a, const RootFieldElement& b) {
    return a.c_ == b.c_ && a.coeffs_ == b.coeffs_;
  }

  std::string toString() const;

 private:
  void requireCompatible(const RootFieldElement& o) const;

  GaussianRational c_;
  std::vector<GaussianRational> coeffs_;
};

}  // namespace liefield
