#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "liefield/algebra/monomial.hpp"
#include "liefield/exact/gaussian_rational.hpp"

namespace liefield {

struct Term {
  Monomial mono;
  GaussianRational coeff;
};

/// Sparse linear combination of PBW monomials with exact coefficients.
/// Terms are sorted by MonomialOrder and never zero, so == is structural.
/// Multiplication needs the algebra's relations and lives in Algebra.
class NCPolynomial {
 public:
  NCPolynomial() = default;
  NCPolynomial(const GaussianRational& c);  // NOLINT(implicit)
  NCPolynomial(int c) : NCPolynomial(GaussianRational(c)) {}  // NOLINT(implicit)

  static NCPolynomial monomial(const Monomial& m, const GaussianRational& c = 1);
  static NCPolynomial generator(GenId g) { return monomial(Monomial::generator(g)); }
  /// Takes ownership of unsorted, possibly repeated terms.
  static NCPolynomial fromTerms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  GaussianRational constantTerm() const;
  GaussianRational coeff(const Monomial& m) const;
  int maxDegree() const;
  int maxY() const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  NCPolynomial operator-() const { return scaled(-1); }
  NCPolynomial scaled(const GaussianRational& c) const;
  friend NCPolynomial operator*(const GaussianRational& c, const NCPolynomial& p) { return p.scaled(c); }
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b);

  /// Complex conjugation of every coefficient.
  NCPolynomial conjugated() const;

 private:
  std::vector<Term> terms_;
};

/// Accumulates terms in a hash map; finish() yields the canonical polynomial.
class PolyBuilder {
 public:
  void add(const Monomial& m, const GaussianRational& c);
  void add(const NCPolynomial& p, const GaussianRational& scale = 1);
  void addMul(const Monomial& m, const GaussianRational& a, const GaussianRational& b);
  std::size_t size() const { return acc_.size(); }
  NCPolynomial finish();

 private:
  std::unordered_map<Monomial, GaussianRational, MonomialHash> acc_;
};

}  // namespace liefield
