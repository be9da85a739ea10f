#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace liefield {

/// Exact element of Q(i): re + im*i with both parts arbitrary-precision
/// rationals kept in lowest terms.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(implicit)
  GaussianRational(int v) : re_(v) {}   // NOLINT(implicit)
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational fraction(long num, long den);
  static GaussianRational imag(long num, long den = 1);
  static GaussianRational i() { return imag(1); }
  /// Parses "3", "-1/2", "2i", "1/2-3/4i", "i", "-i".
  static GaussianRational parse(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isOne() const { return re_ == 1 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }
  bool isImaginary() const { return sgn(re_) == 0; }
  bool isInteger() const { return isReal() && re_.get_den() == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws Error(DivisionByZero) when zero.
  GaussianRational inv() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Arbitrary but total order (re first, then im); used for canonical output only.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  GaussianRational pow(int k) const;
  std::string toString() const;
  std::size_t hash() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace liefield
