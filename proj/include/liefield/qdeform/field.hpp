#pragma once

#include <string>
#include <variant>

#include <gmpxx.h>

#include "liefield/exact/gaussian_rational.hpp"
#include "liefield/exact/qnumber.hpp"
#include "liefield/exact/rational_function.hpp"
#include "liefield/exact/root_field.hpp"

namespace liefield {

// Coefficient contexts for q-dependent operator entries. Each provides
// constant(), fromLaurent() (a Laurent polynomial in t = q^(1/4)), qnum()
// and describe().

/// t kept formal: entries live in Q(i)(t).
class FormalQ {
 public:
  using Scalar = RationalFunction;

  Scalar constant(const GaussianRational& c) const { return RationalFunction(c); }
  Scalar fromLaurent(const LaurentPoly& p) const { return RationalFunction(p); }
  Scalar qnum(HalfInt x, QBase base) const { return qNumberFraction(x, base); }
  std::string label() const { return "formal"; }
  std::string describe() const { return "Q(i)(t), t = q^(1/4)"; }
};

/// t the positive real root of t^d = c, computed in Q(i)[t]/(t^d - c). Used
/// when q^(1/4) is irrational; d = 4, or d = 2 with c = sqrt(q) when q is a
/// rational square.
class RootQ {
 public:
  using Scalar = RootFieldElement;

  RootQ(mpq_class q, int degree, GaussianRational c) : q_(std::move(q)), degree_(degree), c_(std::move(c)) {}

  Scalar constant(const GaussianRational& c) const { return RootFieldElement(degree_, c_, c); }
  Scalar fromLaurent(const LaurentPoly& p) const { return RootFieldElement::fromLaurent(degree_, c_, p); }
  Scalar qnum(HalfInt x, QBase base) const;
  std::string label() const { return "q=" + q_.get_str(); }
  std::string describe() const;

 private:
  mpq_class q_;
  int degree_;
  GaussianRational c_;
};

/// t a rational number. At t = 1 q-numbers are taken as their classical
/// values directly, so this context doubles as the independent q = 1 model.
class PointQ {
 public:
  using Scalar = GaussianRational;

  explicit PointQ(mpq_class t0) : t0_(std::move(t0)) {}

  Scalar constant(const GaussianRational& c) const { return c; }
  Scalar fromLaurent(const LaurentPoly& p) const { return p.evaluate(GaussianRational(t0_)); }
  Scalar qnum(HalfInt x, QBase base) const;
  bool classical() const { return t0_ == 1; }
  std::string label() const { return "q=" + mpq_class(t0_ * t0_ * t0_ * t0_).get_str(); }
  std::string describe() const;

 private:
  mpq_class t0_;
};

using NumericQ = std::variant<RootQ, PointQ>;

/// Exact field for a numeric q > 0 with t = q^(1/4) on the positive real
/// branch. Throws Config for q <= 0.
NumericQ numericField(const mpq_class& q);

}  // namespace liefield
