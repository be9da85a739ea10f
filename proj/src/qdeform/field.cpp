#include "liefield/qdeform/field.hpp"

#include "liefield/error.hpp"

namespace liefield {

namespace {

bool rationalSqrt(const mpq_class& x, mpq_class& out) {
  if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den().get_mpz_t())) {
    return false;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

RootQ::Scalar RootQ::qnum(HalfInt x, QBase base) const {
  auto f = qNumberFraction(x, base);
  return fromLaurent(f.num()) / fromLaurent(f.den());
}

std::string RootQ::describe() const {
  return "Q(i)[t]/(t^" + std::to_string(degree_) + " - " + c_.toString() + "), t = q^(1/4) > 0";
}

PointQ::Scalar PointQ::qnum(HalfInt x, QBase base) const {
  if (classical()) return GaussianRational(mpq_class(x.twice, 2));
  return qNumberFraction(x, base).evaluateAt(GaussianRational(t0_));
}

std::string PointQ::describe() const {
  if (classical()) return "Q(i), q = 1 with classical numbers [x] = x";
  return "Q(i), t = " + t0_.get_str();
}

NumericQ numericField(const mpq_class& q) {
  if (sgn(q) <= 0) throw Error(ErrorKind::Config, "numeric q must be positive, got " + q.get_str());
  mpq_class s;
  if (!rationalSqrt(q, s)) return RootQ(q, 4, GaussianRational(q));
  mpq_class t0;
  if (!rationalSqrt(s, t0)) return RootQ(q, 2, GaussianRational(s));
  return PointQ(t0);
}

}  // namespace liefield
