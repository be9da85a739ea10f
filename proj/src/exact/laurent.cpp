#include "liefield/exact/laurent.hpp"

#include <sstream>
#include <vector>

#include "liefield/error.hpp"

namespace liefield {

namespace {

using Dense = std::vector<GaussianRational>;  // index = exponent, from 0

Dense toDense(const LaurentPoly& p, int shift) {
  Dense d(static_cast<std::size_t>(p.maxExponent() - shift + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

LaurentPoly fromDense(const Dense& d, int shift) {
  LaurentPoly p;
  for (std::size_t k = 0; k < d.size(); ++k) p.addTerm(static_cast<int>(k) + shift, d[k]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back().isZero()) d.pop_back();
}

// Long division of dense polynomials over Q(i); returns {quotient, remainder}.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  Dense q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, GaussianRational());
  GaussianRational lead = b.back().inv();
  const long bs = static_cast<long>(b.size());
  for (long k = static_cast<long>(a.size()) - 1; k >= bs - 1; --k) {
    if (a[k].isZero()) continue;
    GaussianRational f = a[k] * lead;
    long off = k - (bs - 1);
    q[off] = f;
    for (long j = 0; j < bs; ++j) a[off + j] -= f * b[j];
  }
  trim(a);
  return {q, a};
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, const GaussianRational& c) {
  LaurentPoly p;
  p.addTerm(exponent, c);
  return p;
}

int LaurentPoly::minExponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::maxExponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

GaussianRational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussianRational() : it->second;
}

LaurentPoly& LaurentPoly::addTerm(int exponent, const GaussianRational& c) {
  if (c.isZero()) return *this;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.addTerm(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
  LaurentPoly r;
  if (c.isZero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(-e, v);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::inv() const {
  if (isZero()) throw Error(ErrorKind::DivisionByZero, "division by zero in LaurentPoly::inv");
  if (!isMonomial()) {
    throw Error(ErrorKind::NotInvertible, "LaurentPoly::inv: " + toString() + " is not a unit");
  }
  const auto& [e, c] = *terms_.begin();
  return monomial(-e, c.inv());
}

LaurentPoly LaurentPoly::divideExact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.isZero()) throw Error(ErrorKind::DivisionByZero, "division by zero in LaurentPoly::divideExact");
  if (a.isZero()) return {};
  int sa = a.minExponent();
  int sb = b.minExponent();
  auto [q, r] = divmod(toDense(a, sa), toDense(b, sb));
  if (!r.empty()) {
    throw Error(ErrorKind::InexactDivision, "LaurentPoly::divideExact: " + b.toString() +
                                                " does not divide " + a.toString());
  }
  return fromDense(q, sa - sb);
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.isZero() && b.isZero()) return {};
  Dense x = a.isZero() ? Dense{} : toDense(a, a.minExponent());
  Dense y = b.isZero() ? Dense{} : toDense(b, b.minExponent());
  trim(x);
  trim(y);
  while (!y.empty()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  GaussianRational lead = x.back().inv();
  for (auto& c : x) c *= lead;
  LaurentPoly g = fromDense(x, 0);
  return g.shifted(-g.minExponent());
}

GaussianRational LaurentPoly::evaluate(const GaussianRational& t0) const {
  if (t0.isZero() && !terms_.empty() && terms_.begin()->first < 0) {
    throw Error(ErrorKind::Pole, "LaurentPoly::evaluate: negative power of t at t=0");
  }
  GaussianRational sum;
  for (const auto& [e, c] : terms_) sum += c * t0.pow(e);
  return sum;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.toString();
    bool compound = !c.isReal() && !c.isImaginary();
    if (compound) cs = "(" + cs + ")";
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    if (!first && cs[0] == '-') cs = cs.substr(1);
    if (e == 0) {
      os << cs;
    } else {
      if (cs == "1") {
        cs.clear();
      } else if (cs == "-1") {
        cs = "-";
      } else {
        cs += "*";
      }
      os << cs << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace liefield
