#include "liefield/exact/root_field.hpp"

#include <sstream>

#include "liefield/error.hpp"

namespace liefield {

RootFieldElement::RootFieldElement(int degree, GaussianRational c, GaussianRational value)
    : c_(std::move(c)), coeffs_(static_cast<std::size_t>(degree)) {
  if (degree < 1) throw Error(ErrorKind::Config, "RootFieldElement: degree must be positive");
  if (c_.isZero()) throw Error(ErrorKind::Config, "RootFieldElement: t^d = 0 is not a field");
  coeffs_[0] = std::move(value);
}

RootFieldElement RootFieldElement::generator(int degree, const GaussianRational& c) {
  if (degree == 1) return {1, c, c};
  RootFieldElement r(degree, c);
  r.coeffs_[1] = 1;
  return r;
}

RootFieldElement RootFieldElement::fromLaurent(int degree, const GaussianRational& c, const LaurentPoly& p) {
  RootFieldElement r(degree, c);
  GaussianRational cInv = c.inv();
  for (const auto& [e, v] : p.terms()) {
    // t^e = t^(e mod d) * c^(floor(e/d))
    int q = e >= 0 ? e / degree : -((-e + degree - 1) / degree);
    int rem = e - q * degree;
    GaussianRational scale = q >= 0 ? c.pow(q) : cInv.pow(-q);
    r.coeffs_[static_cast<std::size_t>(rem)] += v * scale;
  }
  return r;
}

bool RootFieldElement::isZero() const {
  for (const auto& v : coeffs_) {
    if (!v.isZero()) return false;
  }
  return true;
}

void RootFieldElement::requireCompatible(const RootFieldElement& o) const {
  if (o.coeffs_.size() != coeffs_.size() || !(o.c_ == c_)) {
    throw Error(ErrorKind::Config, "RootFieldElement: mixing different extensions");
  }
}

RootFieldElement& RootFieldElement::operator+=(const RootFieldElement& o) {
  requireCompatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

RootFieldElement& RootFieldElement::operator-=(const RootFieldElement& o) {
  requireCompatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

RootFieldElement& RootFieldElement::operator*=(const RootFieldElement& o) {
  requireCompatible(o);
  const std::size_t d = coeffs_.size();
  std::vector<GaussianRational> out(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (coeffs_[a].isZero()) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (o.coeffs_[b].isZero()) continue;
      GaussianRational prod = coeffs_[a] * o.coeffs_[b];
      if (a + b >= d) {
        out[a + b - d] += prod * c_;
      } else {
        out[a + b] += prod;
      }
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

RootFieldElement RootFieldElement::operator-() const {
  RootFieldElement r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

RootFieldElement RootFieldElement::inv() const {
  const std::size_t d = coeffs_.size();
  // Column j of the matrix is this * t^j; solve M x = e_0.
  std::vector<std::vector<GaussianRational>> m(d, std::vector<GaussianRational>(d + 1));
  RootFieldElement col = *this;
  RootFieldElement t = generator(static_cast<int>(d), c_);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
    col *= t;
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c].isZero()) ++piv;
    if (piv == d) {
      throw Error(ErrorKind::DivisionByZero,
                  "division by zero in RootFieldElement::inv: " + toString() + " is a zero divisor");
    }
    std::swap(m[piv], m[c]);
    GaussianRational pinv = m[c][c].inv();
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= pinv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].isZero()) continue;
      GaussianRational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  RootFieldElement r(static_cast<int>(d), c_);
  for (std::size_t i = 0; i < d; ++i) r.coeffs_[i] = m[i][d];
  return r;
}

std::string RootFieldElement::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k];
  }
  os << "] mod t^" << coeffs_.size() << "-" << c_;
  return os.str();
}

}  // namespace liefield
