#include "liefield/exact/gaussian_rational.hpp"

#include <functional>
#include <ostream>

#include "liefield/error.hpp"

namespace liefield {

const char* kindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::NotIntegral: return "exponent not integral";
    case ErrorKind::InexactDivision: return "inexact division";
    case ErrorKind::NotInvertible: return "not invertible";
    case ErrorKind::NotCentral: return "not central";
    case ErrorKind::UnmappedGenerator: return "unmapped generator";
    case ErrorKind::TermLimit: return "term limit exceeded";
    case ErrorKind::InsufficientOrder: return "insufficient jet order";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Config: return "configuration error";
    case ErrorKind::Degenerate: return "degenerate weight";
  }
  return "unknown";
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in fraction");
  mpq_class q(num, den);
  q.canonicalize();
  return {q};
}

GaussianRational GaussianRational::imag(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in imag");
  mpq_class q(num, den);
  q.canonicalize();
  return {mpq_class(0), q};
}

namespace {

mpq_class parseRational(const std::string& s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(body, 10) != 0) {
    throw Error(ErrorKind::Config, "cannot parse rational '" + s + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "division by zero in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ') text.push_back(c);
  }
  if (text.empty()) throw Error(ErrorKind::Config, "empty number");
  if (text.back() != 'i') return {parseRational(text)};
  text.pop_back();
  // split at the last sign that is not the first character
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {mpq_class(0), parseRational(text)};
  return {parseRational(text.substr(0, split)), parseRational(text.substr(split))};
}

GaussianRational GaussianRational::inv() const {
  if (isZero()) throw Error(ErrorKind::DivisionByZero, "division by zero in GaussianRational::inv");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.isZero()) throw Error(ErrorKind::DivisionByZero, "division by zero in GaussianRational::operator/");
  return *this *= o.inv();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

GaussianRational GaussianRational::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::string GaussianRational::toString() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imPart;
  if (im_ == 1) {
    imPart = "i";
  } else if (im_ == -1) {
    imPart = "-i";
  } else {
    imPart = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imPart;
  if (imPart[0] != '-') imPart = "+" + imPart;
  return re_.get_str() + imPart;
}

std::size_t GaussianRational::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31 + h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.toString(); }

}  // namespace liefield
