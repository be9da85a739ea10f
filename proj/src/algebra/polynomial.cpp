#include "liefield/algebra/polynomial.hpp"

#include <algorithm>

namespace liefield {

namespace {

bool termLess(const Term& a, const Term& b) { return MonomialOrder{}(a.mono, b.mono); }

}  // namespace

NCPolynomial::NCPolynomial(const GaussianRational& c) {
  if (!c.isZero()) terms_.push_back({Monomial{}, c});
}

NCPolynomial NCPolynomial::monomial(const Monomial& m, const GaussianRational& c) {
  NCPolynomial p;
  if (!c.isZero()) p.terms_.push_back({m, c});
  return p;
}

NCPolynomial NCPolynomial::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), termLess);
  NCPolynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.isZero()) p.terms_.pop_back();
    } else if (!t.coeff.isZero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool NCPolynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne());
}

GaussianRational NCPolynomial::constantTerm() const {
  if (!terms_.empty() && terms_[0].mono.isOne()) return terms_[0].coeff;
  return {};
}

GaussianRational NCPolynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, {}}, termLess);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return {};
}

int NCPolynomial::maxDegree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int NCPolynomial::maxY() const {
  int y = 0;
  for (const auto& t : terms_) y = std::max(y, static_cast<int>(t.mono.y));
  return y;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && termLess(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || termLess(*b, *a)) {
      out.push_back(*b++);
    } else {
      GaussianRational c = a->coeff + b->coeff;
      if (!c.isZero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) { return *this += -o; }

NCPolynomial NCPolynomial::scaled(const GaussianRational& c) const {
  NCPolynomial r;
  if (c.isZero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff)) return false;
  }
  return true;
}

NCPolynomial NCPolynomial::conjugated() const {
  NCPolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff.conj();
  return r;
}

void PolyBuilder::add(const Monomial& m, const GaussianRational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::addMul(const Monomial& m, const GaussianRational& a, const GaussianRational& b) {
  auto [it, inserted] = acc_.try_emplace(m);
  if (inserted) {
    it->second = a * b;
  } else {
    it->second += a * b;
  }
}

void PolyBuilder::add(const NCPolynomial& p, const GaussianRational& scale) {
  if (scale.isZero()) return;
  if (scale.isOne()) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff);
  } else {
    for (const auto& t : p.terms()) addMul(t.mono, t.coeff, scale);
  }
}

NCPolynomial PolyBuilder::finish() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (!c.isZero()) terms.push_back({m, std::move(c)});
  }
  acc_.clear();
  return NCPolynomial::fromTerms(std::move(terms));
}

}  // namespace liefield
