#include "liefield/algebra/algebra.hpp"

#include <sstream>

#include "liefield/error.hpp"

namespace liefield {

Algebra::Algebra(std::shared_ptr<const Presentation> presentation, EngineOptions options)
    : pres_(std::move(presentation)), options_(options) {
  if (!pres_) throw Error(ErrorKind::Config, "Algebra: null presentation");
}

NCPolynomial Algebra::y() const {
  if (!pres_->centralRoot()) throw Error(ErrorKind::Config, "Algebra: no central root adjoined");
  Monomial m;
  m.y = 1;
  return NCPolynomial::monomial(m);
}

NCPolynomial Algebra::z() const {
  if (!pres_->hasZ()) throw Error(ErrorKind::Config, "Algebra: no Z symbol");
  Monomial m;
  m.z = 1;
  return NCPolynomial::monomial(m);
}

void Algebra::guard(std::size_t size) const {
  if (size > options_.maxTerms) {
    throw Error(ErrorKind::TermLimit, "term limit exceeded: " + std::to_string(size) + " > " +
                                          std::to_string(options_.maxTerms));
  }
}

void Algebra::leftMulInto(GenId h, const Monomial& m, const GaussianRational& c, PolyBuilder& out) {
  int low = m.lowest();
  if (low < 0 || h <= low) {
    Monomial r = m;
    ++r.exps[h];
    out.add(r, c);
    return;
  }
  if (m.y == 0 && m.z == 0) {
    const NCPolynomial& prod = leftMulGen(h, m);
    for (const auto& t : prod.terms()) out.addMul(t.mono, t.coeff, c);
    return;
  }
  const NCPolynomial& prod = leftMulGen(h, m.withoutCentral());
  for (const auto& t : prod.terms()) {
    Monomial r = t.mono;
    r.y = static_cast<std::uint8_t>(r.y + m.y);
    r.z = static_cast<std::uint8_t>(r.z + m.z);
    out.addMul(r, t.coeff, c);
  }
}

// x_h * m for a central-free normal monomial m whose lowest generator g < h:
// x_h x_g rest = x_g (x_h rest) + [x_h, x_g] rest.
const NCPolynomial& Algebra::leftMulGen(GenId h, const Monomial& m) {
  Key key{h, m};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  auto g = static_cast<GenId>(m.lowest());
  Monomial rest = m;
  --rest.exps[g];

  PolyBuilder inner;
  leftMulInto(h, rest, 1, inner);
  NCPolynomial innerPoly = inner.finish();

  PolyBuilder out;
  for (const auto& t : innerPoly.terms()) leftMulInto(g, t.mono, t.coeff, out);
  for (const auto& [k, c] : pres_->bracket(h, g)) {
    if (k < 0) {
      out.add(rest, c);
    } else {
      leftMulInto(static_cast<GenId>(k), rest, c, out);
    }
  }
  auto [it, inserted] = memo_.emplace(key, out.finish());
  return it->second;
}

std::vector<Term> Algebra::leftMulTerms(GenId h, const std::vector<Term>& terms) {
  PolyBuilder b;
  for (const auto& t : terms) leftMulInto(h, t.mono, t.coeff, b);
  guard(b.size());
  return b.finish().terms();
}

const NCPolynomial& Algebra::squarePower(int k) {
  const auto& root = pres_->centralRoot();
  if (squarePowers_.empty()) squarePowers_.push_back(NCPolynomial(1));
  while (static_cast<int>(squarePowers_.size()) <= k) {
    NCPolynomial next = multiply(squarePowers_.back(), root->square);
    squarePowers_.push_back(std::move(next));
  }
  return squarePowers_[static_cast<std::size_t>(k)];
}

NCPolynomial Algebra::reduceCentral(std::vector<Term> terms) {
  bool needs = false;
  for (const auto& t : terms) needs = needs || t.mono.y >= 2;
  if (!needs) return NCPolynomial::fromTerms(std::move(terms));
  if (!pres_->centralRoot()) throw Error(ErrorKind::Config, "Y used without an adjoined central root");

  PolyBuilder out;
  for (auto& t : terms) {
    if (t.mono.y < 2) {
      out.add(t.mono, t.coeff);
      continue;
    }
    int k = t.mono.y / 2;
    Monomial base = t.mono;
    base.y = static_cast<std::uint8_t>(t.mono.y % 2);
    // square^k is central and Y-free, so multiplying on the left is safe
    NCPolynomial s = squarePower(k);
    for (const auto& st : s.terms()) {
      std::vector<Term> piece{{base, 1}};
      const Monomial& sm = st.mono;
      for (int g = sm.highest(); g >= 0; --g) {
        for (int e = 0; e < sm.exps[static_cast<std::size_t>(g)]; ++e) {
          piece = leftMulTerms(static_cast<GenId>(g), piece);
        }
      }
      for (auto& pt : piece) {
        pt.mono.z = static_cast<std::uint8_t>(pt.mono.z + sm.z);
        out.addMul(pt.mono, pt.coeff, st.coeff * t.coeff);
      }
    }
  }
  guard(out.size());
  return out.finish();
}

NCPolynomial Algebra::multiply(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  PolyBuilder out;
  for (const auto& ta : a.terms()) {
    const Monomial& am = ta.mono;
    std::vector<Term> cur = b.terms();
    for (int g = am.highest(); g >= 0; --g) {
      for (int e = 0; e < am.exps[static_cast<std::size_t>(g)]; ++e) {
        cur = leftMulTerms(static_cast<GenId>(g), cur);
      }
    }
    for (auto& t : cur) {
      t.mono.y = static_cast<std::uint8_t>(t.mono.y + am.y);
      t.mono.z = static_cast<std::uint8_t>(t.mono.z + am.z);
      out.addMul(t.mono, t.coeff, ta.coeff);
    }
    guard(out.size());
  }
  return reduceCentral(out.finish().terms());
}

NCPolynomial Algebra::multiply(std::initializer_list<NCPolynomial> factors) {
  NCPolynomial r(1);
  for (const auto& f : factors) r = multiply(r, f);
  return r;
}

NCPolynomial Algebra::power(const NCPolynomial& a, int k) {
  if (k < 0) throw Error(ErrorKind::Domain, "Algebra::power: negative exponent");
  NCPolynomial r(1);
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

NCPolynomial Algebra::commutator(const NCPolynomial& a, const NCPolynomial& b) {
  return multiply(a, b) - multiply(b, a);
}

NCPolynomial Algebra::normalOrder(const std::vector<Symbol>& word) {
  return normalOrder(RawPolynomial{{1, word}});
}

NCPolynomial Algebra::normalOrder(const RawPolynomial& raw) {
  PolyBuilder out;
  for (const auto& rt : raw) {
    std::vector<Term> cur{{Monomial{}, 1}};
    int y = 0;
    int z = 0;
    for (auto it = rt.word.rbegin(); it != rt.word.rend(); ++it) {
      Symbol s = *it;
      if (s == kSymbolY) {
        if (!pres_->centralRoot()) throw Error(ErrorKind::Config, "Y used without an adjoined central root");
        ++y;
      } else if (s == kSymbolZ) {
        if (!pres_->hasZ()) throw Error(ErrorKind::Config, "Z used but not declared");
        ++z;
      } else {
        if (s < 0 || static_cast<std::size_t>(s) >= pres_->size()) {
          throw Error(ErrorKind::UnmappedGenerator, "symbol " + std::to_string(s) + " is not a generator");
        }
        cur = leftMulTerms(static_cast<GenId>(s), cur);
      }
    }
    for (auto& t : cur) {
      t.mono.y = static_cast<std::uint8_t>(t.mono.y + y);
      t.mono.z = static_cast<std::uint8_t>(t.mono.z + z);
      out.addMul(t.mono, t.coeff, rt.coeff);
    }
  }
  return reduceCentral(out.finish().terms());
}

std::string Algebra::format(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    first = false;
  };
  for (std::size_t g = 0; g < pres_->size(); ++g) emit(pres_->info(static_cast<GenId>(g)).name, m.exps[g]);
  emit(pres_->centralRoot() ? pres_->centralRoot()->name : "Y", m.y);
  emit("Z", m.z);
  if (first) os << "1";
  return os.str();
}

std::string Algebra::format(const NCPolynomial& p) const {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = t.coeff.toString();
    bool compound = !t.coeff.isReal() && !t.coeff.isImaginary();
    if (compound) c = "(" + c + ")";
    bool neg = c[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    if (neg && !first) c = c.substr(1);
    if (t.mono.isOne()) {
      os << c;
    } else {
      if (c == "1") {
        c.clear();
      } else if (c == "-1") {
        c = "-";
      } else {
        c += "*";
      }
      os << c << format(t.mono);
    }
    first = false;
  }
  return os.str();
}

std::shared_ptr<const Presentation> adjoinCentralRoot(const std::shared_ptr<const Presentation>& base,
                                                      const std::string& name, const NCPolynomial& square) {
  if (square.maxY() > 0) throw Error(ErrorKind::Config, "adjoinCentralRoot: square must not contain Y");
  Algebra alg(base);
  for (std::size_t g = 0; g < base->size(); ++g) {
    NCPolynomial c = alg.commutator(square, alg.gen(static_cast<GenId>(g)));
    if (!c.isZero()) {
      throw Error(ErrorKind::NotCentral, "adjoinCentralRoot: square of " + name + " does not commute with " +
                                             base->info(static_cast<GenId>(g)).name);
    }
  }
  return base->withRoot({name, square});
}

}  // namespace liefield
