#include "liefield/algebra/substitute.hpp"

namespace liefield {

Substitution::Substitution(const Presentation& source, Algebra& target)
    : source_(source), target_(target), impl_(source, NCPolynomial(1), Mul{&target}) {}

void Substitution::map(GenId g, NCPolynomial image) {
  images_[g] = image;
  impl_.map(g, std::move(image));
}

void Substitution::map(const std::string& name, NCPolynomial image) { map(source_.require(name), std::move(image)); }

void Substitution::mapY(NCPolynomial image) {
  y_ = image;
  impl_.mapY(std::move(image));
}

NCPolynomial Substitution::apply(const NCPolynomial& x) { return impl_.apply(x); }

NCPolynomial Substitution::apply(const RawPolynomial& x) {
  NCPolynomial out;
  for (const auto& rt : x) {
    NCPolynomial acc(rt.coeff);
    for (Symbol s : rt.word) {
      if (s == kSymbolY) {
        if (!y_) throw Error(ErrorKind::UnmappedGenerator, "unmapped generator Y");
        acc = target_.multiply(acc, *y_);
        continue;
      }
      if (s < 0 || static_cast<std::size_t>(s) >= source_.size()) {
        throw Error(ErrorKind::UnmappedGenerator, "symbol " + std::to_string(s) + " is not a generator");
      }
      auto it = images_.find(static_cast<GenId>(s));
      if (it == images_.end()) {
        throw Error(ErrorKind::UnmappedGenerator, "unmapped generator " + source_.info(static_cast<GenId>(s)).name);
      }
      acc = target_.multiply(acc, it->second);
    }
    out += acc;
  }
  return out;
}

VerificationReport checkJacobi(Algebra& alg) {
  VerificationReport rep;
  rep.suite = "jacobi";
  const auto& pres = alg.presentation();
  auto n = pres.size();
  std::size_t triples = 0;
  std::size_t failing = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        auto x = alg.gen(static_cast<GenId>(a));
        auto y = alg.gen(static_cast<GenId>(b));
        auto z = alg.gen(static_cast<GenId>(c));
        NCPolynomial j = alg.commutator(alg.commutator(x, y), z) + alg.commutator(alg.commutator(y, z), x) +
                         alg.commutator(alg.commutator(z, x), y);
        ++triples;
        if (!j.isZero()) {
          ++failing;
          CheckResult r = passFail("jacobi." + pres.info(static_cast<GenId>(a)).name + "," +
                                       pres.info(static_cast<GenId>(b)).name + "," +
                                       pres.info(static_cast<GenId>(c)).name,
                                   false, std::to_string(j.size()));
          r.notes.push_back(alg.format(j));
          rep.add(std::move(r));
        }
      }
    }
  }
  CheckResult all = passFail("jacobi.all", failing == 0, std::to_string(failing));
  all.notes.push_back(std::to_string(triples) + " triples");
  rep.add(std::move(all));
  return rep;
}

}  // namespace liefield
