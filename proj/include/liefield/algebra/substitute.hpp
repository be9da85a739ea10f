#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "liefield/algebra/algebra.hpp"
#include "liefield/error.hpp"
#include "liefield/report.hpp"

namespace liefield {

/// Algebra map from the generators of one presentation into a target ring T.
/// T needs +=, scaling by GaussianRational via scaled(), and a multiply
/// functor. Images of ascending prefixes are cached, so substituting a
/// polynomial whose monomials share prefixes costs one product per distinct
/// prefix.
template <class T, class Mul>
class SubstitutionT {
 public:
  SubstitutionT(const Presentation& source, T one, Mul mul) : source_(source), one_(std::move(one)), mul_(mul) {}

  void map(GenId g, T image) { images_[g] = std::move(image); }
  void mapY(T image) { y_ = std::move(image); }

  T apply(const NCPolynomial& x) {
    std::optional<T> acc;
    for (const auto& t : x.terms()) {
      T img = monomial(t.mono).scaled(t.coeff);
      if (acc) {
        *acc += img;
      } else {
        acc = std::move(img);
      }
    }
    return acc ? *acc : one_.scaled(0);
  }

 private:
  const T& image(GenId g) const {
    auto it = images_.find(g);
    if (it == images_.end()) throw Error(ErrorKind::UnmappedGenerator, "unmapped generator " + source_.info(g).name);
    return it->second;
  }

  T monomial(const Monomial& m) {
    if (m.isOne()) return one_;
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    // peel the highest factor: image(m) = image(m / x_h) * image(x_h)
    Monomial rest = m;
    T last = one_;
    if (rest.z > 0) throw Error(ErrorKind::UnmappedGenerator, "unmapped generator Z");
    if (rest.y > 0) {
      if (!y_) throw Error(ErrorKind::UnmappedGenerator, "unmapped generator Y");
      --rest.y;
      last = *y_;
    } else {
      int h = rest.highest();
      --rest.exps[static_cast<std::size_t>(h)];
      last = image(static_cast<GenId>(h));
    }
    T value = mul_(monomial(rest), last);
    cache_.emplace(m, value);
    return value;
  }

  const Presentation& source_;
  T one_;
  Mul mul_;
  std::map<GenId, T> images_;
  std::optional<T> y_;
  std::unordered_map<Monomial, T, MonomialHash> cache_;
};

/// Substitution into another normal-ordering algebra. Generators mapped to
/// themselves must be mapped explicitly (see identityImages).
class Substitution {
 public:
  Substitution(const Presentation& source, Algebra& target);

  void map(GenId g, NCPolynomial image);
  void map(const std::string& name, NCPolynomial image);
  void mapY(NCPolynomial image);
  /// Throws UnmappedGenerator naming the first generator without an image.
  NCPolynomial apply(const NCPolynomial& x);
  /// Word-by-word image of an unordered expression, factors taken in the
  /// written order.
  NCPolynomial apply(const RawPolynomial& x);

 private:
  struct Mul {
    Algebra* alg;
    NCPolynomial operator()(const NCPolynomial& a, const NCPolynomial& b) const { return alg->multiply(a, b); }
  };
  const Presentation& source_;
  Algebra& target_;
  std::map<GenId, NCPolynomial> images_;
  std::optional<NCPolynomial> y_;
  SubstitutionT<NCPolynomial, Mul> impl_;
};

/// Jacobi identity [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 over every
/// generator triple, evaluated by normal ordering.
VerificationReport checkJacobi(Algebra& alg);

}  // namespace liefield
