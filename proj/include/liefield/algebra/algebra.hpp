#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "liefield/algebra/cache.hpp"
#include "liefield/algebra/polynomial.hpp"
#include "liefield/algebra/presentation.hpp"

namespace liefield {

/// Word symbol for unordered input: a generator id, or one of the central
/// symbols.
using Symbol = int;
inline constexpr Symbol kSymbolY = -1;
inline constexpr Symbol kSymbolZ = -2;

struct RawTerm {
  GaussianRational coeff;
  std::vector<Symbol> word;
};

/// Arbitrary (not yet ordered) linear combination of words.
using RawPolynomial = std::vector<RawTerm>;

struct EngineOptions {
  /// Abort any product whose accumulator exceeds this many terms.
  std::size_t maxTerms = 50'000'000;
  /// Optional on-disk memo for catalog elements built without centrality
  /// checks; a pure speed-up.
  std::shared_ptr<const PolynomialStore> cache;
};

/// PBW normal-ordering engine over one presentation.
///
/// Products are computed by pushing generators leftwards through normal
/// words with x_h x_g = x_g x_h + [x_h, x_g] for h > g; the result of
/// x_h * (normal word) is memoized. Y^2 is rewritten to the adjoined square
/// until every exponent of Y is 0 or 1. An Algebra owns a mutable cache and
/// must not be shared between threads; the presentation itself is shared.
class Algebra {
 public:
  explicit Algebra(std::shared_ptr<const Presentation> presentation, EngineOptions options = {});

  const Presentation& presentation() const { return *pres_; }
  const std::shared_ptr<const Presentation>& presentationPtr() const { return pres_; }
  const EngineOptions& options() const { return options_; }

  NCPolynomial gen(GenId g) const { return NCPolynomial::generator(g); }
  NCPolynomial gen(const std::string& name) const { return gen(pres_->require(name)); }
  NCPolynomial y() const;
  NCPolynomial z() const;

  NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b);
  NCPolynomial multiply(std::initializer_list<NCPolynomial> factors);
  NCPolynomial power(const NCPolynomial& a, int k);
  NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b);
  NCPolynomial normalOrder(const RawPolynomial& raw);
  NCPolynomial normalOrder(const std::vector<Symbol>& word);

  /// Human-readable form using generator names.
  std::string format(const NCPolynomial& p) const;
  std::string format(const Monomial& m) const;

  std::size_t cacheSize() const { return memo_.size(); }

 private:
  struct Key {
    GenId h;
    Monomial m;
    friend bool operator==(const Key& a, const Key& b) { return a.h == b.h && a.m == b.m; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.m.hash() * 131 + k.h; }
  };

  void leftMulInto(GenId h, const Monomial& m, const GaussianRational& c, PolyBuilder& out);
  const NCPolynomial& leftMulGen(GenId h, const Monomial& m);
  std::vector<Term> leftMulTerms(GenId h, const std::vector<Term>& terms);
  NCPolynomial reduceCentral(std::vector<Term> terms);
  const NCPolynomial& squarePower(int k);
  void guard(std::size_t size) const;

  std::shared_ptr<const Presentation> pres_;
  EngineOptions options_;
  std::unordered_map<Key, NCPolynomial, KeyHash> memo_;
  std::vector<NCPolynomial> squarePowers_;
};

/// Extends A by a central symbol Y with Y^2 = square. Throws NotCentral,
/// naming the first generator that fails to commute with square.
std::shared_ptr<const Presentation> adjoinCentralRoot(const std::shared_ptr<const Presentation>& base,
                                                      const std::string& name, const NCPolynomial& square);

}  // namespace liefield
