#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liefield/algebra/algebra.hpp"
#include "liefield/embedding/lie_field.hpp"
#include "liefield/lie/presets.hpp"
#include "liefield/report.hpp"

namespace liefield {

enum class Sign { Plus, Minus };

inline int signValue(Sign s) { return s == Sign::Plus ? 1 : -1; }
const char* signName(Sign s);

struct DeformOptions {
  /// Y^2 = squareScale * (+-P^2). Anything but 1 is a deliberately broken
  /// context for negative controls.
  GaussianRational squareScale = 1;
  /// Use -+P^2 instead of +-P^2 for Y^2 (wrong-branch control).
  bool flipSquareSign = false;
  EngineOptions engine;
};

/// Poincaré(p,q) extended by a central Y with Y^2 = +-P^2, and the cleared
/// deformed translations M_i = i[Q2, P_i] + 2Y P_i (= 2Y L_{n,i}).
struct EmbeddingContext {
  Signature sig;
  Sign sign = Sign::Plus;
  LieModel poincare;
  std::shared_ptr<const Presentation> extended;
  std::unique_ptr<Algebra> alg;
  NCPolynomial Q2;
  NCPolynomial Psq;
  /// What Y^2 rewrites to.
  NCPolynomial Ysq;
  std::vector<NCPolynomial> M;

  /// Metric entry of the new index: +1 for sign +, -1 for sign -.
  int gnn() const { return signValue(sign); }
  int n() const { return sig.n(); }
  NCPolynomial Y() const { return alg->y(); }
};

EmbeddingContext buildDeformed(const Signature& sig, Sign sign, const DeformOptions& options = {});

/// [M_i, M_j] - 4Y^2 g_nn L_ij and [L_ij, M_k] - (-g_jk M_i + g_ik M_j).
VerificationReport verifyClosure(EmbeddingContext& ctx);

struct CasimirC2 {
  /// 4Y^2 C_2 = 4Y^2 Q2 -+ sum_i g_ii M_i M_i
  NCPolynomial cleared;
  /// 4Y^2 (C_2 + Y^2 + ((p+q)/2)^2)
  NCPolynomial residual;
};

CasimirC2 computeCasimirC2(EmbeddingContext& ctx);

/// Checks on R: centrality, and (n = 4) membership in the span of
/// normal-ordered (P^2)^a W^b and Y (P^2)^a W^b.
VerificationReport analyzeC2Residual(EmbeddingContext& ctx, const CasimirC2& c2);

/// D and sum_i A_0^i L_{n,i}, both free of Y denominators. nOverride
/// substitutes a different n into the coefficients (negative control).
struct Lemma31Elements {
  NCPolynomial D;
  NCPolynomial A0L;
};

Lemma31Elements buildLemma31Elements(EmbeddingContext& ctx, std::optional<int> nOverride = std::nullopt);

/// One point of the convention search for the D, A reconstruction of P_mu.
struct Convention {
  int epsilon0123 = 1;
  /// Q4 (the square) or Q4root in the epsilon term.
  bool epsilonUsesRoot = false;
  /// Y -> yBranch * Y inside D and A.
  int yBranch = 1;

  std::string toString() const;
  static std::optional<Convention> parse(const std::string& text);
  static std::vector<Convention> all();
  friend bool operator==(const Convention&, const Convention&) = default;
};

struct Theorem41Options {
  /// Negative control: C'_2 -> -C'_2.
  bool flipC2prime = false;
  /// Sign-corrected reading: C'_2 = C_2 + 5/2, C'_4 = C_4 + C_2/4 + 9/16,
  /// and +C'_4 wherever D and A carry -C'_4. With it the quartic holds
  /// identically and D, A reproduce P_mu. Off means the printed formulas.
  bool correctedPrimes = false;
};

/// Images of the so(2,3) elements in the deformed Poincaré(0,3) context,
/// through L_ij -> L_ij and L_{i4} -> -M_i / (2Y).
struct Theorem41Images {
  LieFieldElement Q2;
  LieFieldElement Q4;
  LieFieldElement Q4root;
  LieFieldElement C2prime;
  LieFieldElement C4prime;
  /// C_2 and C_4 of so(2,3) as built from the catalog, for cross-checks.
  LieFieldElement C2;
  LieFieldElement C4;
};

class Theorem41 {
 public:
  explicit Theorem41(EmbeddingContext& ctx, Theorem41Options options = {});

  const LieField& field() const { return field_; }
  const Theorem41Images& images() const { return images_; }

  LieFieldElement D(const Convention& c) const;
  LieFieldElement A(const Convention& c, int mu, int nu) const;
  /// 2Y D P_mu - sum_nu A_mu^nu M_nu, the cleared form of D P_mu = A L_{nu 4}
  /// with L_{nu 4} read as M_nu/(2Y).
  LieFieldElement residual(const Convention& c, int mu) const;
  /// Same with the other relative sign (L_{nu 4} = -M_nu/(2Y)).
  LieFieldElement residualOtherSign(const Convention& c, int mu) const;
  /// Y^4 + C'_2 Y^2 + C'_4 with Y^2 -> the context's square.
  LieFieldElement quartic() const;

 private:
  LieFieldElement epsilonTerm(const Convention& c, int mu, int nu) const;
  LieFieldElement L(int i, int j) const;
  LieFieldElement Lup(int i, int j) const;
  LieFieldElement Lmixed(int i, int j) const;
  LieFieldElement Lproduct(int mu, int nu) const;

  EmbeddingContext& ctx_;
  LieField field_;
  Theorem41Images images_;
  /// Sign of C'_4 in D and A.
  int c4Sign_ = -1;
};

struct Theorem41Outcome {
  VerificationReport report;
  std::vector<Convention> passing;
};

/// Tries the requested conventions (all eight when empty) and records which
/// zero all four residuals.
Theorem41Outcome verifyTheorem41(EmbeddingContext& ctx, const std::vector<Convention>& conventions = {},
                                 Theorem41Options options = {});

/// Quartic relation and its spin-zero factorization.
VerificationReport verifyQuartic(EmbeddingContext& ctx, Theorem41Options options = {});

}  // namespace liefield
