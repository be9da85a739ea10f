#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liefield/qdeform/banded.hpp"
#include "liefield/qdeform/field.hpp"
#include "liefield/report.hpp"

namespace liefield {

/// E(2) on Fourier modes of a circle of radius Yval: P_1 = Yval cos, P_2 =
/// Yval sin, L_12 diagonal. The coefficient of L_12 (i or -i) is chosen so the
/// realized brackets are [L_12,P_1] = -P_2 and [L_12,P_2] = P_1.
template <class Ctx>
struct E2Realization {
  using S = typename Ctx::Scalar;

  int window = 0;
  mpq_class Yval;
  /// L_12 basis_m = l12 * m * basis_m.
  GaussianRational l12;
  /// H = -2i L_21 has eigenvalue hSlope * m on basis_m.
  int hSlope = 0;
  BandedOperator<S> P1;
  BandedOperator<S> P2;
  BandedOperator<S> L12;
  BandedOperator<S> H;

  int weight(int m) const { return hSlope * m; }
};

template <class Ctx>
struct TildeGenerators {
  BandedOperator<typename Ctx::Scalar> L31;
  BandedOperator<typename Ctx::Scalar> L32;
};

struct ReconstructOptions {
  /// Negative control: flips the sign of D. This only negates P^, which
  /// the E(2) brackets cannot see; the round trip does.
  bool corruptDSign = false;
  /// Negative control: flips the sign between the two terms inside D, which
  /// rescales P^ mode by mode and breaks the E(2) brackets.
  bool corruptDInner = false;
  /// Replaces [H]_q/[H]_sqrtq by (t^H + t^-H)/[2]_sqrtq, which is the same
  /// function with the removable zero at H = 0 filled in.
  bool continueZeroWeight = false;
};

template <class Ctx>
struct Reconstruction {
  BandedOperator<typename Ctx::Scalar> P1;
  BandedOperator<typename Ctx::Scalar> P2;
  /// Modes whose weight makes [H]_sqrtq vanish.
  std::vector<int> degenerate;
};

enum class CasimirCandidate {
  /// E F + [(H-1)/2]_q^2 - 1/4 with E = L~31 - i L~32, F = L~31 + i L~32.
  Default,
  /// The identity operator; a control.
  Identity,
};

/// Throws Config when window < 4 and Domain when neither orientation of
/// L_12 realizes the brackets.
template <class Ctx>
E2Realization<Ctx> buildE2Realization(const Ctx& ctx, const mpq_class& Yval, int window);

/// L~3i = [([-i L_21]_sqrtq)^2, P_i] / ([2]_sqrtq Y) + P_i.
template <class Ctx>
TildeGenerators<Ctx> buildTildeGenerators(const Ctx& ctx, const E2Realization<Ctx>& e2);

/// P^_1 = D^-1({1 - [H]_q/(2Y[H]_sqrtq)} L~31 + (i[2]_sqrtq/2Y)[H/2]_q L~32)
/// and P^_2 with L~31, L~32 exchanged and the second sign flipped, where
/// D = -([H]_sqrtq^2 - ([H]_q/[H]_sqrtq - 2Y)^2)/(4Y^2). Throws Degenerate
/// naming the modes where D vanishes inside the window.
template <class Ctx>
Reconstruction<Ctx> reconstructTranslations(const Ctx& ctx, const E2Realization<Ctx>& e2,
                                            const TildeGenerators<Ctx>& tilde, ReconstructOptions options = {});

template <class Ctx>
BandedOperator<typename Ctx::Scalar> casimirCandidate(const Ctx& ctx, const E2Realization<Ctx>& e2,
                                                      const TildeGenerators<Ctx>& tilde, CasimirCandidate which);

/// Checks that the candidate equals (Yval^2 - 1/4) times the identity on the
/// interior. Records which U_q relation sets L~31, L~32, H satisfy.
template <class Ctx>
VerificationReport verifyYsqRelation(const Ctx& ctx, const E2Realization<Ctx>& e2, const TildeGenerators<Ctx>& tilde,
                                     CasimirCandidate which = CasimirCandidate::Default);

/// [P_1,P_2] = 0, [L_12,P_1] = -P_2, [L_12,P_2] = P_1 and P_1^2 + P_2^2 =
/// Yval^2 on the interior.
template <class Ctx>
VerificationReport verifyE2Relations(const Ctx& ctx, const E2Realization<Ctx>& e2, const BandedOperator<typename Ctx::Scalar>& P1,
                                     const BandedOperator<typename Ctx::Scalar>& P2);

struct QdeformConfig {
  mpq_class Yval = 2;
  int window = 8;
  /// Empty: formal t only.
  std::vector<mpq_class> qValues;
  bool formal = true;
  CasimirCandidate candidate = CasimirCandidate::Default;
};

/// Every check above, for formal t, each numeric q, and the classical model,
/// plus the t = 1 comparison of the formal operators with the classical ones.
VerificationReport verifyQdeform(const QdeformConfig& config);

}  // namespace liefield
