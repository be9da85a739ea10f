#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "liefield/embedding/embedding.hpp"
#include "liefield/exact/gaussian_rational.hpp"
#include "liefield/report.hpp"

namespace liefield {

enum class Series { Discrete, Continuous };

const char* seriesName(Series s);
std::optional<Series> parseSeries(const std::string& text);

/// One spectral parameter of the hyperbolic-space Laplacian and what it
/// turns into through the Y^2 relation. Fields after s are filled by
/// spectrumEigenvalue and tachyonMass.
struct SpectralPoint {
  Series series = Series::Continuous;
  /// An integer for the discrete series, purely imaginary for the continuous.
  GaussianRational s;
  /// Eigenvalue before the shift: [s + (p+q-1)/2]^2 or s^2.
  mpq_class shifted;
  mpq_class C2eig;
  std::optional<mpq_class> Ysq;
  std::optional<mpq_class> Psq;
  std::optional<mpq_class> massSq;
  bool tachyonic = false;
};

/// Fills shifted and C2eig = shifted - ((p+q-1)/2)^2 for the hyperbolic
/// space with parameters (p,q). Throws Domain when s is out of range, and
/// for any discrete point when q = 1.
SpectralPoint spectrumEigenvalue(int p, int q, SpectralPoint point);

/// Parameters of the hyperbolic space whose spectrum feeds the deformation
/// of Poincare(target) with the given sign: (p+1,q) for +, (p,q+1) for -.
Signature spectralSignature(const Signature& target, Sign sign);

/// Ysq = -(C2eig + ((p+q)/2)^2), Psq = +-Ysq, massSq = -Psq. Throws Domain
/// "Y not strictly positive" when Ysq <= 0.
SpectralPoint tachyonMass(SpectralPoint point, const Signature& target, Sign sign);

/// Parses "continuous:2i" or "discrete:1".
SpectralPoint parseSpectralPoint(const std::string& text);

/// The two readings of the domain inequality on C~2 + ((p+q)/2)^2 for one
/// point: as printed (> 0 for sign +, < 0 for sign -) and the one forced by
/// Y^2 > 0 (< 0 for both signs).
struct InequalityReadings {
  mpq_class value;
  bool printed = false;
  bool positivity = false;
};
InequalityReadings inequalityReadings(const SpectralPoint& point, const Signature& target, Sign sign);

/// Spectra suite: the requested points (all defaults when none given) run
/// through spectrumEigenvalue and tachyonMass, plus the fixed arithmetic
/// checks.
VerificationReport verifySpectra(const Signature& target, Sign sign, const std::vector<std::string>& points);

}  // namespace liefield
