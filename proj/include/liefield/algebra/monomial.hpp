#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>

namespace liefield {

using GenId = std::uint8_t;

inline constexpr std::size_t kMaxGenerators = 40;

/// PBW monomial x_0^e0 x_1^e1 ... Y^y Z^z with generators ascending in the
/// presentation order. Storing dense exponents makes "ascending word" an
/// invariant of the type rather than something to re-check.
struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> exps{};
  std::uint8_t y = 0;
  std::uint8_t z = 0;

  static Monomial generator(GenId g) {
    Monomial m;
    m.exps[g] = 1;
    return m;
  }

  bool isOne() const { return degree() == 0 && y == 0 && z == 0; }

  /// Degree in the Lie generators (Y and Z excluded).
  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  /// Lowest generator present, or -1.
  int lowest() const {
    for (std::size_t k = 0; k < kMaxGenerators; ++k) {
      if (exps[k]) return static_cast<int>(k);
    }
    return -1;
  }

  /// Highest generator present, or -1.
  int highest() const {
    for (std::size_t k = kMaxGenerators; k-- > 0;) {
      if (exps[k]) return static_cast<int>(k);
    }
    return -1;
  }

  Monomial withoutCentral() const {
    Monomial m = *this;
    m.y = 0;
    m.z = 0;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.y == b.y && a.z == b.z && a.exps == b.exps;
  }

  std::size_t hash() const {
    // FNV-1a over the raw bytes
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps) h = (h ^ e) * 1099511628211ull;
    h = (h ^ y) * 1099511628211ull;
    h = (h ^ z) * 1099511628211ull;
    return h;
  }
};

/// Canonical term order: Lie degree, then central exponents, then exponent
/// vector (descending, so P0^2 sorts before P0 P1).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    if (a.y != b.y) return a.y < b.y;
    if (a.z != b.z) return a.z < b.z;
    return a.exps > b.exps;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace liefield
