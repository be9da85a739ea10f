#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liefield/exact/gaussian_rational.hpp"
#include "liefield/lie/presets.hpp"
#include "liefield/report.hpp"

namespace liefield {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}
  static ExactMatrix identity(int n);
  /// E_ij: one at (i,j), zero elsewhere.
  static ExactMatrix unit(int n, int i, int j);
  static ExactMatrix diagonal(const std::vector<int>& d);

  int size() const { return n_; }
  GaussianRational& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const GaussianRational& at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  bool isZero() const;
  /// lambda when the matrix equals lambda * identity.
  std::optional<GaussianRational> scalarValue() const;
  ExactMatrix transposed() const;
  ExactMatrix scaled(const GaussianRational& c) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::string toString() const;

 private:
  int n_ = 0;
  std::vector<GaussianRational> a_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Matrix of L_ij (i < j) in the fundamental representation: -(E_ij - E_ji)
/// when both indices are <= p, E_ij - E_ji when both are > p, E_ij + E_ji
/// for mixed pairs. Throws Domain for indices out of range.
ExactMatrix generatorMatrix(const Signature& sig, int i, int j);

/// X^T g + g X with g = diag(e_k); zero exactly for members of so(p+1,q).
ExactMatrix membershipDefect(const Signature& sig, const ExactMatrix& x);

/// Replacement matrices for selected generators, keyed by (i,j); used to
/// plant deliberate defects.
using MatrixOverrides = std::map<std::pair<int, int>, ExactMatrix>;

/// Compares every matrix commutator [X_a, X_b] against the bracket table of
/// buildSo(sig). One failing check per disagreeing pair.
VerificationReport verifyMatrixBrackets(const Signature& sig, const MatrixOverrides& overrides = {});

struct CasimirMatrix {
  ExactMatrix matrix;
  std::optional<GaussianRational> scalar;
};

/// (1/2) sum_{i,j} X_ij X^{ji} in the fundamental representation.
CasimirMatrix casimirMatrix(const Signature& sig);

}  // namespace liefield
