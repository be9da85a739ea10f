#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liefield/algebra/algebra.hpp"

namespace liefield {

/// Metric signature: e_0..e_p = +1, e_{p+1}..e_{p+q} = -1, n = p+q+1 indices.
struct Signature {
  int p = 0;
  int q = 1;

  int n() const { return p + q + 1; }
  int e(int k) const { return k <= p ? 1 : -1; }
  std::vector<int> metric() const;
  std::string toString() const;
};

/// A presentation together with the index metric it was built from, so that
/// callers can address L_ij (any i != j) and P_k by index.
struct LieModel {
  std::shared_ptr<const Presentation> presentation;
  std::vector<int> metric;
  bool hasTranslations = false;

  int dim() const { return static_cast<int>(metric.size()); }
  int g(int i) const { return metric[static_cast<std::size_t>(i)]; }
  GenId lId(int i, int j) const;
  /// L_ij with L_ji = -L_ij and L_ii = 0.
  NCPolynomial L(int i, int j) const;
  /// L^{ij} = g^{ii} g^{jj} L_ij (diagonal metric, g^{ii} = g_ii).
  NCPolynomial Lup(int i, int j) const { return L(i, j).scaled(g(i) * g(j)); }
  /// Mixed L_i^j = L_ij g^{jj}.
  NCPolynomial Lmixed(int i, int j) const { return L(i, j).scaled(g(j)); }
  NCPolynomial P(int k) const;
};

std::string rotationName(int i, int j);
std::string translationName(int k);

/// so(p+1,q) from the four-term bracket with g = diag(e_k).
LieModel buildSo(const Signature& sig);
/// so over an arbitrary diagonal +-1 metric (used for the so(2,3) of the
/// anti-deformation, whose fifth index carries +1).
LieModel buildSoWithMetric(const std::vector<int>& metric);
/// Lorentz block plus commuting P_k with [L_ij, P_k] = -g_jk P_i + g_ik P_j.
LieModel buildPoincare(const Signature& sig);
/// The metric under which the deformed Poincaré(0,3) generators close into
/// so(2,3): diag(1, -1, -1, -1, +1).
std::vector<int> antiDeSitterMetric();

/// Bracket [L_ij, L_kl] computed from the three-index rule
/// [L_ij, L_jk] = -e_j L_ik (all other brackets zero), as a second
/// construction to compare against the four-term formula.
LinearForm threeIndexBracket(const LieModel& model, GenId a, GenId b);

struct CentralityRecord {
  std::string element;
  std::string over;
  bool central = false;
  std::vector<std::string> failing;
};

/// Named distinguished elements, each normal-ordered, with the centrality
/// checks performed while building them.
class CasimirCatalog {
 public:
  bool has(const std::string& name) const { return elements_.count(name) != 0; }
  const NCPolynomial& get(const std::string& name) const;
  const std::map<std::string, NCPolynomial>& elements() const { return elements_; }
  const std::vector<CentralityRecord>& centrality() const { return centrality_; }

  void put(const std::string& name, NCPolynomial value) { elements_[name] = std::move(value); }
  void record(CentralityRecord r) { centrality_.push_back(std::move(r)); }

 private:
  std::map<std::string, NCPolynomial> elements_;
  std::vector<CentralityRecord> centrality_;
};

/// Catalog names: Q2, Psq, Delta, W, Q4root, Q4, Lsq, C2so23, C4so23,
/// C2prime, C4prime, LambdaRho.
///
/// Q2 needs rotations; Psq, Delta need translations; W needs the 4-D
/// Poincaré model; Q4root, Q4, Lsq need at least indices 0..3; the so(2,3)
/// entries need a five-index model. Requesting an element the model cannot
/// carry throws Config.
CasimirCatalog buildCasimirs(Algebra& alg, const LieModel& model, const std::vector<std::string>& which,
                             bool checkCentrality = true);

/// Generators that fail to commute with x; empty when x is central.
std::vector<std::string> nonCommuting(Algebra& alg, const NCPolynomial& x, const std::vector<GenId>& over);

}  // namespace liefield
