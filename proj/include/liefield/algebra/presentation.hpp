#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liefield/algebra/monomial.hpp"
#include "liefield/algebra/polynomial.hpp"

namespace liefield {

enum class GeneratorKind { Rotation, Translation };

struct GeneratorInfo {
  std::string name;
  GeneratorKind kind = GeneratorKind::Rotation;
  int i = 0;  // Rotation: L_ij with i < j. Translation: P_i.
  int j = 0;
};

/// Degree <= 1 bracket value: pairs (generator, coefficient); generator -1
/// stands for the constant 1.
using LinearForm = std::vector<std::pair<int, GaussianRational>>;

struct CentralRoot {
  std::string name;
  NCPolynomial square;  // central, Y-free
};

/// Immutable finitely presented Lie-type algebra. Generator index order is
/// the PBW order. Built through PresentationBuilder, which enforces
/// antisymmetry and (unless told otherwise) the Jacobi identity.
class Presentation {
 public:
  std::size_t size() const { return gens_.size(); }
  const GeneratorInfo& info(GenId g) const { return gens_[g]; }
  const std::vector<GeneratorInfo>& generators() const { return gens_; }
  std::optional<GenId> find(const std::string& name) const;
  /// Throws UnmappedGenerator when absent.
  GenId require(const std::string& name) const;

  const LinearForm& bracket(GenId a, GenId b) const { return bracket_[a * gens_.size() + b]; }
  /// Bracket as a polynomial.
  NCPolynomial bracketPoly(GenId a, GenId b) const;

  const std::optional<CentralRoot>& centralRoot() const { return root_; }
  bool hasZ() const { return hasZ_; }

  /// Copy with Y adjoined; centrality is the caller's responsibility (see
  /// adjoinCentralRoot, which checks it).
  std::shared_ptr<const Presentation> withRoot(CentralRoot root) const;
  std::shared_ptr<const Presentation> withZ() const;

  /// Jacobi identity from structure constants alone: returns the failing
  /// triples (i<j<k).
  std::vector<std::array<GenId, 3>> structureJacobiViolations() const;

 private:
  friend class PresentationBuilder;

  std::vector<GeneratorInfo> gens_;
  std::vector<LinearForm> bracket_;
  std::optional<CentralRoot> root_;
  bool hasZ_ = false;
};

enum class Validation { Full, Skip };

class PresentationBuilder {
 public:
  GenId addGenerator(GeneratorInfo info);
  /// Sets [a,b] = value and [b,a] = -value.
  void setBracket(GenId a, GenId b, LinearForm value);
  /// Overwrites only the (a,b) entry; for deliberately broken fixtures.
  void setBracketOneSided(GenId a, GenId b, LinearForm value);
  std::shared_ptr<const Presentation> build(Validation validation = Validation::Full);

 private:
  std::vector<GeneratorInfo> gens_;
  std::vector<std::pair<std::pair<GenId, GenId>, LinearForm>> entries_;
};

}  // namespace liefield
