#include "liefield/algebra/presentation.hpp"

#include <map>

#include "liefield/error.hpp"

namespace liefield {

namespace {

// Accumulate c * form into acc (keyed by generator, -1 for constants).
void accumulate(std::map<int, GaussianRational>& acc, const LinearForm& form, const GaussianRational& c) {
  for (const auto& [g, v] : form) acc[g] += v * c;
}

bool allZero(const std::map<int, GaussianRational>& acc) {
  for (const auto& [g, v] : acc) {
    if (!v.isZero()) return false;
  }
  return true;
}

}  // namespace

std::optional<GenId> Presentation::find(const std::string& name) const {
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (gens_[k].name == name) return static_cast<GenId>(k);
  }
  return std::nullopt;
}

GenId Presentation::require(const std::string& name) const {
  auto g = find(name);
  if (!g) throw Error(ErrorKind::UnmappedGenerator, "unknown generator " + name);
  return *g;
}

NCPolynomial Presentation::bracketPoly(GenId a, GenId b) const {
  std::vector<Term> terms;
  for (const auto& [g, c] : bracket(a, b)) {
    terms.push_back({g < 0 ? Monomial{} : Monomial::generator(static_cast<GenId>(g)), c});
  }
  return NCPolynomial::fromTerms(std::move(terms));
}

std::shared_ptr<const Presentation> Presentation::withRoot(CentralRoot root) const {
  auto copy = std::make_shared<Presentation>(*this);
  copy->root_ = std::move(root);
  return copy;
}

std::shared_ptr<const Presentation> Presentation::withZ() const {
  auto copy = std::make_shared<Presentation>(*this);
  copy->hasZ_ = true;
  return copy;
}

std::vector<std::array<GenId, 3>> Presentation::structureJacobiViolations() const {
  std::vector<std::array<GenId, 3>> bad;
  const std::size_t n = gens_.size();
  // [[x,y],z] expanded through the table: sum_k c_k [x_k, z]
  auto nested = [&](GenId x, GenId y, GenId z, std::map<int, GaussianRational>& acc) {
    for (const auto& [k, c] : bracket(x, y)) {
      if (k >= 0) accumulate(acc, bracket(static_cast<GenId>(k), z), c);
    }
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::map<int, GaussianRational> acc;
        auto x = static_cast<GenId>(a);
        auto y = static_cast<GenId>(b);
        auto z = static_cast<GenId>(c);
        nested(x, y, z, acc);
        nested(y, z, x, acc);
        nested(z, x, y, acc);
        if (!allZero(acc)) bad.push_back({x, y, z});
      }
    }
  }
  return bad;
}

GenId PresentationBuilder::addGenerator(GeneratorInfo info) {
  if (gens_.size() >= kMaxGenerators) {
    throw Error(ErrorKind::Config, "presentation exceeds " + std::to_string(kMaxGenerators) + " generators");
  }
  gens_.push_back(std::move(info));
  return static_cast<GenId>(gens_.size() - 1);
}

void PresentationBuilder::setBracket(GenId a, GenId b, LinearForm value) {
  LinearForm neg;
  for (const auto& [g, c] : value) neg.emplace_back(g, -c);
  entries_.push_back({{a, b}, std::move(value)});
  entries_.push_back({{b, a}, std::move(neg)});
}

void PresentationBuilder::setBracketOneSided(GenId a, GenId b, LinearForm value) {
  entries_.push_back({{a, b}, std::move(value)});
}

std::shared_ptr<const Presentation> PresentationBuilder::build(Validation validation) {
  auto p = std::make_shared<Presentation>();
  const std::size_t n = gens_.size();
  if (n == 0) throw Error(ErrorKind::Config, "presentation has no generators");
  p->gens_ = gens_;
  p->bracket_.assign(n * n, {});
  for (auto& [key, form] : entries_) {
    LinearForm cleaned;
    for (auto& [g, c] : form) {
      if (!c.isZero()) cleaned.emplace_back(g, c);
    }
    p->bracket_[key.first * n + key.second] = std::move(cleaned);
  }
  if (validation == Validation::Full) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!p->bracket_[a * n + a].empty()) {
        throw Error(ErrorKind::Config, "bracket of " + gens_[a].name + " with itself is nonzero");
      }
      for (std::size_t b = a + 1; b < n; ++b) {
        std::map<int, GaussianRational> sum;
        accumulate(sum, p->bracket_[a * n + b], 1);
        accumulate(sum, p->bracket_[b * n + a], 1);
        if (!allZero(sum)) {
          throw Error(ErrorKind::Config,
                      "bracket not antisymmetric for " + gens_[a].name + ", " + gens_[b].name);
        }
      }
    }
    auto bad = p->structureJacobiViolations();
    if (!bad.empty()) {
      const auto& t = bad.front();
      throw Error(ErrorKind::Config, "Jacobi identity fails for (" + gens_[t[0]].name + ", " +
                                         gens_[t[1]].name + ", " + gens_[t[2]].name + ")");
    }
  }
  return p;
}

}  // namespace liefield
