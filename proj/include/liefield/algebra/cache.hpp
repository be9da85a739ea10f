#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "liefield/algebra/polynomial.hpp"

namespace liefield {

/// On-disk memo of normal-ordered elements, one text file per key. Keys
/// should fold in everything the value depends on (model, element name,
/// engine version); the store only maps strings to polynomials. A corrupt or
/// unreadable entry is treated as a miss, so results never depend on the
/// cache.
class PolynomialStore {
 public:
  explicit PolynomialStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<NCPolynomial> load(const std::string& key) const;
  void store(const std::string& key, const NCPolynomial& value) const;

 private:
  std::filesystem::path file(const std::string& key) const;

  std::filesystem::path dir_;
};

std::string serializePolynomial(const NCPolynomial& p);
/// Throws Domain on malformed input.
NCPolynomial parsePolynomial(const std::string& text);

}  // namespace liefield
