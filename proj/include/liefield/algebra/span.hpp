#pragma once

#include <optional>
#include <vector>

#include "liefield/algebra/polynomial.hpp"

namespace liefield {

/// Coefficients c with sum_k c_k basis[k] == target, by exact Gaussian
/// elimination over the monomial coordinates; nullopt when target is not in
/// the span. The returned solution sets free variables to zero.
std::optional<std::vector<GaussianRational>> solveInSpan(const NCPolynomial& target,
                                                         const std::vector<NCPolynomial>& basis);

}  // namespace liefield
