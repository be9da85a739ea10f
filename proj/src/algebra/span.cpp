#include "liefield/algebra/span.hpp"

#include <unordered_map>

namespace liefield {

std::optional<std::vector<GaussianRational>> solveInSpan(const NCPolynomial& target,
                                                         const std::vector<NCPolynomial>& basis) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> rowOf;
  auto row = [&](const Monomial& m) {
    auto [it, inserted] = rowOf.emplace(m, rowOf.size());
    return it->second;
  };
  for (const auto& b : basis) {
    for (const auto& t : b.terms()) row(t.mono);
  }
  for (const auto& t : target.terms()) row(t.mono);

  const std::size_t cols = basis.size();
  std::vector<std::vector<GaussianRational>> a(rowOf.size(), std::vector<GaussianRational>(cols + 1));
  for (std::size_t k = 0; k < cols; ++k) {
    for (const auto& t : basis[k].terms()) a[rowOf[t.mono]][k] = t.coeff;
  }
  for (const auto& t : target.terms()) a[rowOf[t.mono]][cols] = t.coeff;

  std::vector<std::size_t> pivotCol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].isZero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    GaussianRational inv = a[r][c].inv();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].isZero()) continue;
      GaussianRational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivotCol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i) {
    if (!a[i][cols].isZero()) return std::nullopt;
  }
  std::vector<GaussianRational> sol(cols);
  for (std::size_t i = 0; i < pivotCol.size(); ++i) sol[pivotCol[i]] = a[i][cols];
  return sol;
}

}  // namespace liefield
