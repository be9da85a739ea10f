#include "liefield/shell/jet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace liefield {

namespace {

void enumerate(int vars, int degree, std::vector<int>& cur, int pos, std::vector<std::vector<int>>& out) {
  if (pos == vars - 1) {
    cur[static_cast<std::size_t>(pos)] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate(vars, degree - e, cur, pos + 1, out);
  }
}

}  // namespace

JetSpace::JetSpace(int vars, int order) : vars_(vars), order_(order) {
  if (vars < 1 || order < 0) throw Error(ErrorKind::Config, "jet space needs vars >= 1 and order >= 0");
  std::vector<int> cur(static_cast<std::size_t>(vars), 0);
  for (int d = 0; d <= order; ++d) {
    std::vector<std::vector<int>> level;
    enumerate(vars, d, cur, 0, level);
    for (auto& e : level) {
      exps_.push_back(e);
      degree_.push_back(d);
    }
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < exps_.size(); ++i) index[exps_[i]] = i;

  products_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      if (degree_[i] + degree_[j] > order) continue;
      std::vector<int> e = exps_[i];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += exps_[j][v];
      products_[i].emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(index.at(e)));
    }
  }
  deriv_.assign(static_cast<std::size_t>(vars), std::vector<std::pair<int, int>>(exps_.size(), {0, -1}));
  for (int v = 0; v < vars; ++v) {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      int ev = exps_[i][static_cast<std::size_t>(v)];
      if (ev == 0) continue;
      std::vector<int> e = exps_[i];
      --e[static_cast<std::size_t>(v)];
      deriv_[static_cast<std::size_t>(v)][i] = {ev, static_cast<int>(index.at(e))};
    }
  }
}

std::shared_ptr<const JetSpace> JetSpace::get(int vars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{vars, order}];
  if (!slot) slot.reset(new JetSpace(vars, order));
  return slot;
}

std::size_t JetSpace::indexOf(const std::vector<int>& e) const {
  auto it = std::find(exps_.begin(), exps_.end(), e);
  if (it == exps_.end()) throw Error(ErrorKind::Domain, "exponent outside the jet space");
  return static_cast<std::size_t>(it - exps_.begin());
}

mpq_class ScalarOps<mpq_class>::sqrt(const mpq_class& x) {
  if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den().get_mpz_t())) {
    throw Error(ErrorKind::Domain, "exact jet sqrt of a non-square " + x.get_str());
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
  return mpq_class(n, d);
}

Quad ScalarOps<Quad>::sqrt(const Quad& x) { return boost::multiprecision::sqrt(x); }

std::string ScalarOps<Quad>::format(const Quad& x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace liefield
