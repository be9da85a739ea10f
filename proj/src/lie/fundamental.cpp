#include "liefield/lie/fundamental.hpp"

#include <sstream>

#include "liefield/error.hpp"

namespace liefield {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::unit(int n, int i, int j) {
  ExactMatrix m(n);
  m.at(i, j) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<int>& d) {
  ExactMatrix m(static_cast<int>(d.size()));
  for (std::size_t k = 0; k < d.size(); ++k) m.at(static_cast<int>(k), static_cast<int>(k)) = d[k];
  return m;
}

bool ExactMatrix::isZero() const {
  for (const auto& x : a_) {
    if (!x.isZero()) return false;
  }
  return true;
}

std::optional<GaussianRational> ExactMatrix::scalarValue() const {
  if (n_ == 0) return std::nullopt;
  GaussianRational lambda = at(0, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j ? lambda : GaussianRational(0))) return std::nullopt;
    }
  }
  return lambda;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.n_ != n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.n_ != n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Domain, "matrix size mismatch");
  ExactMatrix r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      if (a.at(i, k).isZero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        if (!b.at(k, j).isZero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return r;
}

std::string ExactMatrix::toString() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix generatorMatrix(const Signature& sig, int i, int j) {
  int n = sig.n();
  if (i < 0 || j <= i || j >= n) {
    throw Error(ErrorKind::Domain, "generatorMatrix: need 0 <= i < j <= " + std::to_string(n - 1));
  }
  ExactMatrix eij = ExactMatrix::unit(n, i, j);
  ExactMatrix eji = ExactMatrix::unit(n, j, i);
  if (j <= sig.p) return (eij - eji).scaled(-1);
  if (i > sig.p) return eij - eji;
  return eij + eji;
}

ExactMatrix membershipDefect(const Signature& sig, const ExactMatrix& x) {
  ExactMatrix g = ExactMatrix::diagonal(sig.metric());
  return x.transposed() * g + g * x;
}

VerificationReport verifyMatrixBrackets(const Signature& sig, const MatrixOverrides& overrides) {
  VerificationReport rep;
  rep.suite = "matrix-brackets";
  LieModel model = buildSo(sig);
  const auto& pres = *model.presentation;
  std::vector<ExactMatrix> mats;
  for (std::size_t g = 0; g < pres.size(); ++g) {
    const auto& in = pres.info(static_cast<GenId>(g));
    auto it = overrides.find({in.i, in.j});
    mats.push_back(it != overrides.end() ? it->second : generatorMatrix(sig, in.i, in.j));
  }
  std::size_t pairs = 0;
  std::size_t failing = 0;
  for (std::size_t a = 0; a < mats.size(); ++a) {
    for (std::size_t b = a + 1; b < mats.size(); ++b) {
      ++pairs;
      ExactMatrix expect(sig.n());
      for (const auto& [k, c] : pres.bracket(static_cast<GenId>(a), static_cast<GenId>(b))) {
        expect += mats[static_cast<std::size_t>(k)].scaled(c);
      }
      ExactMatrix residual = commutator(mats[a], mats[b]) - expect;
      if (!residual.isZero()) {
        ++failing;
        CheckResult r = passFail(
            "bracket." + pres.info(static_cast<GenId>(a)).name + "," + pres.info(static_cast<GenId>(b)).name, false,
            residual.toString());
        rep.add(std::move(r));
      }
    }
  }
  CheckResult all = passFail("bracket.all", failing == 0, std::to_string(failing));
  all.notes.push_back(std::to_string(pairs) + " pairs");
  rep.add(std::move(all));
  return rep;
}

CasimirMatrix casimirMatrix(const Signature& sig) {
  int n = sig.n();
  auto X = [&](int i, int j) {
    if (i == j) return ExactMatrix(n);
    return i < j ? generatorMatrix(sig, i, j) : generatorMatrix(sig, j, i).scaled(-1);
  };
  ExactMatrix q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) q += X(i, j) * X(j, i).scaled(sig.e(i) * sig.e(j));
    }
  }
  q = q.scaled(GaussianRational::fraction(1, 2));
  return {q, q.scalarValue()};
}

}  // namespace liefield
