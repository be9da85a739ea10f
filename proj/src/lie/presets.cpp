#include "liefield/lie/presets.hpp"

#include <algorithm>

#include "liefield/error.hpp"
#include "liefield/report.hpp"

namespace liefield {

namespace {

constexpr int kMaxIndices = 8;

int levi(int i, int j, int k) {
  // epsilon on {1,2,3}
  if (i == j || j == k || i == k) return 0;
  int inv = (i > j) + (i > k) + (j > k);
  return inv % 2 == 0 ? 1 : -1;
}

std::shared_ptr<const Presentation> rotations(const std::vector<int>& g, bool translations) {
  int n = static_cast<int>(g.size());
  PresentationBuilder b;
  std::vector<std::vector<int>> id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<int> pid(static_cast<std::size_t>(n), -1);
  if (translations) {
    for (int k = 0; k < n; ++k) {
      pid[static_cast<std::size_t>(k)] = b.addGenerator({translationName(k), GeneratorKind::Translation, k, k});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          b.addGenerator({rotationName(i, j), GeneratorKind::Rotation, i, j});
    }
  }
  auto gg = [&](int a, int c) { return a == c ? g[static_cast<std::size_t>(a)] : 0; };
  // L_ab as (generator, sign)
  auto lterm = [&](int a, int c, int coeff, LinearForm& out) {
    if (a == c || coeff == 0) return;
    int s = a < c ? 1 : -1;
    int lo = std::min(a, c);
    int hi = std::max(a, c);
    out.emplace_back(id[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)], s * coeff);
  };
  auto merge = [](LinearForm f) {
    std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    LinearForm out;
    for (auto& [k, c] : f) {
      if (!out.empty() && out.back().first == k) {
        out.back().second += c;
      } else {
        out.emplace_back(k, c);
      }
    }
    std::erase_if(out, [](const auto& t) { return t.second.isZero(); });
    return out;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto a = static_cast<GenId>(id[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          auto c = static_cast<GenId>(id[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]);
          if (c <= a) continue;
          LinearForm f;
          lterm(j, l, gg(i, k), f);
          lterm(i, k, gg(j, l), f);
          lterm(j, k, -gg(i, l), f);
          lterm(i, l, -gg(j, k), f);
          f = merge(std::move(f));
          if (!f.empty()) b.setBracket(a, c, std::move(f));
        }
      }
      if (translations) {
        for (int k = 0; k < n; ++k) {
          LinearForm f;
          if (gg(j, k)) f.emplace_back(pid[static_cast<std::size_t>(i)], -gg(j, k));
          if (gg(i, k)) f.emplace_back(pid[static_cast<std::size_t>(j)], gg(i, k));
          f = merge(std::move(f));
          if (!f.empty()) b.setBracket(a, static_cast<GenId>(pid[static_cast<std::size_t>(k)]), std::move(f));
        }
      }
    }
  }
  return b.build();
}

void checkSignature(const Signature& sig) {
  if (sig.p < 0 || sig.q < 1) throw Error(ErrorKind::Config, "signature needs p >= 0 and q >= 1");
  if (sig.n() > kMaxIndices) {
    throw Error(ErrorKind::Config, "signature " + sig.toString() + " exceeds p+q+1 <= 8");
  }
}

}  // namespace

std::vector<int> Signature::metric() const {
  std::vector<int> g;
  for (int k = 0; k < n(); ++k) g.push_back(e(k));
  return g;
}

std::string Signature::toString() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string rotationName(int i, int j) { return "L" + std::to_string(i) + std::to_string(j); }
std::string translationName(int k) { return "P" + std::to_string(k); }

GenId LieModel::lId(int i, int j) const {
  return presentation->require(rotationName(std::min(i, j), std::max(i, j)));
}

NCPolynomial LieModel::L(int i, int j) const {
  if (i == j) return {};
  auto p = NCPolynomial::generator(lId(i, j));
  return i < j ? p : -p;
}

NCPolynomial LieModel::P(int k) const {
  if (!hasTranslations) throw Error(ErrorKind::Config, "model has no translations");
  return NCPolynomial::generator(presentation->require(translationName(k)));
}

LieModel buildSo(const Signature& sig) {
  checkSignature(sig);
  return {rotations(sig.metric(), false), sig.metric(), false};
}

LieModel buildSoWithMetric(const std::vector<int>& metric) {
  if (metric.size() < 2 || metric.size() > kMaxIndices) {
    throw Error(ErrorKind::Config, "metric must have between 2 and 8 entries");
  }
  for (int e : metric) {
    if (e != 1 && e != -1) throw Error(ErrorKind::Config, "metric entries must be +1 or -1");
  }
  return {rotations(metric, false), metric, false};
}

LieModel buildPoincare(const Signature& sig) {
  checkSignature(sig);
  return {rotations(sig.metric(), true), sig.metric(), true};
}

std::vector<int> antiDeSitterMetric() { return {1, -1, -1, -1, 1}; }

LinearForm threeIndexBracket(const LieModel& model, GenId a, GenId b) {
  const auto& ia = model.presentation->info(a);
  const auto& ib = model.presentation->info(b);
  if (ia.kind != GeneratorKind::Rotation || ib.kind != GeneratorKind::Rotation) {
    throw Error(ErrorKind::Domain, "threeIndexBracket: rotations only");
  }
  int x[2] = {ia.i, ia.j};
  int y[2] = {ib.i, ib.j};
  int shared = 0;
  for (int u : x) {
    for (int v : y) shared += u == v;
  }
  if (shared != 1) return {};
  // rewrite as L_{s j} L_{j t} with signs from L_ji = -L_ij
  int sign = 1;
  int j = -1;
  int s = -1;
  int t = -1;
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      if (x[u] != y[v]) continue;
      j = x[u];
      s = x[1 - u];
      t = y[1 - v];
      if (u == 0) sign = -sign;  // L_{j s} -> -L_{s j}
      if (v == 1) sign = -sign;  // L_{t j} -> -L_{j t}
    }
  }
  int coeff = -model.g(j) * sign;
  int lo = std::min(s, t);
  int hi = std::max(s, t);
  if (s > t) coeff = -coeff;
  return {{model.lId(lo, hi), coeff}};
}

const NCPolynomial& CasimirCatalog::get(const std::string& name) const {
  auto it = elements_.find(name);
  if (it == elements_.end()) throw Error(ErrorKind::Config, "catalog has no element " + name);
  return it->second;
}

std::vector<std::string> nonCommuting(Algebra& alg, const NCPolynomial& x, const std::vector<GenId>& over) {
  std::vector<std::string> bad;
  for (GenId g : over) {
    if (!alg.commutator(x, alg.gen(g)).isZero()) bad.push_back(alg.presentation().info(g).name);
  }
  return bad;
}

namespace {

std::string catalogKey(const LieModel& m, const std::string& name) {
  std::string key = std::string(kEngineVersion) + "|" + name + "|metric";
  for (int g : m.metric) key += g > 0 ? "+" : "-";
  key += "|";
  for (std::size_t g = 0; g < m.presentation->size(); ++g) key += m.presentation->info(static_cast<GenId>(g)).name + ",";
  return key;
}

}  // namespace

CasimirCatalog buildCasimirs(Algebra& alg, const LieModel& m, const std::vector<std::string>& which,
                             bool checkCentrality) {
  CasimirCatalog cat;
  const int n = m.dim();
  auto mul = [&](const NCPolynomial& a, const NCPolynomial& b) { return alg.multiply(a, b); };
  auto need = [&](bool ok, const std::string& name, const std::string& why) {
    if (!ok) throw Error(ErrorKind::Config, "cannot build " + name + ": " + why);
  };
  std::vector<GenId> all;
  std::vector<GenId> rots;
  for (std::size_t g = 0; g < m.presentation->size(); ++g) {
    all.push_back(static_cast<GenId>(g));
    if (m.presentation->info(static_cast<GenId>(g)).kind == GeneratorKind::Rotation) rots.push_back(static_cast<GenId>(g));
  }
  auto rotsWithin = [&](int lo, int hi) {
    std::vector<GenId> r;
    for (GenId g : rots) {
      const auto& in = m.presentation->info(g);
      if (in.i >= lo && in.j <= hi) r.push_back(g);
    }
    return r;
  };
  auto record = [&](const std::string& name, const NCPolynomial& x, const std::vector<GenId>& over,
                    const std::string& overName) {
    if (!checkCentrality) return;
    auto bad = nonCommuting(alg, x, over);
    cat.record({name, overName, bad.empty(), bad});
  };
  auto q4root = [&]() { return mul(m.L(1, 2), m.L(3, 0)) + mul(m.L(2, 3), m.L(1, 0)) + mul(m.L(3, 1), m.L(2, 0)); };
  auto so23 = [&](const std::string& name) { need(n == 5 && !m.hasTranslations, name, "needs the five-index so(2,3)"); };

  // centrality records are part of the output, so checked builds always compute
  const PolynomialStore* store = checkCentrality ? nullptr : alg.options().cache.get();
  for (const auto& name : which) {
    std::string key;
    if (store) {
      key = catalogKey(m, name);
      if (auto hit = store->load(key)) {
        cat.put(name, std::move(*hit));
        continue;
      }
    }
    if (name == "Q2") {
      NCPolynomial q2;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j) q2 += mul(m.L(i, j), m.Lup(j, i));
        }
      }
      q2 = q2.scaled(GaussianRational::fraction(1, 2));
      cat.put(name, q2);
      record(name, q2, rots, "rotations");
    } else if (name == "Psq") {
      need(m.hasTranslations, name, "needs translations");
      NCPolynomial p2;
      for (int k = 0; k < n; ++k) p2 += mul(m.P(k), m.P(k)).scaled(m.g(k));
      cat.put(name, p2);
      record(name, p2, all, "all");
    } else if (name == "Delta") {
      need(m.hasTranslations, name, "needs translations");
      NCPolynomial d;
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (i != j) d += mul(m.L(i, j), m.Lup(j, i));
        }
      }
      d = d.scaled(GaussianRational::fraction(1, 2));
      cat.put(name, d);
      record(name, d, rotsWithin(1, n - 1), "spatial rotations");
    } else if (name == "W") {
      need(m.hasTranslations && n == 4, name, "defined for the 4-D Poincaré algebra only");
      NCPolynomial w;
      auto Pup = [&](int k) { return m.P(k).scaled(m.g(k)); };
      for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
          for (int rho = 0; rho < 4; ++rho) {
            w += alg.multiply({m.P(mu), Pup(nu), m.L(nu, rho), m.Lup(rho, mu)});
            w -= alg.multiply({m.P(rho), Pup(rho), m.L(mu, nu), m.Lup(nu, mu)}).scaled(GaussianRational::fraction(1, 2));
          }
        }
      }
      cat.put(name, w);
      record(name, w, all, "all");
    } else if (name == "Q4root" || name == "Q4") {
      need(n >= 4, name, "needs indices 0..3");
      NCPolynomial r = q4root();
      NCPolynomial v = name == "Q4" ? mul(r, r) : r;
      cat.put(name, v);
      record(name, v, rotsWithin(0, 3), "Lorentz block");
    } else if (name == "Lsq") {
      need(n >= 4, name, "needs indices 0..3");
      NCPolynomial v = mul(m.L(1, 2), m.L(1, 2)) + mul(m.L(2, 3), m.L(2, 3)) + mul(m.L(3, 1), m.L(3, 1));
      cat.put(name, v);
      record(name, v, rotsWithin(1, 3), "spatial rotations");
    } else if (name == "LambdaRho") {
      so23(name);
      cat.put(name, mul(m.L(1, 2), m.L(3, 4)) + mul(m.L(2, 3), m.L(1, 4)) + mul(m.L(3, 1), m.L(2, 4)));
    } else if (name == "C2so23" || name == "C2prime") {
      so23(name);
      NCPolynomial c2 = -mul(m.L(0, 4), m.L(0, 4));
      for (int k = 1; k <= 3; ++k) c2 += mul(m.L(0, k), m.L(0, k));
      c2 -= mul(m.L(1, 2), m.L(1, 2)) + mul(m.L(2, 3), m.L(2, 3)) + mul(m.L(3, 1), m.L(3, 1));
      for (int k = 1; k <= 3; ++k) c2 += mul(m.L(k, 4), m.L(k, 4));
      NCPolynomial v = name == "C2so23" ? c2 : -(c2 + NCPolynomial(GaussianRational::fraction(5, 2)));
      cat.put(name, v);
      record(name, v, all, "all");
    } else if (name == "C4so23" || name == "C4prime") {
      so23(name);
      NCPolynomial lr = mul(m.L(1, 2), m.L(3, 4)) + mul(m.L(2, 3), m.L(1, 4)) + mul(m.L(3, 1), m.L(2, 4));
      NCPolynomial r = q4root();
      NCPolynomial c4 = -mul(lr, lr) - mul(r, r);
      for (int i = 1; i <= 3; ++i) {
        NCPolynomial vi;
        for (int j = 1; j <= 3; ++j) {
          for (int k = 1; k <= 3; ++k) {
            int e = levi(i, j, k);
            if (e == 0) continue;
            vi += (mul(m.L(0, 4), m.L(j, k)).scaled(GaussianRational::fraction(1, 2)) - mul(m.L(0, j), m.L(4, k)))
                      .scaled(e);
          }
        }
        c4 += mul(vi, vi);
      }
      NCPolynomial v = c4;
      if (name == "C4prime") {
        NCPolynomial c2 = -mul(m.L(0, 4), m.L(0, 4));
        for (int k = 1; k <= 3; ++k) c2 += mul(m.L(0, k), m.L(0, k)) + mul(m.L(k, 4), m.L(k, 4));
        c2 -= mul(m.L(1, 2), m.L(1, 2)) + mul(m.L(2, 3), m.L(2, 3)) + mul(m.L(3, 1), m.L(3, 1));
        v = -(c4 - c2.scaled(GaussianRational::fraction(1, 4)) - NCPolynomial(GaussianRational::fraction(9, 16)));
      }
      cat.put(name, v);
      record(name, v, all, "all");
    } else {
      throw Error(ErrorKind::Config, "unknown catalog element " + name);
    }
    if (store) store->store(key, cat.get(name));
  }
  return cat;
}

}  // namespace liefield
