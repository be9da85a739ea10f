#include "liefield/shell/shell.hpp"

#include <functional>
#include <unordered_map>

#include "liefield/error.hpp"

namespace liefield {

namespace {

template <class T>
T fromQ(const mpq_class& q) {
  return ScalarOps<T>::fromRational(q);
}

RawPolynomial toRaw(const NCPolynomial& p) {
  RawPolynomial out;
  for (const auto& t : p.terms()) {
    RawTerm r{t.coeff, {}};
    for (std::size_t g = 0; g < kMaxGenerators; ++g) {
      for (int e = 0; e < t.mono.exps[g]; ++e) r.word.push_back(static_cast<Symbol>(g));
    }
    for (int e = 0; e < t.mono.y; ++e) r.word.push_back(kSymbolY);
    for (int e = 0; e < t.mono.z; ++e) r.word.push_back(kSymbolZ);
    out.push_back(std::move(r));
  }
  return out;
}

RawPolynomial concat(const RawPolynomial& a, const RawPolynomial& b) {
  RawPolynomial out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      RawTerm t{x.coeff * y.coeff, x.word};
      t.word.insert(t.word.end(), y.word.begin(), y.word.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

RawPolynomial plus(RawPolynomial a, const RawPolynomial& b, const GaussianRational& s = 1) {
  for (const auto& t : b) a.push_back({t.coeff * s, t.word});
  return a;
}

/// c * f added into acc (complex arithmetic on the re/im jets).
template <class T>
void addScaled(ShellFunction<T>& acc, bool& started, const GaussianRational& c, const Jet<T>& re, const Jet<T>& im) {
  T cr = fromQ<T>(c.re());
  T ci = fromQ<T>(c.im());
  Jet<T> r = re.scaled(cr) - im.scaled(ci);
  Jet<T> i = re.scaled(ci) + im.scaled(cr);
  if (!started) {
    acc.re = std::move(r);
    acc.im = std::move(i);
    started = true;
  } else {
    acc.re += r;
    acc.im += i;
  }
}

template <class T>
ShellFunction<T> difference(const ShellFunction<T>& a, const ShellFunction<T>& b) {
  return {a.at, a.re - b.re, a.im - b.im};
}

/// Verdict for residuals lhs - rhs over a list of tests.
template <class T>
CheckResult judge(const std::string& name, const std::vector<ShellFunction<T>>& lhs,
                  const std::vector<ShellFunction<T>>& rhs) {
  T worst = 0;
  std::size_t bad = 0;
  std::vector<std::string> failing;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    auto r = difference(lhs[k], rhs[k]);
    T m = r.maxAbs();
    T scale = std::max(lhs[k].maxAbs(), rhs[k].maxAbs());
    bool ok = r.re.negligible(scale) && r.im.negligible(scale);
    if (m > worst) worst = m;
    if (!ok) {
      ++bad;
      failing.push_back("test " + std::to_string(k));
    }
  }
  CheckResult c = passFail(name, bad == 0, ScalarOps<T>::format(worst));
  c.notes.push_back(std::to_string(lhs.size()) + " tests, " + std::to_string(bad) + " nonzero");
  for (auto& f : failing) c.notes.push_back(f);
  return c;
}

template <class T>
void describe(VerificationReport& rep, const ShellRealization<T>& r) {
  const auto& c = r.config();
  rep.config.emplace_back("sig", c.sig.toString());
  rep.config.emplace_back("sign", signName(c.sign));
  rep.config.emplace_back("Yval", c.Yval.get_str());
  rep.config.emplace_back("jet_order", std::to_string(c.order));
  rep.config.emplace_back("arithmetic", ScalarOps<T>::exact ? "exact" : "float");
  rep.finding("shell.orbital_sign", r.orbitalSign() > 0 ? "+1" : "-1");
}

}  // namespace

template <class T>
ShellRealization<T>::ShellRealization(ShellConfig config)
    : config_(std::move(config)), model_(buildPoincare(config_.sig)) {
  if (sgn(config_.Yval) <= 0) throw Error(ErrorKind::Config, "Yval must be positive");
  if (config_.order < 1) throw Error(ErrorKind::Config, "jet order must be at least 1");
  space_ = JetSpace::get(config_.sig.p + config_.sig.q, config_.order);
  const auto& pres = *model_.presentation;
  roles_.resize(pres.size());
  const int n = config_.sig.n();
  for (int k = 0; k < n; ++k) roles_[pres.require(translationName(k))] = {true, k, 0};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) roles_[model_.lId(i, j)] = {false, i, j};
  }

  // pick the orbital sign realizing [L_ij, P_k] = -g_jk P_i + g_ik P_j
  std::mt19937_64 rng(0);
  auto at = point(samplePoint(rng));
  auto one = Jet<T>::constant(space_, T(1));
  for (int s : {1, -1}) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        for (int k = 0; k < n && ok; ++k) {
          const auto& pk = at->coord[static_cast<std::size_t>(k)];
          Jet<T> lhs = orbital(i, j, pk, *at, s) - pk * orbital(i, j, one, *at, s);
          Jet<T> expect(space_);
          if (j == k) expect -= at->coord[static_cast<std::size_t>(i)].scaled(T(model_.g(j)));
          if (i == k) expect += at->coord[static_cast<std::size_t>(j)].scaled(T(model_.g(i)));
          ok = (lhs - expect).negligible(lhs.maxAbs());
        }
      }
    }
    if (ok) {
      orbitalSign_ = s;
      return;
    }
  }
  throw Error(ErrorKind::Domain, "no orbital sign realizes the translation brackets");
}

template <class T>
mpq_class ShellRealization<T>::shellValue() const {
  mpq_class y2 = config_.Yval * config_.Yval;
  return config_.sign == Sign::Plus ? y2 : mpq_class(-y2);
}

template <class T>
std::vector<mpq_class> ShellRealization<T>::samplePoint(std::mt19937_64& rng) const {
  const int n = config_.sig.n();
  const mpq_class& Y = config_.Yval;
  auto F = [&](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    for (int k = 0; k < n; ++k) s += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)] * model_.g(k);
    return s;
  };
  // a rational point to draw lines through
  std::vector<mpq_class> x0(static_cast<std::size_t>(n), 0);
  if (config_.sign == Sign::Plus) {
    x0[0] = Y;
  } else {
    x0[0] = Y * mpq_class(3, 4);
    x0[static_cast<std::size_t>(n - 1)] = Y * mpq_class(5, 4);
  }
  std::uniform_int_distribution<int> d(-3, 3);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<mpq_class> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = d(rng);
    mpq_class fv = F(v, v);
    if (sgn(fv) == 0) continue;
    mpq_class lambda = -2 * F(x0, v) / fv;
    if (sgn(lambda) == 0) continue;
    std::vector<mpq_class> x(static_cast<std::size_t>(n));
    bool bounded = true;
    for (int k = 0; k < n; ++k) {
      auto kk = static_cast<std::size_t>(k);
      x[kk] = x0[kk] + lambda * v[kk];
      if (abs(x[kk]) > 10 * Y) bounded = false;
    }
    if (!bounded || abs(x[0]) < Y / 4) continue;
    std::vector<mpq_class> spatial(x.begin() + 1, x.end());
    if (config_.sign == Sign::Minus) {
      mpq_class r2 = 0;
      for (const auto& a : spatial) r2 += a * a;
      if (r2 < 4 * Y * Y) continue;
    }
    return spatial;
  }
  throw Error(ErrorKind::Domain, "could not sample a shell point");
}

template <class T>
std::shared_ptr<const ShellPoint<T>> ShellRealization<T>::point(const std::vector<mpq_class>& spatial) const {
  const int m = config_.sig.p + config_.sig.q;
  if (static_cast<int>(spatial.size()) != m) throw Error(ErrorKind::Config, "base point has the wrong dimension");
  auto pt = std::make_shared<ShellPoint<T>>();
  pt->spatial = spatial;
  mpq_class r2 = shellValue();
  Jet<T> arg = Jet<T>::constant(space_, fromQ<T>(shellValue()));
  pt->coord.emplace_back(space_);
  for (int k = 1; k <= m; ++k) {
    const auto& a = spatial[static_cast<std::size_t>(k - 1)];
    auto x = Jet<T>::variable(space_, k - 1, fromQ<T>(a));
    // p_0^2 = P^2 - sum_{k>=1} g_kk p_k^2
    arg -= (x * x).scaled(T(model_.g(k)));
    r2 -= a * a * model_.g(k);
    pt->coord.push_back(std::move(x));
  }
  if (sgn(r2) <= 0) throw Error(ErrorKind::Domain, "base point is off the shell's real sheet");
  pt->p0 = ScalarOps<mpq_class>::sqrt(r2);
  pt->coord[0] = arg.sqrt();
  return pt;
}

template <class T>
ShellFunction<T> ShellRealization<T>::constant(const std::shared_ptr<const ShellPoint<T>>& at, const T& value) const {
  return {at, Jet<T>::constant(space_, value), Jet<T>(space_)};
}

template <class T>
ShellFunction<T> ShellRealization<T>::randomPolynomial(const std::shared_ptr<const ShellPoint<T>>& at,
                                                       std::mt19937_64& rng, int degree) const {
  const int m = config_.sig.p + config_.sig.q;
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> var(1, m);
  std::uniform_int_distribution<int> deg(0, degree);
  ShellFunction<T> f = constant(at, T(coef(rng)));
  for (int t = 0; t < 5; ++t) {
    Jet<T> mono = Jet<T>::constant(space_, T(coef(rng)));
    int d = deg(rng);
    for (int e = 0; e < d; ++e) mono = mono * at->coord[static_cast<std::size_t>(var(rng))];
    f.re += mono;
  }
  return f;
}

template <class T>
ShellFunction<T> ShellRealization<T>::randomJet(const std::shared_ptr<const ShellPoint<T>>& at,
                                                std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  ShellFunction<T> f{at, Jet<T>(space_), Jet<T>(space_)};
  for (std::size_t i = 0; i < space_->size(); ++i) {
    f.re[i] = fromQ<T>(mpq_class(num(rng), den(rng)));
    f.im[i] = fromQ<T>(mpq_class(num(rng), den(rng)));
  }
  return f;
}

template <class T>
Jet<T> ShellRealization<T>::orbital(int i, int j, const Jet<T>& f, const ShellPoint<T>& at, int sign) const {
  // vector field with L_ij(p_k) = -g_jk p_i + g_ik p_j, in the spatial chart
  Jet<T> r = (at.coord[static_cast<std::size_t>(i)] * f.derivative(j - 1)).scaled(T(-model_.g(j)));
  if (i >= 1) r += (at.coord[static_cast<std::size_t>(j)] * f.derivative(i - 1)).scaled(T(model_.g(i)));
  if (sign < 0) r = r.scaled(T(-1));
  if (i == 1 && j == 2 && sgn(config_.spinShift) != 0) r += f.scaled(fromQ<T>(config_.spinShift));
  return r;
}

template <class T>
Jet<T> ShellRealization<T>::apply(GenId g, const Jet<T>& f, const ShellPoint<T>& at) const {
  if (g >= roles_.size()) throw Error(ErrorKind::UnmappedGenerator, "generator outside the Poincaré presentation");
  const Role& r = roles_[g];
  if (r.translation) return at.coord[static_cast<std::size_t>(r.i)] * f;
  return orbital(r.i, r.j, f, at, orbitalSign_);
}

template <class T>
Jet<T> ShellRealization<T>::applyGenerator(GenId g, const Jet<T>& f, const ShellPoint<T>& at) const {
  checkDepth(g < roles_.size() && roles_[g].translation ? 0 : 1);
  return apply(g, f, at);
}

template <class T>
void ShellRealization<T>::checkDepth(int depth) const {
  if (depth > config_.order) {
    throw Error(ErrorKind::InsufficientOrder, "word needs jet order >= " + std::to_string(depth) + ", have " +
                                                  std::to_string(config_.order));
  }
}

template <class T>
ShellFunction<T> ShellRealization<T>::applyWord(const NCPolynomial& word, const ShellFunction<T>& f) const {
  int depth = 0;
  for (const auto& t : word.terms()) {
    if (t.mono.z) throw Error(ErrorKind::Domain, "Z has no action on the shell");
    int d = 0;
    for (std::size_t g = 0; g < kMaxGenerators; ++g) {
      if (!t.mono.exps[g]) continue;
      if (g >= roles_.size()) throw Error(ErrorKind::UnmappedGenerator, "generator outside the Poincaré presentation");
      if (!roles_[g].translation) d += t.mono.exps[g];
    }
    depth = std::max(depth, d);
  }
  checkDepth(depth);

  const ShellPoint<T>& at = *f.at;
  const bool hasIm = !f.im.isZero();
  using Cache = std::unordered_map<Monomial, Jet<T>, MonomialHash>;
  Cache reCache;
  Cache imCache;
  Cache pCache;

  // lowest factor outermost: L_a L_b f = L_a (L_b f) for a < b
  std::function<const Jet<T>&(const Monomial&, const Jet<T>&, Cache&)> chain =
      [&](const Monomial& lpart, const Jet<T>& input, Cache& cache) -> const Jet<T>& {
    auto it = cache.find(lpart);
    if (it != cache.end()) return it->second;
    int low = lpart.lowest();
    if (low < 0) return cache.emplace(lpart, input).first->second;
    Monomial rest = lpart;
    --rest.exps[static_cast<std::size_t>(low)];
    Jet<T> inner = chain(rest, input, cache);
    return cache.emplace(lpart, apply(static_cast<GenId>(low), inner, at)).first->second;
  };
  auto ppart = [&](const Monomial& p) -> const Jet<T>& {
    auto it = pCache.find(p);
    if (it != pCache.end()) return it->second;
    Jet<T> acc = Jet<T>::constant(space_, T(1));
    for (std::size_t g = 0; g < kMaxGenerators; ++g) {
      for (int e = 0; e < p.exps[g]; ++e) acc = acc * at.coord[static_cast<std::size_t>(roles_[g].i)];
    }
    return pCache.emplace(p, std::move(acc)).first->second;
  };

  ShellFunction<T> out{f.at, Jet<T>(space_), Jet<T>(space_)};
  bool started = false;
  for (const auto& t : word.terms()) {
    Monomial lpart;
    Monomial pmono;
    for (std::size_t g = 0; g < kMaxGenerators; ++g) {
      if (t.mono.exps[g]) (roles_[g].translation ? pmono : lpart).exps[g] = t.mono.exps[g];
    }
    const Jet<T>& pj = ppart(pmono);
    T yfac = T(1);
    for (int e = 0; e < t.mono.y; ++e) yfac *= fromQ<T>(config_.Yval);
    Jet<T> re = (pj * chain(lpart, f.re, reCache)).scaled(yfac);
    Jet<T> im = hasIm ? (pj * chain(lpart, f.im, imCache)).scaled(yfac) : Jet<T>(space_);
    addScaled(out, started, t.coeff, re, im);
  }
  return out;
}

template <class T>
ShellFunction<T> ShellRealization<T>::applyRaw(const RawPolynomial& raw, const ShellFunction<T>& f) const {
  const ShellPoint<T>& at = *f.at;
  ShellFunction<T> out{f.at, Jet<T>(space_), Jet<T>(space_)};
  bool started = false;
  for (const auto& t : raw) {
    int depth = 0;
    for (Symbol s : t.word) {
      if (s >= 0 && (static_cast<std::size_t>(s) >= roles_.size() || !roles_[static_cast<std::size_t>(s)].translation)) {
        ++depth;
      }
    }
    checkDepth(depth);
    Jet<T> re = f.re;
    Jet<T> im = f.im;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      if (*it == kSymbolY) {
        re = re.scaled(fromQ<T>(config_.Yval));
        im = im.scaled(fromQ<T>(config_.Yval));
      } else if (*it == kSymbolZ) {
        throw Error(ErrorKind::Domain, "Z has no action on the shell");
      } else {
        re = apply(static_cast<GenId>(*it), re, at);
        im = apply(static_cast<GenId>(*it), im, at);
      }
    }
    addScaled(out, started, t.coeff, re, im);
  }
  return out;
}

template <class T>
std::vector<ShellFunction<T>> polynomialTests(const ShellRealization<T>& r, int count, int degree,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ShellFunction<T>> out;
  for (int k = 0; k < count; ++k) {
    auto at = r.point(r.samplePoint(rng));
    out.push_back(r.randomPolynomial(at, rng, degree));
  }
  return out;
}

template <class T>
std::vector<ShellFunction<T>> randomJetTests(const ShellRealization<T>& r, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ShellFunction<T>> out;
  for (int k = 0; k < count; ++k) {
    auto at = r.point(r.samplePoint(rng));
    out.push_back(r.randomJet(at, rng));
  }
  return out;
}

template <class T>
VerificationReport verifyCondition32(const ShellRealization<T>& r, const std::vector<ShellFunction<T>>& tests) {
  VerificationReport rep;
  rep.suite = "condition32";
  describe(rep, r);
  const auto& m = r.model();
  Algebra alg(m.presentation);
  const int n = m.dim();
  NCPolynomial delta;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) delta += alg.multiply(m.L(i, j), m.Lup(j, i));
  }
  delta = delta.scaled(GaussianRational::fraction(1, 2));
  NCPolynomial lhsWord = alg.multiply(m.P(0), delta);
  NCPolynomial rhsWord;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) rhsWord += alg.multiply({m.P(j), m.L(0, i), m.Lup(i, j)});
  }
  std::vector<ShellFunction<T>> lhs;
  std::vector<ShellFunction<T>> rhs;
  for (const auto& f : tests) {
    lhs.push_back(r.applyWord(lhsWord, f));
    rhs.push_back(r.applyWord(rhsWord, f));
  }
  rep.add(judge("condition32", lhs, rhs));
  return rep;
}

template <class T>
VerificationReport measureCondition36(const ShellRealization<T>& r, EmbeddingContext& ctx,
                                      const std::vector<ShellFunction<T>>& tests) {
  VerificationReport rep;
  rep.suite = "condition36";
  describe(rep, r);
  auto& alg = *ctx.alg;
  const auto& m = ctx.poincare;
  const int n = m.dim();
  NCPolynomial delta;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) delta += alg.multiply(m.L(i, j), m.Lup(j, i));
  }
  delta = delta.scaled(GaussianRational::fraction(1, 2));
  std::vector<ShellFunction<T>> lhs;
  std::vector<ShellFunction<T>> rhs;
  for (const auto& f : tests) {
    lhs.push_back(r.applyWord(ctx.M[0], r.applyWord(delta, f)));
    ShellFunction<T> acc{f.at, Jet<T>(f.re.spacePtr()), Jet<T>(f.re.spacePtr())};
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        auto inner = r.applyWord(alg.multiply(m.L(0, i), m.Lup(i, j)), f);
        auto g = r.applyWord(ctx.M[static_cast<std::size_t>(j)], inner);
        acc.re += g.re;
        acc.im += g.im;
      }
    }
    rhs.push_back(std::move(acc));
  }
  auto c = judge("condition36", lhs, rhs);
  rep.finding("condition36.vanishes", c.status == Status::Pass ? "yes" : "no");
  rep.finding("condition36.max_residual", c.residual);
  return rep;
}

template <class T>
VerificationReport verifyLemma31Numeric(const ShellRealization<T>& r, EmbeddingContext& ctx,
                                        const Lemma31Elements& elements, const std::vector<ShellFunction<T>>& tests) {
  if (ctx.sign != r.config().sign || ctx.sig.p != r.config().sig.p || ctx.sig.q != r.config().sig.q) {
    throw Error(ErrorKind::Config, "realization and context disagree on signature or sign");
  }
  VerificationReport rep;
  rep.suite = "lemma31";
  describe(rep, r);
  std::vector<ShellFunction<T>> lhs;
  std::vector<ShellFunction<T>> rhs;
  for (const auto& f : tests) {
    lhs.push_back(r.applyWord(elements.D, r.applyWord(ctx.poincare.P(0), f)));
    rhs.push_back(r.applyWord(elements.A0L, f));
  }
  rep.add(judge("lemma31.DP0_minus_A0L", lhs, rhs));
  return rep;
}

template <class T>
VerificationReport crossCheckClosure(const ShellRealization<T>& r, EmbeddingContext& ctx,
                                     const std::vector<ShellFunction<T>>& tests) {
  if (ctx.sign != r.config().sign || ctx.sig.p != r.config().sig.p || ctx.sig.q != r.config().sig.q) {
    throw Error(ErrorKind::Config, "realization and context disagree on signature or sign");
  }
  VerificationReport rep;
  rep.suite = "closure-numeric";
  describe(rep, r);
  auto& alg = *ctx.alg;
  const auto& m = ctx.poincare;
  const int n = ctx.n();
  auto M = [&](int i) -> const NCPolynomial& { return ctx.M[static_cast<std::size_t>(i)]; };
  std::vector<ShellFunction<T>> mmL, mmR, lmL, lmR;
  for (const auto& f : tests) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto a = r.applyWord(M(i), r.applyWord(M(j), f));
        auto b = r.applyWord(M(j), r.applyWord(M(i), f));
        mmL.push_back(difference(a, b));
        mmR.push_back(r.applyWord(alg.multiply(ctx.Ysq, m.L(i, j)).scaled(4 * ctx.gnn()), f));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          auto a = r.applyWord(m.L(i, j), r.applyWord(M(k), f));
          auto b = r.applyWord(M(k), r.applyWord(m.L(i, j), f));
          lmL.push_back(difference(a, b));
          NCPolynomial expect = M(i).scaled(-(j == k ? m.g(j) : 0)) + M(j).scaled(i == k ? m.g(i) : 0);
          lmR.push_back(r.applyWord(expect, f));
        }
      }
    }
  }
  rep.add(judge("closure.MM", mmL, mmR));
  rep.add(judge("closure.LM", lmL, lmR));
  return rep;
}

template <class T>
VerificationReport symbolicNumericAgreement(const ShellRealization<T>& r, EmbeddingContext& ctx,
                                            const std::vector<ShellFunction<T>>& tests, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "agreement";
  describe(rep, r);
  rep.config.emplace_back("seed", std::to_string(seed));
  auto& alg = *ctx.alg;
  const auto& pres = alg.presentation();
  const auto& m = ctx.poincare;

  std::vector<std::pair<std::string, RawPolynomial>> zeros;
  std::vector<std::pair<std::string, RawPolynomial>> controls;
  // defining brackets, read as words
  for (std::size_t a = 0; a < pres.size(); ++a) {
    for (std::size_t b = a + 1; b < pres.size(); ++b) {
      auto ga = static_cast<Symbol>(a);
      auto gb = static_cast<Symbol>(b);
      RawPolynomial raw{{1, {ga, gb}}, {-1, {gb, ga}}};
      raw = plus(raw, toRaw(pres.bracketPoly(static_cast<GenId>(a), static_cast<GenId>(b))), -1);
      zeros.emplace_back("bracket." + pres.info(static_cast<GenId>(a)).name + "," + pres.info(static_cast<GenId>(b)).name,
                         raw);
    }
  }
  // random words against their normal forms
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sym(-1, static_cast<int>(pres.size()) - 1);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < 10; ++k) {
    RawPolynomial raw;
    for (int t = 0; t < 3; ++t) {
      RawTerm term{GaussianRational(mpq_class(coef(rng)), mpq_class(coef(rng))), {}};
      int l = len(rng);
      for (int s = 0; s < l; ++s) term.word.push_back(sym(rng));
      raw.push_back(std::move(term));
    }
    zeros.emplace_back("random." + std::to_string(k), plus(raw, toRaw(alg.normalOrder(raw)), -1));
  }
  RawPolynomial ysq{{1, {kSymbolY, kSymbolY}}};
  zeros.emplace_back("Ysquare", plus(ysq, toRaw(ctx.Ysq), -1));
  {
    auto Mi = toRaw(ctx.M[0]);
    auto Mj = toRaw(ctx.M[1]);
    auto raw = plus(concat(Mi, Mj), concat(Mj, Mi), -1);
    raw = plus(raw, concat(ysq, toRaw(m.L(0, 1))), -4 * ctx.gnn());
    zeros.emplace_back("closure.M0M1", raw);
  }

  {
    auto l01 = static_cast<Symbol>(m.lId(0, 1));
    auto p1 = static_cast<Symbol>(pres.require("P1"));
    RawPolynomial raw{{1, {l01, p1}}, {-1, {p1, l01}}};
    // correct value is -g_11 P_0; use the opposite sign
    controls.emplace_back("wrong_bracket", plus(raw, toRaw(m.P(0)), -m.g(1)));
    controls.emplace_back("wrong_Ysquare", plus(ysq, toRaw(ctx.Ysq), 1));
  }

  std::size_t symbolicBad = 0;
  std::size_t numericBad = 0;
  CheckResult sym0 = passFail("agreement.symbolic_zero", true);
  CheckResult num0 = passFail("agreement.numeric_zero", true);
  for (const auto& [name, raw] : zeros) {
    if (!alg.normalOrder(raw).isZero()) {
      ++symbolicBad;
      sym0.notes.push_back(name);
    }
    for (const auto& f : tests) {
      auto v = r.applyRaw(raw, f);
      bool ok = v.re.negligible(f.maxAbs()) && v.im.negligible(f.maxAbs());
      if (!ok) {
        ++numericBad;
        num0.notes.push_back(name);
        break;
      }
    }
  }
  sym0.status = symbolicBad ? Status::Fail : Status::Pass;
  sym0.residual = std::to_string(symbolicBad);
  sym0.notes.insert(sym0.notes.begin(), std::to_string(zeros.size()) + " identities");
  num0.status = numericBad ? Status::Fail : Status::Pass;
  num0.residual = std::to_string(numericBad);
  num0.notes.insert(num0.notes.begin(), std::to_string(zeros.size()) + " identities x " + std::to_string(tests.size()) +
                                            " tests");
  rep.add(std::move(sym0));
  rep.add(std::move(num0));

  std::size_t missedSym = 0;
  std::size_t missedNum = 0;
  for (const auto& [name, raw] : controls) {
    if (alg.normalOrder(raw).isZero()) ++missedSym;
    for (const auto& f : tests) {
      auto v = r.applyRaw(raw, f);
      if (v.re.negligible(f.maxAbs()) && v.im.negligible(f.maxAbs())) {
        ++missedNum;
        break;
      }
    }
  }
  rep.add(passFail("agreement.controls_symbolic", missedSym == 0, std::to_string(missedSym)));
  rep.add(passFail("agreement.controls_numeric", missedNum == 0, std::to_string(missedNum)));
  return rep;
}

#define LIEFIELD_SHELL_INSTANTIATE(T)                                                                              \
  template class ShellRealization<T>;                                                                              \
  template std::vector<ShellFunction<T>> polynomialTests(const ShellRealization<T>&, int, int, std::uint64_t);    \
  template std::vector<ShellFunction<T>> randomJetTests(const ShellRealization<T>&, int, std::uint64_t);          \
  template VerificationReport verifyCondition32(const ShellRealization<T>&, const std::vector<ShellFunction<T>>&); \
  template VerificationReport measureCondition36(const ShellRealization<T>&, EmbeddingContext&,                    \
                                                 const std::vector<ShellFunction<T>>&);                            \
  template VerificationReport verifyLemma31Numeric(const ShellRealization<T>&, EmbeddingContext&,                  \
                                                   const Lemma31Elements&, const std::vector<ShellFunction<T>>&);  \
  template VerificationReport crossCheckClosure(const ShellRealization<T>&, EmbeddingContext&,                     \
                                                const std::vector<ShellFunction<T>>&);                             \
  template VerificationReport symbolicNumericAgreement(const ShellRealization<T>&, EmbeddingContext&,              \
                                                       const std::vector<ShellFunction<T>>&, std::uint64_t);

LIEFIELD_SHELL_INSTANTIATE(mpq_class)
LIEFIELD_SHELL_INSTANTIATE(Quad)

}  // namespace liefield
