#include "liefield/embedding/embedding.hpp"

#include <sstream>

#include "liefield/algebra/span.hpp"
#include "liefield/algebra/substitute.hpp"
#include "liefield/error.hpp"

namespace liefield {

namespace {

GaussianRational frac(long a, long b) { return GaussianRational::fraction(a, b); }
const GaussianRational kI = GaussianRational::i();

int permutationSign(std::array<int, 4> v) {
  int s = 1;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) s = -s;
    }
  }
  return s;
}

std::string termCount(const NCPolynomial& p) { return std::to_string(p.size()); }

}  // namespace

const char* signName(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

EmbeddingContext buildDeformed(const Signature& sig, Sign sign, const DeformOptions& options) {
  EmbeddingContext ctx;
  ctx.sig = sig;
  ctx.sign = sign;
  ctx.poincare = buildPoincare(sig);
  Algebra base(ctx.poincare.presentation, options.engine);
  auto cat = buildCasimirs(base, ctx.poincare, {"Q2", "Psq"}, false);
  ctx.Psq = cat.get("Psq");
  int s = signValue(sign) * (options.flipSquareSign ? -1 : 1);
  ctx.Ysq = ctx.Psq.scaled(options.squareScale * s);
  ctx.extended = adjoinCentralRoot(ctx.poincare.presentation, "Y", ctx.Ysq);
  ctx.alg = std::make_unique<Algebra>(ctx.extended, options.engine);
  ctx.Q2 = cat.get("Q2");
  auto& alg = *ctx.alg;
  for (int i = 0; i < sig.n(); ++i) {
    auto p = ctx.poincare.P(i);
    ctx.M.push_back(alg.commutator(ctx.Q2, p).scaled(kI) + alg.multiply(ctx.Y(), p).scaled(2));
  }
  return ctx;
}

VerificationReport verifyClosure(EmbeddingContext& ctx) {
  VerificationReport rep;
  rep.suite = "closure";
  auto& alg = *ctx.alg;
  const auto& m = ctx.poincare;
  const int n = ctx.n();
  std::size_t failA = 0;
  std::size_t failB = 0;
  std::size_t countA = 0;
  std::size_t countB = 0;
  auto four = alg.multiply(ctx.Y(), ctx.Y()).scaled(4 * ctx.gnn());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      NCPolynomial r = alg.commutator(ctx.M[static_cast<std::size_t>(i)], ctx.M[static_cast<std::size_t>(j)]) -
                       alg.multiply(four, m.L(i, j));
      ++countA;
      if (!r.isZero()) {
        ++failA;
        CheckResult c = passFail("closure.MM." + std::to_string(i) + std::to_string(j), false, termCount(r));
        c.notes.push_back(alg.format(r));
        rep.add(std::move(c));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        auto gjk = j == k ? m.g(j) : 0;
        auto gik = i == k ? m.g(i) : 0;
        NCPolynomial expect = ctx.M[static_cast<std::size_t>(i)].scaled(-gjk) +
                              ctx.M[static_cast<std::size_t>(j)].scaled(gik);
        NCPolynomial r = alg.commutator(m.L(i, j), ctx.M[static_cast<std::size_t>(k)]) - expect;
        ++countB;
        if (!r.isZero()) {
          ++failB;
          CheckResult c = passFail("closure.LM." + rotationName(i, j) + "," + std::to_string(k), false, termCount(r));
          c.notes.push_back(alg.format(r));
          rep.add(std::move(c));
        }
      }
    }
  }
  CheckResult a = passFail("closure.MM", failA == 0, std::to_string(failA));
  a.notes.push_back(std::to_string(countA) + " pairs");
  CheckResult b = passFail("closure.LM", failB == 0, std::to_string(failB));
  b.notes.push_back(std::to_string(countB) + " triples");
  rep.add(std::move(a));
  rep.add(std::move(b));
  return rep;
}

CasimirC2 computeCasimirC2(EmbeddingContext& ctx) {
  auto& alg = *ctx.alg;
  const auto& m = ctx.poincare;
  NCPolynomial sum;
  for (int i = 0; i < ctx.n(); ++i) {
    const auto& Mi = ctx.M[static_cast<std::size_t>(i)];
    sum += alg.multiply(Mi, Mi).scaled(m.g(i));
  }
  auto y2 = alg.multiply(ctx.Y(), ctx.Y());
  CasimirC2 out;
  out.cleared = alg.multiply(y2, ctx.Q2).scaled(4) - sum.scaled(ctx.gnn());
  GaussianRational half = frac(ctx.sig.p + ctx.sig.q, 2);
  out.residual = out.cleared + alg.multiply(y2, y2 + NCPolynomial(half * half)).scaled(4);
  return out;
}

VerificationReport analyzeC2Residual(EmbeddingContext& ctx, const CasimirC2& c2) {
  VerificationReport rep;
  rep.suite = "c2-residual";
  auto& alg = *ctx.alg;
  std::vector<GenId> all;
  for (std::size_t g = 0; g < ctx.poincare.presentation->size(); ++g) all.push_back(static_cast<GenId>(g));
  auto bad = nonCommuting(alg, c2.residual, all);
  CheckResult central = passFail("c2.residual_central", bad.empty(), std::to_string(bad.size()));
  for (const auto& b : bad) central.notes.push_back("fails to commute with " + b);
  rep.add(std::move(central));
  rep.finding("c2.residual_terms", termCount(c2.residual));
  rep.finding("c2.residual_zero", c2.residual.isZero() ? "yes" : "no");

  if (ctx.n() == 4) {
    auto cat = buildCasimirs(alg, ctx.poincare, {"W"}, false);
    const auto& w = cat.get("W");
    int maxDeg = c2.residual.maxDegree();
    std::vector<NCPolynomial> basis;
    std::vector<std::string> labels;
    NCPolynomial psqPow(1);
    for (int a = 0; 2 * a <= maxDeg; ++a) {
      NCPolynomial term = psqPow;
      for (int b = 0; 2 * a + 4 * b <= maxDeg; ++b) {
        std::string lab = "(P^2)^" + std::to_string(a) + " W^" + std::to_string(b);
        basis.push_back(term);
        labels.push_back(lab);
        basis.push_back(alg.multiply(ctx.Y(), term));
        labels.push_back("Y " + lab);
        term = alg.multiply(term, w);
      }
      psqPow = alg.multiply(psqPow, ctx.Psq);
    }
    auto sol = solveInSpan(c2.residual, basis);
    CheckResult span = passFail("c2.residual_in_P2_W_span", sol.has_value(), sol ? "0" : "not in span");
    if (sol) {
      std::ostringstream os;
      bool first = true;
      for (std::size_t k = 0; k < sol->size(); ++k) {
        if ((*sol)[k].isZero()) continue;
        os << (first ? "" : " + ") << "(" << (*sol)[k] << ") " << labels[k];
        first = false;
      }
      rep.finding("c2.residual_expansion", first ? "0" : os.str());
    }
    rep.add(std::move(span));
  }
  return rep;
}

Lemma31Elements buildLemma31Elements(EmbeddingContext& ctx, std::optional<int> nOverride) {
  auto& alg = *ctx.alg;
  const auto& m = ctx.poincare;
  const long n = nOverride.value_or(ctx.n());
  NCPolynomial Y = ctx.Y();
  auto Yk = [&](int k) { return alg.power(Y, k); };
  auto c = [](long a, long b) { return GaussianRational::fraction(a, b); };
  NCPolynomial one(1);
  const NCPolynomial& Q2 = ctx.Q2;

  Lemma31Elements out;
  out.D = (Q2 + one.scaled(c((n - 1) * (n - 3), 4))).scaled(c((n - 3) * (n - 3), 4)) +
          alg.multiply(Y, Q2 + one.scaled(c((n - 2) * (n - 3), 4))).scaled(kI * GaussianRational(n - 3)) -
          alg.multiply(Yk(2), Q2 - one.scaled(c(n - 3, 2))) + Yk(3).scaled(kI * GaussianRational(n - 2)) - Yk(4);

  // L_{n,i} Y^k = M_i Y^(k-1) / 2
  auto LnY = [&](int i, int k) { return alg.multiply(Yk(k - 1), ctx.M[static_cast<std::size_t>(i)]).scaled(c(1, 2)); };
  auto sumY = [&](int k) {
    NCPolynomial s;
    for (int i = 1; i < ctx.n(); ++i) s += alg.multiply(m.Lup(0, i), LnY(i, k));
    return s;
  };
  GaussianRational h = c(n - 3, 2);
  out.A0L = (LnY(0, 1).scaled(h) + sumY(1)).scaled(kI * c((n - 3) * (n - 3), 4)) -
            (LnY(0, 2).scaled(h * c(1, 2)) + sumY(2)).scaled(h * 2) + (LnY(0, 3).scaled(h) - sumY(3)).scaled(kI) -
            LnY(0, 4);
  return out;
}

std::string Convention::toString() const {
  std::ostringstream os;
  os << "eps=" << (epsilon0123 > 0 ? "+1" : "-1") << ",q4=" << (epsilonUsesRoot ? "root" : "square")
     << ",y=" << (yBranch > 0 ? "+1" : "-1");
  return os.str();
}

std::optional<Convention> Convention::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (auto eq = item.find('='); eq != std::string::npos) item = item.substr(eq + 1);
    parts.push_back(item);
  }
  if (parts.size() != 3) return std::nullopt;
  auto sgn = [](const std::string& s) -> std::optional<int> {
    if (s == "+1" || s == "+" || s == "1") return 1;
    if (s == "-1" || s == "-") return -1;
    return std::nullopt;
  };
  auto e = sgn(parts[0]);
  auto y = sgn(parts[2]);
  if (!e || !y || (parts[1] != "root" && parts[1] != "square")) return std::nullopt;
  return Convention{*e, parts[1] == "root", *y};
}

std::vector<Convention> Convention::all() {
  std::vector<Convention> out;
  for (int e : {1, -1}) {
    for (bool r : {false, true}) {
      for (int y : {1, -1}) out.push_back({e, r, y});
    }
  }
  return out;
}

Theorem41::Theorem41(EmbeddingContext& ctx, Theorem41Options options) : ctx_(ctx), field_(*ctx.alg) {
  if (ctx.sig.p != 0 || ctx.sig.q != 3) throw Error(ErrorKind::Config, "Theorem41 needs the Poincaré(0,3) context");
  auto& alg = *ctx.alg;
  LieModel so23 = buildSoWithMetric(antiDeSitterMetric());
  Algebra a23(so23.presentation, alg.options());
  auto cat = buildCasimirs(a23, so23, {"C2so23", "C4so23", "C2prime", "C4prime"}, false);

  struct Mul {
    const LieField* f;
    LieFieldElement operator()(const LieFieldElement& a, const LieFieldElement& b) const { return f->multiply(a, b); }
  };
  SubstitutionT<LieFieldElement, Mul> sub(*so23.presentation, field_.constant(1), Mul{&field_});
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      GenId g = so23.lId(i, j);
      if (j < 4) {
        sub.map(g, field_.make(ctx.poincare.L(i, j)));
      } else {
        sub.map(g, field_.make(ctx.M[static_cast<std::size_t>(i)].scaled(frac(-1, 2)), 1));
      }
    }
  }
  images_.C2 = sub.apply(cat.get("C2so23"));
  images_.C4 = sub.apply(cat.get("C4so23"));
  if (options.correctedPrimes) {
    images_.C2prime = images_.C2 + field_.constant(frac(5, 2));
    images_.C4prime = images_.C4 + images_.C2.scaled(frac(1, 4)) + field_.constant(frac(9, 16));
    c4Sign_ = 1;
  } else {
    images_.C2prime = sub.apply(cat.get("C2prime"));
    images_.C4prime = sub.apply(cat.get("C4prime"));
  }
  if (options.flipC2prime) images_.C2prime = -images_.C2prime;
  auto lor = buildCasimirs(alg, ctx.poincare, {"Q4root", "Q4"}, false);
  images_.Q2 = field_.make(ctx.Q2);
  images_.Q4 = field_.make(lor.get("Q4"));
  images_.Q4root = field_.make(lor.get("Q4root"));
}

LieFieldElement Theorem41::L(int i, int j) const { return field_.make(ctx_.poincare.L(i, j)); }
LieFieldElement Theorem41::Lup(int i, int j) const { return field_.make(ctx_.poincare.Lup(i, j)); }
LieFieldElement Theorem41::Lmixed(int i, int j) const { return field_.make(ctx_.poincare.Lmixed(i, j)); }

// L_{mu rho} L^{rho nu}
LieFieldElement Theorem41::Lproduct(int mu, int nu) const {
  LieFieldElement s = field_.constant(0);
  for (int rho = 0; rho < 4; ++rho) s += L(mu, rho) * Lup(rho, nu);
  return s;
}

// Q4x eps_{mu rho tau}^nu L^{rho tau}
LieFieldElement Theorem41::epsilonTerm(const Convention& c, int mu, int nu) const {
  LieFieldElement s = field_.constant(0);
  int gnu = ctx_.poincare.g(nu);
  for (int rho = 0; rho < 4; ++rho) {
    for (int tau = 0; tau < 4; ++tau) {
      int e = permutationSign({mu, rho, tau, nu});
      if (e == 0) continue;
      s += Lup(rho, tau).scaled(e * c.epsilon0123 * gnu);
    }
  }
  return (c.epsilonUsesRoot ? images_.Q4root : images_.Q4) * s;
}

LieFieldElement Theorem41::D(const Convention& c) const {
  const auto& im = images_;
  auto one = field_.constant(1);
  auto Y = field_.yPow(1).scaled(c.yBranch);
  auto Y2 = field_.yPow(2);
  auto Y3 = field_.yPow(3).scaled(c.yBranch);
  return (im.Q4 + im.Q2.scaled(frac(1, 4)) + im.C4prime.scaled(c4Sign_) + one.scaled(frac(3, 16))) +
         ((im.Q2 + one.scaled(frac(1, 2))) * Y).scaled(kI) - (im.Q2 - im.C2prime - one.scaled(frac(1, 2))) * Y2 +
         Y3.scaled(kI * 2);
}

LieFieldElement Theorem41::A(const Convention& c, int mu, int nu) const {
  const auto& im = images_;
  auto one = field_.constant(1);
  auto delta = field_.constant(mu == nu ? 1 : 0);
  auto Y = field_.yPow(1).scaled(c.yBranch);
  auto Y2 = field_.yPow(2);
  auto Y3 = field_.yPow(3).scaled(c.yBranch);
  auto Lmn = Lmixed(mu, nu);
  auto Lpp = Lproduct(mu, nu);
  auto first = (mu == nu ? im.C4prime.scaled(c4Sign_) : field_.constant(0));
  auto bracket1 = (mu == nu ? im.Q2 + one.scaled(frac(1, 4)) : field_.constant(0)) - Lmn.scaled(frac(3, 2)) - Lpp -
                  epsilonTerm(c, mu, nu);
  auto bracket2 = (mu == nu ? im.Q2 + one.scaled(frac(1, 4)) - im.C2prime : field_.constant(0)) - Lmn - Lpp;
  auto bracket3 = delta.scaled(frac(1, 2)) - Lmn;
  return first + (bracket1 * Y).scaled(kI * frac(1, 2)) - bracket2 * Y2 + (bracket3 * Y3).scaled(kI);
}

LieFieldElement Theorem41::residual(const Convention& c, int mu) const {
  auto twoY = field_.yPow(1).scaled(2);
  LieFieldElement r = twoY * D(c) * field_.make(ctx_.poincare.P(mu));
  for (int nu = 0; nu < 4; ++nu) r -= A(c, mu, nu) * field_.make(ctx_.M[static_cast<std::size_t>(nu)]);
  return r;
}

LieFieldElement Theorem41::residualOtherSign(const Convention& c, int mu) const {
  auto twoY = field_.yPow(1).scaled(2);
  LieFieldElement r = twoY * D(c) * field_.make(ctx_.poincare.P(mu));
  for (int nu = 0; nu < 4; ++nu) r += A(c, mu, nu) * field_.make(ctx_.M[static_cast<std::size_t>(nu)]);
  return r;
}

LieFieldElement Theorem41::quartic() const {
  return field_.yPow(4) + images_.C2prime * field_.yPow(2) + images_.C4prime;
}

Theorem41Outcome verifyTheorem41(EmbeddingContext& ctx, const std::vector<Convention>& conventions,
                                 Theorem41Options options) {
  Theorem41Outcome out;
  out.report.suite = "theorem41";
  Theorem41 thm(ctx, options);
  auto tried = conventions.empty() ? Convention::all() : conventions;
  std::vector<std::array<std::size_t, 4>> sizes;
  for (const auto& c : tried) {
    std::array<std::size_t, 4> sz{};
    bool ok = true;
    for (int mu = 0; mu < 4; ++mu) {
      auto r = thm.residual(c, mu);
      sz[static_cast<std::size_t>(mu)] = r.num.size();
      ok = ok && r.isZero();
    }
    std::ostringstream os;
    os << sz[0] << "," << sz[1] << "," << sz[2] << "," << sz[3];
    out.report.finding("theorem41.residual_terms[" + c.toString() + "]", os.str());
    sizes.push_back(sz);
    if (ok) out.passing.push_back(c);
  }
  const Convention& shown = out.passing.empty() ? tried.front() : out.passing.front();
  std::size_t idx = 0;
  for (std::size_t k = 0; k < tried.size(); ++k) {
    if (tried[k] == shown) idx = k;
  }
  for (int mu = 0; mu < 4; ++mu) {
    auto n = sizes[idx][static_cast<std::size_t>(mu)];
    CheckResult c = passFail("theorem41.mu" + std::to_string(mu), n == 0, std::to_string(n));
    c.convention = shown.toString();
    out.report.add(std::move(c));
  }
  bool unique = out.passing.size() == 1;
  CheckResult u = passFail("theorem41.unique_convention", unique, std::to_string(out.passing.size()) + " passing");
  u.notes.push_back(std::to_string(tried.size()) + " conventions tried");
  for (const auto& c : out.passing) u.notes.push_back("passes: " + c.toString());
  if (unique) u.convention = out.passing.front().toString();
  out.report.add(std::move(u));
  out.report.finding("theorem41.passing",
                     out.passing.empty() ? "none" : [&] {
                       std::string s;
                       for (const auto& c : out.passing) s += (s.empty() ? "" : ";") + c.toString();
                       return s;
                     }());

  std::size_t otherZero = 0;
  for (const auto& c : tried) {
    bool ok = true;
    for (int mu = 0; mu < 4 && ok; ++mu) ok = thm.residualOtherSign(c, mu).isZero();
    otherZero += ok;
  }
  out.report.finding("theorem41.other_sign_passing", std::to_string(otherZero));
  return out;
}

VerificationReport verifyQuartic(EmbeddingContext& ctx, Theorem41Options options) {
  VerificationReport rep;
  rep.suite = "quartic";
  Theorem41 thm(ctx, options);
  const auto& f = thm.field();
  auto q = thm.quartic();
  rep.add(passFail("quartic.relation", q.isZero(), std::to_string(q.num.size())));

  const auto& im = thm.images();
  auto y2 = f.yPow(2);
  auto spinZero = f.yPow(4) + im.C2prime * y2;
  auto factored = y2 * (y2 + im.C2prime);
  auto diff = spinZero - factored;
  rep.add(passFail("quartic.spin_zero_factorization", diff.isZero(), std::to_string(diff.num.size())));

  // which reading of the quadratic Casimir matches: C_2 image against
  // -Y^2 - 9/4 (Lemma form) and against -C'_2 relations
  auto c2 = im.C2;
  auto lemma = c2 + y2 + f.constant(frac(9, 4));
  rep.finding("quartic.C2_plus_Y2_plus_9/4_terms", std::to_string(lemma.num.size()));
  auto cp = im.C2prime + y2;
  rep.finding("quartic.C2prime_plus_Y2_terms", std::to_string(cp.num.size()));
  return rep;
}

}  // namespace liefield
