// End-to-end acceptance run: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "tracealg/identities.hpp"
#include "tracealg/positivity.hpp"
#include "tracealg/ps3.hpp"
#include "tracealg/reynolds.hpp"

using namespace tracealg;

namespace {

TracePolynomial intro_example() {
  TracePolynomial x = TracePolynomial::variable(1);
  TracePolynomial xs = tp_involute(x);
  return tp_trace(x * xs).scaled(Rational(5)) - tp_trace(x).scaled(Rational(2)) * (x + xs);
}

NumMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo = -8, long hi = 8) {
  std::uniform_int_distribution<long> e(lo, hi);
  NumMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(e(rng), 2);
  return m;
}

Rational scalar_of(const TracePolynomial& f, const std::vector<NumMatrix>& X) {
  return eval_numeric(f, X)(0, 0);
}

MultiPoly xi(int i, int k) { return MultiPoly::var(VarId::xi(1, i, k)); }

// the non-concomitant frames of the 2x2 decomposition
PolyMatrix h2_tilde() {
  PolyMatrix h(2, 2);
  h(0, 0) = xi(1, 2) + xi(2, 1);
  h(0, 1) = xi(2, 2) - xi(1, 1);
  h(1, 0) = xi(1, 1) - xi(2, 2);
  h(1, 1) = h(0, 0);
  return h;
}

PolyMatrix h3_tilde() {
  PolyMatrix h(2, 2);
  h(0, 0) = (xi(1, 2) + xi(2, 1)).scaled(Rational(2));
  h(0, 1) = xi(1, 1) - xi(2, 2).scaled(Rational(3));
  h(1, 0) = xi(2, 2) - xi(1, 1).scaled(Rational(3));
  h(1, 1) = h(0, 0);
  return h;
}

NumMatrix intro_gram(const Rational& a) {
  const Rational t = -a - Rational(2);
  const Rational z(0), five(5), mtwo(-2), one(1);
  const Rational e[8][8] = {
      {five, a, a, mtwo, z, z, z, z},  {a, five, z, t, z, z, z, z},
      {a, z, five, t, z, z, z, z},     {mtwo, t, t, one, z, z, z, z},
      {z, z, z, z, one, t, t, mtwo},   {z, z, z, z, t, five, z, a},
      {z, z, z, z, t, z, five, a},     {z, z, z, z, mtwo, a, a, five}};
  NumMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) g(i, j) = e[i][j];
  return g;
}

std::vector<MultiPoly> intro_basis() {
  return {xi(2, 2) * quad_unit(1), xi(2, 1) * quad_unit(2), xi(1, 2) * quad_unit(2),
          xi(1, 1) * quad_unit(1), xi(2, 2) * quad_unit(2), xi(2, 1) * quad_unit(1),
          xi(1, 2) * quad_unit(1), xi(1, 1) * quad_unit(2)};
}

// Floating-point eigenvalues by cyclic Jacobi sweeps (oracle only).
std::vector<double> jacobi_eigs(const NumMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).to_double();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        double theta = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
        double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a[i][i];
  return eigs;
}

MultiPoly random_xi_poly(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> coef(-3, 3), idx(1, 2), deg(1, maxdeg), nterms(1, 3);
  MultiPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    MultiPoly m(Rational(coef(rng)));
    for (int d = deg(rng); d > 0; --d) m *= xi(idx(rng), idx(rng));
    p += m;
  }
  return p;
}

// --- criteria ---------------------------------------------------------

bool criterion1() {
  TracePolynomial f = intro_example();
  NumMatrix d(3, 3);
  d(0, 0) = Rational(2);
  d(1, 1) = d(2, 2) = Rational(1);
  NumMatrix v = eval_numeric(f, {d});
  NumMatrix expected(3, 3);
  expected(0, 0) = Rational(-2);
  expected(1, 1) = expected(2, 2) = Rational(14);
  if (v != expected) return false;

  ConstraintSet free3({}, 3), free2({}, 2);
  auto witness = sample_refute(f, free3, 10000, 1, 1);
  if (!witness || is_psd(eval_numeric(f, *witness))) return false;
  return !sample_refute(f, free2, 10000, 1, 1).has_value();
}

bool criterion2() {
  TracePolynomial f = intro_example();
  std::vector<MultiPoly> v = intro_basis();
  for (long num : {-7, -6, -5})
    if (!gram_verify(f, v, intro_gram(Rational(num, 2)), 2)) return false;
  for (long a : {-2, -4})
    if (gram_verify(f, v, intro_gram(Rational(a)), 2)) return false;

  TracePolynomial x = TracePolynomial::variable(1), xs = tp_involute(x);
  TracePolynomial H1 = x - xs;
  TracePolynomial H2 = x * xs - xs * x;
  TracePolynomial H3 = x * x - (x * xs).scaled(Rational(2)) + (xs * x).scaled(Rational(2)) -
                       xs * xs;
  GenericContext ctx(2, 1);
  MultiPoly dd = xi(1, 2) - xi(2, 1);

  // H2 H2' = (xi12 - xi21)^2 (tilde H2)(tilde H2)^t
  PolyMatrix lhs = eval_symbolic(H2 * tp_involute(H2), ctx);
  PolyMatrix rhs = (h2_tilde() * h2_tilde().transpose()).scaled(dd * dd);
  if (lhs != rhs) return false;

  // conjugated decomposition: H1 f H1' = 5/2 (H1 H1')^2 + 1/2 H2 H2' + 1/2 H3 H3'
  TracePolynomial left = H1 * f * tp_involute(H1);
  TracePolynomial right = (H1 * tp_involute(H1)).pow(2).scaled(Rational(5, 2)) +
                          (H2 * tp_involute(H2)).scaled(Rational(1, 2)) +
                          (H3 * tp_involute(H3)).scaled(Rational(1, 2));
  return eval_symbolic(left, ctx) == eval_symbolic(right, ctx) &&
         is_trace_identity(left - right, 2);
}

bool criterion3() {
  Monomial u11u22({{VarId::u(1, 1).code(), 1}, {VarId::u(2, 2).code(), 1}});
  if (casimir_value(u11u22, 2) != Rational(-2)) return false;

  GenericContext ctx(2, 1);
  if (!reynolds_matrix(h2_tilde(), ctx).is_zero()) return false;
  if (!reynolds_matrix(h3_tilde(), ctx).is_zero()) return false;

  PolyMatrix Xi1 = generic_matrix(ctx, 1);
  std::mt19937_64 rng(0xACC3);
  for (int t = 0; t < 50; ++t) {
    PolyMatrix f(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) f(i, j) = random_xi_poly(rng, 3);
    PolyMatrix h = t % 2 ? Xi1 * Xi1.transpose() : Xi1;
    PolyMatrix rf = reynolds_matrix(f, ctx);
    if (reynolds_matrix(rf, ctx) != rf) return false;                   // idempotence
    if (reynolds_matrix(h * f, ctx) != h * rf) return false;            // module property
    if (rf.trace() != reynolds_on(f.trace(), 2)) return false;          // intertwining
  }

  // Haar oracle: the O(2) average over the circle is a trig polynomial in
  // the angle, so a uniform 64-point average is exact up to rounding.
  std::uniform_int_distribution<int> e(-4, 4);
  double X[2][2];
  auto eval_at = [](double m[2][2], const MultiPoly& p) {
    double v = 0;
    for (const auto& term : p.terms()) {
      double t = term.coef.to_double();
      for (const auto& [code, ex] : term.mono.factors()) {
        VarId var = VarId::from_code(code);
        for (std::uint32_t q = 0; q < ex; ++q) t *= m[var.i - 1][var.k - 1];
      }
      v += t;
    }
    return v;
  };
  for (int t = 0; t < 10; ++t) {
    MultiPoly f = random_xi_poly(rng, 3);
    MultiPoly r = reynolds_on(f, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) X[i][j] = e(rng) / 2.0;
    double avg = 0;
    const int K = 64;
    for (int s = 0; s < K; ++s)
      for (int refl = 0; refl < 2; ++refl) {
        double th = 2.0 * 3.14159265358979323846 * s / K;
        double c = std::cos(th), sn = std::sin(th);
        double u[2][2] = {{c, -sn}, {sn, c}};
        if (refl) {
          u[0][0] = -u[0][0];
          u[0][1] = -u[0][1];
        }
        double y[2][2] = {}, t1[2][2] = {};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) t1[i][j] += u[i][k] * X[k][j];
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) y[i][j] += t1[i][k] * u[j][k];
        avg += eval_at(y, f);
      }
    avg /= 2 * K;
    if (std::abs(avg - eval_at(X, r)) > 1e-3) return false;
  }
  return true;
}

bool criterion4() {
  if (!verify_fm_identity(1) || !verify_fm_identity(2)) return false;
  for (auto [n, m, d] : {std::array<std::size_t, 3>{1, 1, 1}, {1, 2, 1}, {2, 2, 3}})
    if (fm_symplectic_witness(n, static_cast<std::uint32_t>(m), d).value.is_zero()) return false;
  // the misprinted recursion is NOT an identity at m = 2
  return !is_skew_substituted_identity(newton_fm_misprint(2), 4);
}

bool criterion5() {
  TracePolynomial x = TracePolynomial::variable(1);
  TracePolynomial s = x + tp_involute(x);
  std::vector<TracePolynomial> c = central_reduce_example61(s);  // verifies closed forms
  if (c.size() != 4) return false;
  std::mt19937_64 rng(0xACC5);
  for (int t = 0; t < 10000; ++t) {
    std::vector<NumMatrix> X{random_matrix(rng, 3)};
    bool all_nonneg = true;
    for (const TracePolynomial& ci : c)
      if (scalar_of(ci, X).sign() < 0) all_nonneg = false;
    if (is_psd(eval_numeric(s, X)) != all_nonneg) return false;
  }
  return true;
}

bool criterion6() {
  PS3Context ctx = build_ps3_context();
  if (!verify_idempotents(ctx)) return false;
  if (!verify_antisym_cubic()) return false;
  if (!verify_beta_formulas(ctx)) return false;
  if (!verify_independence(ctx, 1)) return false;
  try {
    total_positivity_witness(ctx);
    FuncMatrix e11(3, 3), e12(3, 3), e13(3, 3);
    e11(0, 0) = RatFunc(1);
    e12(0, 1) = RatFunc(1);
    e13(0, 2) = RatFunc(1);
    entry11_obstruction({e11, e12, e13}, ctx);
  } catch (const std::logic_error&) {
    return false;
  }
  return true;
}

bool criterion7() {
  return cayley_hamilton_check(2) && cayley_hamilton_check(3) && !cayley_hamilton_check(2, true) &&
         !cayley_hamilton_check(3, true);
}

bool criterion8() {
  std::mt19937_64 rng(0xACC8);
  std::uniform_int_distribution<int> len(1, 4), num(-9, 9), den(1, 5);
  int with_negative = 0;
  while (with_negative < 100) {
    std::vector<Rational> lambda;
    bool has_neg = false;
    for (int i = len(rng); i > 0; --i) {
      lambda.emplace_back(num(rng), den(rng));
      has_neg = has_neg || lambda.back().sign() < 0;
    }
    auto fopt = negativity_functional(lambda);
    if (!has_neg) {
      if (fopt) return false;
      continue;
    }
    ++with_negative;
    if (!fopt) return false;
    // recompute sum f(lambda_j)^2 lambda_j from the coefficients alone
    Rational total;
    for (const Rational& lj : lambda) {
      Rational fl, p(1);
      for (const Rational& cc : fopt->coeffs) {
        fl += cc * p;
        p *= lj;
      }
      total += fl * fl * lj;
    }
    if (total != fopt->value || total.sign() >= 0) return false;
  }
  return true;
}

bool criterion9() {
  TracePolynomial x = TracePolynomial::variable(1);
  TracePolynomial txx = tp_trace(x * tp_involute(x));
  ConstraintSet S({txx}, 2);

  // trivial: a = 1, pd with t1 = 1, t2 empty
  KSCertificate triv;
  triv.mode = KSCertificate::Mode::Pd;
  OmegaCertificate one;
  one.products.push_back({Rational(1), {}});
  triv.t1.terms.push_back(QMTerm::make_omega(one));
  if (!verify_ks(TracePolynomial(1), triv, S)) return false;

  // a = 1 + Tr(x1 x1'): t1 = 1, t2 = Tr(x1 x1') (conjugate of generator 0)
  KSCertificate cert;
  cert.mode = KSCertificate::Mode::Pd;
  cert.t1.terms.push_back(QMTerm::make_omega(one));
  cert.t2.terms.push_back(QMTerm::make_conjugate(TracePolynomial(1), 0));
  TracePolynomial a = TracePolynomial(1) + txx;
  if (!verify_ks(a, cert, S)) return false;

  // malformed: pd with k != 0, bad generator index, non-symmetric a
  KSCertificate badk = cert;
  badk.k = 1;
  try {
    verify_ks(a, badk, S);
    return false;
  } catch (const ModeMismatch&) {
  }
  KSCertificate badidx = cert;
  badidx.t2.terms[0].s = 5;
  try {
    verify_ks(a, badidx, S);
    return false;
  } catch (const BadIndex&) {
  }
  try {
    verify_ks(x, cert, S);
    return false;
  } catch (const NotSymmetric&) {
  }
  // and a certificate whose equation simply fails
  if (verify_ks(TracePolynomial(2) + txx, cert, S)) return false;

  // soundness: the values of both accepted certificates are psd on K_S
  std::mt19937_64 rng(0xACC9);
  for (const KSCertificate* c : {&triv, &cert}) {
    TracePolynomial v1 = certificate_value(c->t1, S), v2 = certificate_value(c->t2, S);
    int seen = 0;
    while (seen < 100) {
      std::vector<NumMatrix> X{random_matrix(rng, 2, -4, 4)};
      bool in_ks = true;
      for (const TracePolynomial& g : S.generators)
        if (!is_psd(eval_numeric(g, X))) in_ks = false;
      if (!in_ks) continue;
      ++seen;
      if (!is_psd(eval_numeric(v1, X)) || !is_psd(eval_numeric(v2, X))) return false;
    }
  }
  return true;
}

bool criterion10() {
  std::mt19937_64 rng(0xACC10);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<long> e(-6, 6);
  int done = 0;
  while (done < 10000) {
    std::size_t n = size(rng);
    NumMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = Rational(e(rng), 3);
    double lo = 1e300;
    for (double ev : jacobi_eigs(m)) lo = std::min(lo, ev);
    if (std::abs(lo) < 1e-9) continue;  // tolerance band around singularity
    ++done;
    if (is_psd(m) != (lo > 0)) return false;
  }
  return true;
}

struct Criterion {
  int id;
  const char* what;
  bool (*run)();
  double budget_s;  // 0 = no budget
};

}  // namespace

int main() {
  const Criterion cs[] = {
      {1, "intro example: exact eval, n=3 refutation, no n=2 refutation", criterion1, 10},
      {2, "2x2 Gram representations and the H-frame identities", criterion2, 30},
      {3, "Reynolds operator: Casimir value, obstruction frames, properties, Haar oracle",
       criterion3, 300},
      {4, "f_m identity family, symplectic witnesses, misprint control", criterion4, 120},
      {5, "four-element central reduction: closed forms and sampling equivalence", criterion5,
       120},
      {6, "3x3 split-model suite", criterion6, 600},
      {7, "Cayley-Hamilton check with perturbed control", criterion7, 0},
      {8, "constructive negativity functional on 100 spectra", criterion8, 0},
      {9, "certificate verifier: accepts, rejects, sound on K_S samples", criterion9, 0},
      {10, "exact psd test vs float eigenvalue oracle on 10^4 matrices", criterion10, 0},
  };
  int failures = 0;
  for (const Criterion& c : cs) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& ex) {
      std::fprintf(stderr, "criterion %d threw: %s\n", c.id, ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) ok = false;
    std::printf("criterion %2d: %s (%.1fs) - %s\n", c.id, ok ? "PASS" : "FAIL", secs, c.what);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
