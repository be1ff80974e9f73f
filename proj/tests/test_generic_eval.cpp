#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "tracealg/generic_eval.hpp"

using namespace tracealg;

namespace {

NumMatrix diag(std::initializer_list<long> ds) {
  NumMatrix m(ds.size(), ds.size());
  std::size_t i = 0;
  for (long d : ds) {
    m(i, i) = Rational(d);
    ++i;
  }
  return m;
}

NumMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> e(-5, 5);
  NumMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(e(rng), 1 + (e(rng) & 1));
  return m;
}

Word rword(std::mt19937_64& rng, std::uint32_t g, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> idx(1, g);
  std::uniform_int_distribution<int> star(0, 1);
  std::vector<Letter> ls(len(rng));
  for (auto& l : ls) l = {idx(rng), star(rng) == 1};
  return Word(std::move(ls));
}

TracePolynomial random_tp(std::mt19937_64& rng, std::uint32_t g = 2) {
  std::uniform_int_distribution<int> coef(-4, 4), nterms(1, 4), ntr(0, 2);
  TracePolynomial f;
  for (int t = nterms(rng); t > 0; --t) {
    std::vector<TraceSymbol> pure;
    for (int s = ntr(rng); s > 0; --s) pure.push_back(trace_canon(rword(rng, g, 3)));
    f.add_term(TraceMonomial(std::move(pure), rword(rng, g, 3)), Rational(coef(rng)));
  }
  return f;
}

// 5 Tr(x1 x1') - 2 Tr(x1) (x1 + x1')
TracePolynomial intro_example() {
  TracePolynomial x = TracePolynomial::variable(1);
  TracePolynomial xs = tp_involute(x);
  return tp_trace(x * xs).scaled(Rational(5)) - tp_trace(x).scaled(Rational(2)) * (x + xs);
}

// Floating-point eigenvalues by cyclic Jacobi sweeps (test oracle only).
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

}  // namespace

TEST_CASE("generic matrix layout") {
  GenericContext ctx(2, 2);
  PolyMatrix m = generic_matrix(ctx, 1);
  CHECK(m(0, 0) == MultiPoly::var(VarId::xi(1, 1, 1)));
  CHECK(m(0, 1) == MultiPoly::var(VarId::xi(1, 1, 2)));
  CHECK(m(1, 0) == MultiPoly::var(VarId::xi(1, 2, 1)));
  CHECK(m.transpose().transpose() == m);
  CHECK(m.transpose()(0, 1) == MultiPoly::var(VarId::xi(1, 2, 1)));
  CHECK_THROWS_AS(generic_matrix(ctx, 3), IndexOutOfRange);
  CHECK_THROWS_AS(generic_matrix(ctx, 0), IndexOutOfRange);
}

TEST_CASE("eval_symbolic basics") {
  GenericContext ctx(2, 1);
  TracePolynomial x = TracePolynomial::variable(1);
  CHECK(eval_symbolic(x, ctx) == generic_matrix(ctx, 1));

  TracePolynomial tr1 =
      TracePolynomial::term(Rational(1), TraceMonomial({trace_canon(Word())}, Word()));
  PolyMatrix e = eval_symbolic(tr1, ctx);
  CHECK(e(0, 0) == MultiPoly(2));
  CHECK(e(0, 1) == MultiPoly(0));
  CHECK(e(1, 1) == MultiPoly(2));

  // Tr(x1 x1') = sum of squares of all four entries
  PolyMatrix q = eval_symbolic(tp_trace(x * tp_involute(x)), ctx);
  MultiPoly expect;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) expect += MultiPoly::var(VarId::xi(1, i, k)).pow(2);
  CHECK(q(0, 0) == expect);
  CHECK(q(1, 0) == MultiPoly(0));
}

TEST_CASE("intro example evaluates to diag(-2,14,14)") {
  NumMatrix v = eval_numeric(intro_example(), {diag({2, 1, 1})});
  CHECK(v == diag({-2, 14, 14}));
}

TEST_CASE("two-path evaluation oracle") {
  std::mt19937_64 rng(31);
  GenericContext ctx(2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    TracePolynomial f = random_tp(rng);
    std::vector<NumMatrix> X = {random_matrix(rng, 2), random_matrix(rng, 2)};
    std::unordered_map<std::uint32_t, Rational> at;
    for (int j = 1; j <= 2; ++j)
      for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k)
          at[VarId::xi(j, i, k).code()] = X[static_cast<std::size_t>(j - 1)](
              static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1));
    PolyMatrix sym = eval_symbolic(f, ctx);
    NumMatrix num = eval_numeric(f, X);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) CHECK(sym(i, k).eval(at) == num(i, k));
  }
}

TEST_CASE("evaluation is a *-homomorphism") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    TracePolynomial f = random_tp(rng), g = random_tp(rng);
    std::vector<NumMatrix> X = {random_matrix(rng, 3), random_matrix(rng, 3)};
    CHECK(eval_numeric(f * g, X) == eval_numeric(f, X) * eval_numeric(g, X));
    CHECK(eval_numeric(tp_involute(f), X) == eval_numeric(f, X).transpose());
  }
}

TEST_CASE("trace identity oracle") {
  TracePolynomial x1 = TracePolynomial::variable(1), x2 = TracePolynomial::variable(2);
  TracePolynomial commutant = tp_trace(x1 * x2) - tp_trace(x2 * x1);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(is_trace_identity(commutant, n));

  // Cayley-Hamilton for n=2: x^2 - Tr(x)x + (Tr(x)^2 - Tr(x^2))/2
  TracePolynomial ch2 = x1 * x1 - tp_trace(x1) * x1 +
                        (tp_trace(x1) * tp_trace(x1) - tp_trace(x1 * x1)).scaled(Rational(1, 2));
  CHECK(is_trace_identity(ch2, 2));
  CHECK(!is_trace_identity(ch2, 3));

  TracePolynomial comm = x1 * x2 - x2 * x1;
  CHECK(is_trace_identity(comm, 1));
  CHECK(!is_trace_identity(comm, 2));
  CHECK(!is_trace_identity(comm, 3));

  // ideal closure on sampled witnesses
  std::mt19937_64 rng(41);
  for (int t = 0; t < 5; ++t) {
    TracePolynomial f = random_tp(rng);
    CHECK(is_trace_identity(ch2 * f, 2));
    CHECK(is_trace_identity(f * ch2, 2));
    CHECK(is_trace_identity(ch2 + ch2 * f, 2));
  }
}

TEST_CASE("tiny term budget falls back to randomized checking") {
  TracePolynomial x1 = TracePolynomial::variable(1), x2 = TracePolynomial::variable(2);
  TracePolynomial ch2 = x1 * x1 - tp_trace(x1) * x1 +
                        (tp_trace(x1) * tp_trace(x1) - tp_trace(x1 * x1)).scaled(Rational(1, 2));
  IdentityCheck exact = check_trace_identity(ch2, 2);
  CHECK(!exact.probabilistic);
  CHECK(exact.identity);
  IdentityCheck prob = check_trace_identity(ch2, 2, 1);
  CHECK(prob.probabilistic);
  CHECK(prob.identity);
  IdentityCheck refuted = check_trace_identity(ch2, 3, 1);
  CHECK(!refuted.identity);
  CHECK(!refuted.probabilistic);  // a nonzero evaluation is a certain refutation
}

TEST_CASE("char_coeffs") {
  CHECK(char_coeffs(diag({1, 2, 3})) ==
        std::vector<Rational>{Rational(6), Rational(11), Rational(6)});
  CHECK(char_coeffs(NumMatrix::identity(4)) ==
        std::vector<Rational>{Rational(4), Rational(6), Rational(4), Rational(1)});
  CHECK(char_coeffs(NumMatrix(3, 3)) ==
        std::vector<Rational>{Rational(0), Rational(0), Rational(0)});

  // Cayley-Hamilton reconstruction on random matrices
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    NumMatrix m = random_matrix(rng, 3);
    auto s = char_coeffs(m);
    NumMatrix acc = m * m * m;
    acc -= (m * m).scaled(s[0]);
    acc += m.scaled(s[1]);
    acc -= NumMatrix::identity(3).scaled(s[2]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("psd tests") {
  CHECK(!is_psd(diag({-2, 14, 14})));
  CHECK(is_psd(NumMatrix::identity(3)));
  CHECK(is_pd(NumMatrix::identity(3)));
  NumMatrix m(2, 2);
  m(0, 0) = Rational(2);
  m(0, 1) = Rational(1);
  m(1, 0) = Rational(1);
  m(1, 1) = Rational(2);
  CHECK(is_psd(m));
  CHECK(is_pd(m));
  CHECK(is_psd(diag({0, 3})));
  CHECK(!is_pd(diag({0, 3})));
  NumMatrix asym(2, 2);
  asym(0, 1) = Rational(1);
  CHECK_THROWS_AS(is_psd(asym), NotSymmetric);
}

TEST_CASE("psd agrees with a floating eigenvalue oracle") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    NumMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = Rational(e(rng));
    double lo = 1e300;
    for (double ev : jacobi_eigs(m)) lo = std::min(lo, ev);
    if (std::abs(lo) < 1e-9) continue;  // tolerance band
    CHECK(is_psd(m) == (lo > 0));
  }
}

TEST_CASE("group action substitution") {
  GenericContext c1(1, 1);
  MultiPoly f = MultiPoly::var(VarId::xi(1, 1, 1));
  MultiPoly g = apply_group_element(f, c1);
  CHECK(g == MultiPoly::var(VarId::u(1, 1)).pow(2) * f);

  // two-path check with the 3-4-5 rotation
  GenericContext c2(2, 1);
  std::mt19937_64 rng(53);
  MultiPoly h;
  for (int t = 0; t < 4; ++t) {
    std::uniform_int_distribution<int> i(1, 2), co(-3, 3);
    h += MultiPoly::var(VarId::xi(1, i(rng), i(rng))) *
         MultiPoly::var(VarId::xi(1, i(rng), i(rng))).scaled(Rational(co(rng)));
  }
  MultiPoly hu = apply_group_element(h, c2);
  NumMatrix u(2, 2);
  u(0, 0) = Rational(3, 5);
  u(0, 1) = Rational(-4, 5);
  u(1, 0) = Rational(4, 5);
  u(1, 1) = Rational(3, 5);
  NumMatrix x = random_matrix(rng, 2);
  NumMatrix uxu = u * x * u.transpose();
  std::unordered_map<std::uint32_t, Rational> at;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      at[VarId::xi(1, i, k).code()] =
          x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1));
      at[VarId::u(i, k).code()] =
          u(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1));
    }
  std::unordered_map<std::uint32_t, Rational> at_conj;
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      at_conj[VarId::xi(1, i, k).code()] =
          uxu(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1));
  CHECK(hu.eval(at) == h.eval(at_conj));
}
