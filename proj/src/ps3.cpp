#include "tracealg/ps3.hpp"

#include <random>
#include <stdexcept>

namespace tracealg {

namespace {

FuncMatrix to_func(const PolyMatrix& m) {
  return m.map([](const MultiPoly& p) { return RatFunc(p); });
}

RatFunc half() { return RatFunc(Rational(1, 2)); }

}  // namespace

PS3Context build_ps3_context() {
  PS3Context ctx;
  GenericContext gc(3, 1);
  ctx.xi = generic_matrix(gc, 1);
  PolyMatrix xit = ctx.xi.transpose();
  ctx.s = (ctx.xi + xit).scaled(MultiPoly(Rational(1, 2)));
  ctx.a = (ctx.xi - xit).scaled(MultiPoly(Rational(1, 2)));
  ctx.s0 = ctx.s;
  MultiPoly third_tr = ctx.s.trace().scaled(Rational(1, 3));
  for (std::size_t i = 0; i < 3; ++i) ctx.s0(i, i) -= third_tr;

  FuncMatrix xif = to_func(ctx.xi), xitf = to_func(xit);
  ctx.a1 = to_func(ctx.xi - xit);

  auto complement_idempotent = [](const FuncMatrix& ai) {
    FuncMatrix sq = ai * ai;
    RatFunc w = RatFunc(2) / sq.trace();
    return FuncMatrix::identity(3) - sq.scaled(w);
  };
  ctx.e1 = complement_idempotent(ctx.a1);
  FuncMatrix co1 = FuncMatrix::identity(3) - ctx.e1;
  ctx.a2 = ctx.e1 * xif * co1 - co1 * xitf * ctx.e1;
  ctx.e2 = complement_idempotent(ctx.a2);

  // beta1 is -1/2 tr(a^2), not -1/2 tr(a1^2): the two differ by the square
  // factor 4 (a1 = 2a) and determinants of restricted quadratic forms are
  // only defined up to square class; this normalization is the one the
  // closed-form beta identities are stated in.
  ctx.beta1 = -half() * RatFunc((ctx.a * ctx.a).trace());
  ctx.beta2 = -half() * (ctx.a2 * ctx.a2).trace();
  if (ctx.beta1.is_zero() || ctx.beta2.is_zero())
    throw std::logic_error("build_ps3_context: beta degenerated");

  FuncMatrix sf = to_func(ctx.s), af = to_func(ctx.a), s0f = to_func(ctx.s0);
  FuncMatrix asq = af * af, s0sq = s0f * s0f;
  RatFunc A = asq.trace();                      // tr(a^2)
  RatFunc t2 = s0sq.trace();                    // tr(s0^2)
  RatFunc t3 = (s0sq * s0f).trace();            // tr(s0^3)
  RatFunc B = (s0f * asq).trace();              // tr(s0 a^2)
  RatFunc C = (s0sq * asq).trace();             // tr(s0^2 a^2)
  RatFunc D = (af * s0f * asq * s0sq).trace();  // tr(a s0 a^2 s0^2)
  RatFunc n4 = A * A * t2 - RatFunc(6) * B * B;
  RatFunc d4 = A * A * t2 - RatFunc(4) * A * C - RatFunc(2) * B * B;
  ctx.alpha[0] = RatFunc(ctx.s.trace());
  ctx.alpha[1] = A;
  ctx.alpha[2] = B;
  ctx.alpha[3] = n4 / d4;
  ctx.alpha[4] = (A * A * A * t3 + RatFunc(6) * B * B * B) / n4;
  ctx.alpha[5] = D / n4;
  return ctx;
}

bool verify_idempotents(const PS3Context& ctx) {
  const FuncMatrix* es[2] = {&ctx.e1, &ctx.e2};
  const FuncMatrix* as[2] = {&ctx.a1, &ctx.a2};
  for (int i = 0; i < 2; ++i) {
    const FuncMatrix& e = *es[i];
    if (!(e * e - e).is_zero()) return false;
    if (!(e.transpose() - e).is_zero()) return false;
    if (!(e.trace() - RatFunc(1)).is_zero()) return false;
    if (!(*as[i] * e).is_zero() || !(e * *as[i]).is_zero()) return false;
  }
  return (ctx.e1 * ctx.e2).is_zero() && (ctx.e2 * ctx.e1).is_zero();
}

bool verify_antisym_cubic(std::size_t n) {
  PolyMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MultiPoly v = MultiPoly::var(VarId::xi(1, static_cast<int>(i) + 1, static_cast<int>(j) + 1));
      a(i, j) = v;
      a(j, i) = -v;
    }
  PolyMatrix sq = a * a;
  PolyMatrix lhs = sq * a - a.scaled(sq.trace().scaled(Rational(1, 2)));
  return lhs.is_zero();
}

bool verify_beta_formulas(const PS3Context& ctx) {
  const RatFunc &a2 = ctx.alpha[1], &a3 = ctx.alpha[2], &a4 = ctx.alpha[3], &a5 = ctx.alpha[4],
                &a6 = ctx.alpha[5];
  if (!ratfunc_equal(ctx.beta1, -half() * a2)) return false;

  RatFunc p = RatFunc(3) * a3 * a4 + RatFunc(2) * a4 * a5 + RatFunc(9) * a3;
  // a4 * a6 cancels the shared numerator of a4 with the denominator of a6;
  // grouping this way keeps the intermediates an order of magnitude smaller
  // than the literal left-to-right product.
  RatFunc q = a4 * a6;
  RatFunc num = RatFunc(288) * a2 * a2 * a2 * (q * q) - p * p;
  RatFunc den = RatFunc(9) * a2 * a2 * (a4 + RatFunc(1));
  if (!ratfunc_equal(ctx.beta2, num / den)) return false;

  RatFunc s0sq_tr((ctx.s0 * ctx.s0).trace());
  RatFunc rhs = RatFunc(2) * a4 * ctx.beta2 / (a4 + RatFunc(1)) + RatFunc(6) * a3 * a3 / (a2 * a2);
  return ratfunc_equal(s0sq_tr, rhs);
}

bool verify_independence(const PS3Context& ctx, std::uint64_t seed) {
  std::vector<RatFunc> fs(ctx.alpha.begin(), ctx.alpha.end());
  std::vector<VarId> vars;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) vars.push_back(VarId::xi(1, i, k));
  ExactMatrix<RatFunc> jac = jacobian(fs, vars);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::unordered_map<std::uint32_t, Rational> point;
    for (const VarId& v : vars) point[v.code()] = Rational(num(rng), den(rng));
    try {
      NumMatrix m(jac.rows(), jac.cols());
      for (std::size_t i = 0; i < jac.rows(); ++i)
        for (std::size_t j = 0; j < jac.cols(); ++j) m(i, j) = jac(i, j).eval(point);
      return exact_rank(m) == 6;
    } catch (const DenominatorVanishes&) {
      continue;  // resample
    }
  }
  throw std::runtime_error("verify_independence: no valid sample in 100 attempts");
}

FuncMatrix twisted_involution(const FuncMatrix& m, const PS3Context& ctx) {
  if (m.rows() != 3 || m.cols() != 3) throw SizeMismatch("twisted_involution needs 3x3");
  const RatFunc d[3] = {RatFunc(1), ctx.beta1, ctx.beta2};
  FuncMatrix r(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = m(j, i) * d[j] / d[i];
  return r;
}

RatFunc total_positivity_witness(const PS3Context& ctx) {
  FuncMatrix h(3, 3);
  h(1, 2) = ctx.beta2;
  RatFunc w = (h * twisted_involution(h, ctx)).trace();
  RatFunc expected = ctx.beta1 * ctx.beta2;
  if (!ratfunc_equal(w, expected))
    throw std::logic_error("total_positivity_witness: tr(h h^ti) != beta1 beta2");
  return expected;
}

RatFunc entry11_obstruction(const std::vector<FuncMatrix>& rs, const PS3Context& ctx) {
  RatFunc value(0), expected(0);
  for (const FuncMatrix& r : rs) {
    value += (r * twisted_involution(r, ctx))(0, 0);
    expected += r(0, 0) * r(0, 0) + r(0, 1) * r(0, 1) / ctx.beta1 + r(0, 2) * r(0, 2) / ctx.beta2;
  }
  if (!ratfunc_equal(value, expected))
    throw std::logic_error("entry11_obstruction: three-term form mismatch");
  return value;
}

}  // namespace tracealg
