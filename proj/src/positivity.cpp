#include "tracealg/positivity.hpp"

#include <random>
#include <stdexcept>

namespace tracealg {

ConstraintSet::ConstraintSet(std::vector<TracePolynomial> gens, std::size_t n)
    : generators(std::move(gens)), n(n) {
  if (n < 1) throw WrongSize("ConstraintSet needs n >= 1");
  for (const TracePolynomial& s : generators)
    if (tp_involute(s) != s) throw NotSymmetric("constraint generator");
}

TracePolynomial omega_value(const OmegaCertificate& w) {
  TracePolynomial v;
  for (const OmegaProduct& p : w.products) {
    if (p.scale.sign() < 0)
      throw std::invalid_argument("omega_value: product scale must be nonnegative");
    TracePolynomial prod(p.scale);
    for (const TracePolynomial& h : p.factors) prod *= tp_trace(h * tp_involute(h));
    v += prod;
  }
  return v;
}

QMTerm QMTerm::make_omega(OmegaCertificate w, TracePolynomial h) {
  QMTerm t;
  t.kind = Kind::Omega;
  t.omega = std::move(w);
  t.h = std::move(h);
  return t;
}

QMTerm QMTerm::make_conjugate(TracePolynomial h, std::size_t s) {
  QMTerm t;
  t.kind = Kind::Conjugate;
  t.h = std::move(h);
  t.s = s;
  return t;
}

QMTerm QMTerm::make_scaled_trace(std::vector<std::pair<TracePolynomial, std::size_t>> traces,
                                 OmegaCertificate w, TracePolynomial h) {
  QMTerm t;
  t.kind = Kind::ScaledTrace;
  t.traces = std::move(traces);
  t.omega = std::move(w);
  t.h = std::move(h);
  return t;
}

namespace {

const TracePolynomial& generator_at(const ConstraintSet& S, std::size_t s) {
  if (s >= S.generators.size())
    throw BadIndex("generator index " + std::to_string(s) + " with |S| = " +
                   std::to_string(S.generators.size()));
  return S.generators[s];
}

}  // namespace

TracePolynomial certificate_value(const CyclicQMCertificate& cert, const ConstraintSet& S) {
  TracePolynomial v;
  for (const QMTerm& t : cert.terms) {
    switch (t.kind) {
      case QMTerm::Kind::Omega:
        v += omega_value(t.omega) * t.h * tp_involute(t.h);
        break;
      case QMTerm::Kind::Conjugate:
        v += t.h * generator_at(S, t.s) * tp_involute(t.h);
        break;
      case QMTerm::Kind::ScaledTrace: {
        TracePolynomial prod = omega_value(t.omega) * t.h * tp_involute(t.h);
        for (const auto& [h, s] : t.traces)
          prod *= tp_trace(h * generator_at(S, s) * tp_involute(h));
        v += prod;
        break;
      }
    }
  }
  return v;
}

bool verify_ks(const TracePolynomial& a, const KSCertificate& cert, const ConstraintSet& S) {
  if (tp_involute(a) != a) throw NotSymmetric("verify_ks target");
  const TracePolynomial t1 = certificate_value(cert.t1, S);
  const TracePolynomial t2 = certificate_value(cert.t2, S);
  switch (cert.mode) {
    case KSCertificate::Mode::Psd: {
      TracePolynomial target = a.pow(2 * cert.k) + t2;
      return is_trace_identity(a * t1 - target, S.n) &&
             is_trace_identity(t1 * a - target, S.n);
    }
    case KSCertificate::Mode::Pd: {
      if (cert.k != 0) throw ModeMismatch("pd certificate carries an exponent k");
      TracePolynomial target = TracePolynomial(1) + t2;
      return is_trace_identity(a * t1 - target, S.n) &&
             is_trace_identity(t1 * a - target, S.n);
    }
    case KSCertificate::Mode::Zero:
      if (!cert.t2.terms.empty()) throw ModeMismatch("zero certificate carries t2");
      return is_trace_identity(t1 + a.pow(2 * cert.k), S.n);
  }
  throw std::logic_error("verify_ks: bad mode");
}

bool verify_empty_refutation(const ConstraintSet& S, const CyclicQMCertificate& cert) {
  return is_trace_identity(certificate_value(cert, S) + TracePolynomial(1), S.n);
}

bool verify_nullstellensatz(const TracePolynomial& h,
                            const std::vector<TracePolynomial>& ideal_gens,
                            const OmegaCertificate& omega, const IdealCombination& comb,
                            std::uint32_t k, std::size_t n) {
  TracePolynomial combined = omega_value(omega);
  for (const IdealCombination::Term& t : comb.terms) {
    if (t.s >= ideal_gens.size())
      throw BadIndex("ideal generator index " + std::to_string(t.s));
    TracePolynomial piece = t.left * ideal_gens[t.s] * t.right;
    combined += t.traced ? tp_trace(piece) : piece;
  }
  return is_trace_identity((tp_involute(h) * h).pow(k) + combined, n);
}

std::vector<TracePolynomial> central_reduce_sigma(const TracePolynomial& s, std::size_t n) {
  if (tp_involute(s) != s) throw NotSymmetric("central_reduce_sigma input");
  std::vector<TracePolynomial> pow_traces{TracePolynomial(1)};  // Tr(s^i), slot 0 unused
  TracePolynomial sp(1);
  for (std::size_t i = 1; i <= n; ++i) {
    sp *= s;
    pow_traces.push_back(tp_trace(sp));
  }
  std::vector<TracePolynomial> sigma{TracePolynomial(1)};  // sigma_0 = 1
  for (std::size_t kk = 1; kk <= n; ++kk) {
    TracePolynomial acc;
    for (std::size_t i = 1; i <= kk; ++i) {
      TracePolynomial term = pow_traces[i] * sigma[kk - i];
      acc += i % 2 ? term : -term;
    }
    sigma.push_back(acc.scaled(Rational(1, static_cast<long>(kk))));
  }
  return {sigma.begin() + 1, sigma.end()};
}

std::vector<TracePolynomial> central_reduce_example61(const TracePolynomial& s, std::size_t n) {
  if (n != 3) throw WrongSize("central_reduce_example61 is specific to n = 3");
  std::vector<TracePolynomial> sig = central_reduce_sigma(s, 3);
  const TracePolynomial &s1 = sig[0], &s2 = sig[1], &s3 = sig[2];

  TracePolynomial g2 = s - s1;
  TracePolynomial g3 = s * s - s1 * s + s2;
  TracePolynomial g4 = s - s1 - TracePolynomial(1);
  std::vector<TracePolynomial> c{tp_trace(s), tp_trace(g2 * s * g2), tp_trace(g3 * s * g3),
                                 tp_trace(g4 * s * g4)};

  const TracePolynomial closed[4] = {s1, s1 * s2 + s3.scaled(Rational(3)), s2 * s3,
                                     s1 + s2.scaled(Rational(4)) + s3.scaled(Rational(3)) +
                                         s1 * s2};
  for (std::size_t i = 0; i < 4; ++i)
    if (!is_trace_identity(c[i] - closed[i], 3))
      throw std::logic_error("central_reduce_example61: closed form mismatch");
  return c;
}

std::optional<NegativityFunctional> negativity_functional(const std::vector<Rational>& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) return std::nullopt;
  // power sums p_1 .. p_{2n-1}
  std::vector<Rational> p(2 * n, Rational(0));  // p[i] = sum lambda^i, slot 0 unused
  for (const Rational& l : lambda) {
    Rational acc(1);
    for (std::size_t i = 1; i < 2 * n; ++i) {
      acc *= l;
      p[i] += acc;
    }
  }
  NumMatrix hankel(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hankel(i, j) = p[i + j + 1];

  LdltResult ldlt = exact_ldlt(hankel);
  if (ldlt.success) return std::nullopt;

  NegativityFunctional f;
  f.coeffs = ldlt.witness;
  f.value = Rational(0);
  for (const Rational& l : lambda) {
    Rational fl(0), acc(1);
    for (const Rational& c : f.coeffs) {
      fl += c * acc;
      acc *= l;
    }
    f.value += fl * fl * l;
  }
  if (f.value.sign() >= 0 || f.value != ldlt.witness_value)
    throw std::logic_error("negativity_functional: witness failed re-check");
  return f;
}

MultiPoly quad_unit(std::size_t i) {
  return MultiPoly::var(VarId::aux(0, 0, static_cast<int>(i)));
}

bool gram_verify(const TracePolynomial& f, const std::vector<MultiPoly>& basis,
                 const NumMatrix& G, std::size_t n) {
  if (G.rows() != G.cols() || basis.size() != G.rows())
    throw DimensionMismatch("gram_verify: |basis| = " + std::to_string(basis.size()) +
                            ", G is " + std::to_string(G.rows()) + "x" +
                            std::to_string(G.cols()));
  GenericContext ctx(n, std::max<std::uint32_t>(1, f.max_index()));
  PolyMatrix fm = eval_symbolic(f, ctx);
  MultiPoly quad;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (fm(a, b).is_zero()) continue;
      quad += quad_unit(a + 1) * fm(a, b) * quad_unit(b + 1);
    }
  MultiPoly vgv;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (G(i, j).is_zero()) continue;
      vgv += (basis[i] * basis[j]).scaled(G(i, j));
    }
  return quad == vgv && is_psd(G);
}

std::optional<std::vector<NumMatrix>> sample_refute(const TracePolynomial& f,
                                                    const ConstraintSet& S, std::size_t trials,
                                                    long radius, std::uint64_t seed,
                                                    long denominator) {
  if (trials < 1) throw std::invalid_argument("sample_refute needs trials >= 1");
  if (radius < 1 || denominator < 1)
    throw std::invalid_argument("sample_refute needs radius, denominator >= 1");
  if (tp_involute(f) != f) throw NotSymmetric("sample_refute target");
  std::uint32_t g = std::max<std::uint32_t>(1, f.max_index());
  for (const TracePolynomial& s : S.generators) g = std::max(g, s.max_index());
  const std::size_t n = S.n;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> grid(-radius * denominator, radius * denominator);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<NumMatrix> X;
    X.reserve(g);
    for (std::uint32_t j = 0; j < g; ++j) {
      NumMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t kk = 0; kk < n; ++kk) m(i, kk) = Rational(grid(rng), denominator);
      X.push_back(std::move(m));
    }
    bool feasible = true;
    for (const TracePolynomial& s : S.generators)
      if (!is_psd(eval_numeric(s, X))) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    if (!is_psd(eval_numeric(f, X))) return X;
  }
  return std::nullopt;
}

bool verify_archimedean_bound(const CyclicQMCertificate& cert, const ConstraintSet& S,
                              const Rational& rho) {
  if (rho.sign() <= 0) throw std::invalid_argument("verify_archimedean_bound needs rho > 0");
  TracePolynomial value = certificate_value(cert, S);
  std::uint32_t g = std::max<std::uint32_t>(1, value.max_index());
  for (const TracePolynomial& s : S.generators) g = std::max(g, s.max_index());
  TracePolynomial target(rho);
  for (std::uint32_t j = 1; j <= g; ++j) {
    TracePolynomial x = TracePolynomial::variable(j);
    target -= x * tp_involute(x);
  }
  return is_trace_identity(value - target, S.n);
}

}  // namespace tracealg
