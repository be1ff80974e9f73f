#include "tracealg/identities.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tracealg {

namespace {

FmPolynomial build_fm(std::uint32_t m, bool misprint) {
  TracePolynomial x1x2 = TracePolynomial::variable(1) * TracePolynomial::variable(2);
  std::vector<TracePolynomial> fp{TracePolynomial(1)};  // f'_0 = 1
  for (std::uint32_t k = 1; k <= m; ++k) {
    TracePolynomial fk;
    for (std::uint32_t i = 1; i <= k; ++i) {
      std::uint32_t expo = misprint ? k : i;
      TracePolynomial tr = tp_trace(x1x2.pow(expo));
      TracePolynomial term = (tr * fp[k - i]).scaled(Rational(i % 2 ? 1 : -1, 2 * k));
      fk += term;
    }
    fp.push_back(std::move(fk));
  }
  FmPolynomial f;
  f.m = m;
  for (std::uint32_t k = 0; k <= m; ++k) {
    TracePolynomial term = fp[k] * x1x2.pow(m - k);
    f.value += k % 2 ? -term : term;
  }
  return f;
}

}  // namespace

FmPolynomial newton_fm(std::uint32_t m) { return build_fm(m, false); }
FmPolynomial newton_fm_misprint(std::uint32_t m) { return build_fm(m, true); }

bool is_skew_substituted_identity(const FmPolynomial& f, std::size_t n) {
  std::map<std::uint32_t, TracePolynomial> skew;
  for (std::uint32_t j = 1; j <= 2; ++j) {
    TracePolynomial x = TracePolynomial::variable(j);
    skew[j] = x - tp_involute(x);
  }
  return is_trace_identity(tp_substitute(f.value, skew), n);
}

bool verify_fm_identity(std::uint32_t m) {
  return is_skew_substituted_identity(newton_fm(m), 2 * m);
}

FmWitness fm_symplectic_witness(std::size_t n, std::uint32_t m, std::size_t d) {
  if (d % 2 == 0) throw DEvenRejected();
  const std::size_t size = 2 * n * d;
  // J = blkdiag of [[0,1],[-1,0]]; S^{+d} = blkdiag of d copies of
  // diag(1,..,1,0) (2n-1 ones).
  NumMatrix J(size, size), Sd(size, size);
  for (std::size_t b = 0; b + 1 < size; b += 2) {
    J(b, b + 1) = Rational(1);
    J(b + 1, b) = Rational(-1);
  }
  for (std::size_t blk = 0; blk < d; ++blk)
    for (std::size_t i = 0; i + 1 < 2 * n; ++i) Sd(blk * 2 * n + i, blk * 2 * n + i) = Rational(1);
  FmWitness w;
  w.a1 = -(Sd * J);
  w.a2 = J;
  w.value = eval_numeric(newton_fm(m).value, {w.a1, w.a2});
  return w;
}

TracePolynomial capelli(std::uint32_t m) {
  if (m < 1 || m > 6) throw MTooLarge("capelli supports 1 <= m <= 6");
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 1u);
  TracePolynomial c;
  do {
    // sign by counting inversions
    int inv = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j]) ++inv;
    std::vector<Letter> letters;
    for (std::uint32_t i = 0; i < m; ++i) {
      letters.push_back({perm[i], false});
      if (i + 1 < m) letters.push_back({m + 1 + i, false});
    }
    c.add_term(TraceMonomial({}, Word(std::move(letters))), Rational(inv % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

NumMatrix symplectic_involution(const NumMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw OddDimension();
  const std::size_t h = m.rows() / 2;
  NumMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      r(i, j) = m(h + j, h + i);        // d^t
      r(i, h + j) = -m(j, h + i);       // -b^t
      r(h + i, j) = -m(h + j, i);       // -c^t
      r(h + i, h + j) = m(j, i);        // a^t
    }
  return r;
}

bool cayley_hamilton_check(std::size_t n, bool perturb) {
  if (n > 4) throw MTooLarge("cayley_hamilton_check supports n <= 4");
  GenericContext ctx(n, 1);
  PolyMatrix xi = generic_matrix(ctx, 1);
  PolyMatrix a = (xi + xi.transpose()).scaled(MultiPoly(Rational(1, 2)));
  std::vector<MultiPoly> sigma = char_coeffs(a);
  if (perturb) sigma[0] += MultiPoly(1);
  PolyMatrix neg_a = -a;
  PolyMatrix acc = PolyMatrix::identity(n);  // (-a)^n built by stages below
  std::vector<PolyMatrix> powers{PolyMatrix::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * neg_a);
  acc = powers[n];
  for (std::size_t j = 1; j <= n; ++j) acc += powers[n - j].scaled(sigma[j - 1]);
  return acc.is_zero();
}

NumMatrix psi1(const Rational& re, const Rational& im) {
  NumMatrix m(2, 2);
  m(0, 0) = re;
  m(0, 1) = -im;
  m(1, 0) = im;
  m(1, 1) = re;
  return m;
}

NumMatrix psi2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  NumMatrix m(4, 4);
  const Rational e[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = e[i][j];
  return m;
}

namespace {

struct Quat {
  Rational a, b, c, d;
  Quat operator*(const Quat& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d, a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b, a * o.d + b * o.c - c * o.b + d * o.a};
  }
  Quat conj() const { return {a, -b, -c, -d}; }
};

}  // namespace

bool psi_embeddings_check() {
  if (psi1(Rational(1), Rational(0)) != NumMatrix::identity(2)) return false;
  if (psi2(Rational(1), Rational(0), Rational(0), Rational(0)) != NumMatrix::identity(4))
    return false;
  // i * j = k
  NumMatrix qi = psi2(Rational(0), Rational(1), Rational(0), Rational(0));
  NumMatrix qj = psi2(Rational(0), Rational(0), Rational(1), Rational(0));
  NumMatrix qk = psi2(Rational(0), Rational(0), Rational(0), Rational(1));
  if (qi * qj != qk) return false;

  std::mt19937_64 rng(0x707369);
  std::uniform_int_distribution<long> e(-9, 9);
  auto r = [&] { return Rational(e(rng), 1 + (e(rng) & 3)); };
  for (int t = 0; t < 25; ++t) {
    Rational za = r(), zb = r(), wa = r(), wb = r();
    // complex multiplicativity and involution/trace behaviour
    NumMatrix zw = psi1(za * wa - zb * wb, za * wb + zb * wa);
    if (psi1(za, zb) * psi1(wa, wb) != zw) return false;
    if (psi1(za, -zb) != psi1(za, zb).transpose()) return false;
    if (psi1(za, zb).trace() != za + za) return false;  // reduced trace 2 Re z

    Quat q{r(), r(), r(), r()}, p{r(), r(), r(), r()};
    Quat qp = q * p;
    NumMatrix mq = psi2(q.a, q.b, q.c, q.d), mp = psi2(p.a, p.b, p.c, p.d);
    if (mq * mp != psi2(qp.a, qp.b, qp.c, qp.d)) return false;
    Quat qc = q.conj();
    if (psi2(qc.a, qc.b, qc.c, qc.d) != mq.transpose()) return false;
    if (mq.trace() != q.a + q.a + q.a + q.a) return false;  // doubles the reduced trace 2a
  }
  return true;
}

}  // namespace tracealg
