#include "tracealg/matrix.hpp"

#include <algorithm>

namespace tracealg {

namespace {

// Back-substitution for L^t u = y with L unit lower triangular.
std::vector<Rational> solve_unit_upper(const ExactMatrix<Rational>& L,
                                       const std::vector<Rational>& y) {
  const std::size_t n = y.size();
  std::vector<Rational> u(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= L(j, ii) * u[j];
    u[ii] = s;
  }
  return u;
}

Rational quad_form(const ExactMatrix<Rational>& m, const std::vector<Rational>& v) {
  Rational q;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) q += v[i] * m(i, j) * v[j];
  }
  return q;
}

}  // namespace

LdltResult exact_ldlt(const ExactMatrix<Rational>& m) {
  if (!m.is_symmetric()) throw NotSymmetric();
  const std::size_t n = m.rows();

  LdltResult res;
  res.L = ExactMatrix<Rational>::identity(n);
  res.d.assign(n, Rational(0));
  res.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.perm[i] = i;

  ExactMatrix<Rational> a = m;  // working Schur complement (full, symmetric)

  auto finish_indefinite = [&](std::vector<Rational> y) {
    std::vector<Rational> u = solve_unit_upper(res.L, y);
    res.witness.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) res.witness[res.perm[i]] = u[i];
    res.witness_value = quad_form(m, res.witness);
    if (res.witness_value.sign() >= 0)
      throw std::logic_error("exact_ldlt: witness failed self-check");
    res.success = false;
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (a(r, r).abs() > a(piv, piv).abs()) piv = r;

    if (a(piv, piv).is_zero()) {
      // Remaining diagonal is zero; either the block is zero (rank done) or
      // an off-diagonal entry certifies indefiniteness.
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            std::vector<Rational> y(n, Rational(0));
            y[i] = Rational(1);
            y[j] = Rational(a(i, j).sign() > 0 ? -1 : 1);
            finish_indefinite(std::move(y));
            return res;
          }
      break;  // zero Schur complement: trailing d entries stay 0
    }

    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, piv), a(i, k));
      std::swap(res.perm[piv], res.perm[k]);
      for (std::size_t j = 0; j < k; ++j) std::swap(res.L(piv, j), res.L(k, j));
    }

    const Rational dk = a(k, k);
    res.d[k] = dk;
    for (std::size_t i = k + 1; i < n; ++i) res.L(i, k) = a(i, k) / dk;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = k + 1; j <= i; ++j) {
        a(i, j) -= res.L(i, k) * a(j, k);
        a(j, i) = a(i, j);
      }
    }
  }

  for (std::size_t k = 0; k < n; ++k)
    if (res.d[k].sign() < 0) {
      std::vector<Rational> y(n, Rational(0));
      y[k] = Rational(1);
      finish_indefinite(std::move(y));
      return res;
    }

  res.success = true;
  return res;
}

ExactMatrix<RatFunc> jacobian(const std::vector<RatFunc>& fs, const std::vector<VarId>& vars) {
  ExactMatrix<RatFunc> j(fs.size(), vars.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t k = 0; k < vars.size(); ++k) j(i, k) = fs[i].derivative(vars[k]);
  return j;
}

}  // namespace tracealg
