#pragma once

#include <map>
#include <vector>

#include "tracealg/matrix.hpp"
#include "tracealg/multipoly.hpp"
#include "tracealg/trace_ring.hpp"

namespace tracealg {

struct GenericContext {
  std::size_t n;    // matrix size
  std::uint32_t g;  // number of generic matrices
  GenericContext(std::size_t n, std::uint32_t g) : n(n), g(g) {
    if (n < 1 || g < 1) throw IndexOutOfRange("GenericContext needs n >= 1, g >= 1");
  }
};

using PolyMatrix = ExactMatrix<MultiPoly>;
using NumMatrix = ExactMatrix<Rational>;

/// Generic matrix Xi_j with entry (i,k) = xi_{j,i,k} (indices 1-based).
PolyMatrix generic_matrix(const GenericContext& ctx, std::uint32_t j);

/// x_j -> Xi_j, x_j' -> Xi_j^t, Tr(w) -> tr(w(Xi)); Tr(1) -> n.
PolyMatrix eval_symbolic(const TracePolynomial& f, const GenericContext& ctx);

/// Evaluation at a concrete matrix tuple; x_j -> X[j-1].
NumMatrix eval_numeric(const TracePolynomial& f, const std::vector<NumMatrix>& X);

std::size_t default_term_budget();  // TRACEALG_TERM_BUDGET, default 10^6

struct IdentityCheck {
  bool identity;
  bool probabilistic;  // true when decided by randomized evaluation
};

/// Trace-identity oracle at size n: exact expansion over the generic
/// matrices while within the term budget, otherwise Schwartz-Zippel with
/// failure probability below 2^-64.
IdentityCheck check_trace_identity(const TracePolynomial& f, std::size_t n,
                                   std::size_t term_budget = default_term_budget());
bool is_trace_identity(const TracePolynomial& f, std::size_t n);

/// Faddeev-LeVerrier signed characteristic coefficients [sigma_1..sigma_n]:
/// char poly = t^n - sigma_1 t^{n-1} + sigma_2 t^{n-2} - ...
template <typename T>
std::vector<T> char_coeffs(const ExactMatrix<T>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("char_coeffs needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<T> sigma;
  sigma.reserve(n);
  ExactMatrix<T> am(n, n);  // m * M_{k-1}
  T c = T(1);               // c_{n-k+1}
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix<T> mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c;
    am = m * mk;
    c = -(am.trace() * T(Rational(1, static_cast<long>(k))));
    sigma.push_back(k % 2 ? -c : c);  // sigma_k = (-1)^k c_{n-k}
  }
  return sigma;
}

/// Exact semidefiniteness of a symmetric rational matrix via sigma signs
/// (real spectrum makes sign conditions on the char coefficients sufficient).
bool is_psd(const NumMatrix& m);
bool is_pd(const NumMatrix& m);

/// Matrix of group variables u_{ik}.
PolyMatrix u_matrix(std::size_t n);

/// Substitutes xi_{j,i,k} -> entry (i,k) of U Xi_j U^t. No orthogonality
/// reduction is applied; u variables remain symbolic.
MultiPoly apply_group_element(const MultiPoly& f, const GenericContext& ctx);
/// Entrywise substitution conjugated back by U^t ... U, so concomitants are
/// fixed points once a numeric orthogonal u is substituted.
PolyMatrix apply_group_element(const PolyMatrix& f, const GenericContext& ctx);

/// Splits f = sum_i f_i * mu_i with mu_i the monomials of f in the given
/// family and f_i free of that family.
std::map<Monomial, MultiPoly, MonomialGradedLexGreater> split_by_family(const MultiPoly& f,
                                                                        VarFamily fam);

}  // namespace tracealg
