#pragma once

#include "tracealg/generic_eval.hpp"

namespace tracealg {

/// Casimir functional on monomials in the u variables: for each (i,j),
/// the st-coefficient of mu((1+s e_ij)(1+t e_ij)) - mu((1+s e_ij)(1+t e_ji)),
/// summed over i,j = 1..n. Memoized; thread safe.
Rational casimir_value(const Monomial& mu, std::size_t n);

/// Casimir action on polynomials in the xi variables: writes
/// f^u = sum_i f_i mu_i and returns sum_i f_i casimir_value(mu_i).
/// Preserves total xi-degree.
MultiPoly casimir_tilde(const MultiPoly& f, std::size_t n);

struct ReynoldsReport {
  MultiPoly input;
  MultiPoly output;
  std::vector<Rational> minimal_poly;  // monic, ascending coefficients
  std::size_t iterates = 0;
  bool probabilistic = false;  // always exact in this implementation
};

/// SO(n)-Reynolds operator R''. Finds the minimal monic p with
/// p(casimir_tilde)(f) = 0 by exact incremental rank checks; if p(0) = 0,
/// p = t q and R''(f) = q(0)^{-1} q(casimir_tilde)(f). If p(0) != 0 the
/// Casimir action is invertible on the cyclic span, so the invariant
/// component is 0 (validated against a numeric Haar average).
ReynoldsReport reynolds_so_report(const MultiPoly& f, std::size_t n);
MultiPoly reynolds_so(const MultiPoly& f, std::size_t n);

/// O(n)-Reynolds operator R'(f) = (R''(f) + R''(f)^v)/2, v = diag(-1,1,..,1).
MultiPoly reynolds_on(const MultiPoly& f, std::size_t n);

/// Concomitant lift R: appends an auxiliary generic matrix Xi_{g+1},
/// applies R' to tr(f Xi_{g+1}) and reads f0 off entrywise:
/// f0(i,j) = coefficient of xi_{g+1,j,i}.
PolyMatrix reynolds_matrix(const PolyMatrix& f, const GenericContext& ctx);

}  // namespace tracealg
