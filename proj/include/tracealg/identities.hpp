#pragma once

#include "tracealg/generic_eval.hpp"

namespace tracealg {

/// f_m = sum_k (-1)^k f'_k (x1 x2)^{m-k} with f'_0 = 1 and the Newton-style
/// recursion f'_k = sum_{i=1}^k (1/2k) (-1)^{i-1} Tr((x1 x2)^i) f'_{k-i}.
struct FmPolynomial {
  std::uint32_t m = 0;
  TracePolynomial value;
};

FmPolynomial newton_fm(std::uint32_t m);

/// Misprinted variant with Tr((x1 x2)^k) inside the i-sum; kept only as a
/// falsification control — it is NOT a trace identity for m >= 2.
FmPolynomial newton_fm_misprint(std::uint32_t m);

/// True iff f(x1 - x1', x2 - x2') is a trace identity at size n.
bool is_skew_substituted_identity(const FmPolynomial& f, std::size_t n);
/// The headline check at n = 2m.
bool verify_fm_identity(std::uint32_t m);

struct FmWitness {
  NumMatrix a1, a2;  // antisymmetric factors with a1 a2 = S^{+d}
  NumMatrix value;   // f_m(a1, a2)
};

/// Deterministic witness that f_m does not vanish on all products of
/// antisymmetric 2n x 2n blocks repeated d times (d odd):
/// S = diag(1,..,1,0), S = (-S J) J.
FmWitness fm_symplectic_witness(std::size_t n, std::uint32_t m, std::size_t d);

/// Capelli polynomial c_m over x_1..x_{2m-1} (m! * m words); m <= 6.
TracePolynomial capelli(std::uint32_t m);

/// Block involution (a b; c d) -> (d^t -b^t; -c^t a^t).
NumMatrix symplectic_involution(const NumMatrix& m);

/// Verifies (-a)^n + sum_j sigma_j (-a)^{n-j} = 0 for the generic symmetric
/// a = (Xi + Xi^t)/2; n <= 4. `perturb` shifts sigma_1 by 1 as a control.
bool cayley_hamilton_check(std::size_t n, bool perturb = false);

/// Real matrix models of C and H: multiplicativity, trace behaviour
/// (psi_1 preserves the reduced trace, psi_2 doubles it) and conversion of
/// the conjugate/symplectic involutions into transpose.
bool psi_embeddings_check();

NumMatrix psi1(const Rational& re, const Rational& im);
NumMatrix psi2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

}  // namespace tracealg
