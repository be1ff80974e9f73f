#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tracealg/generic_eval.hpp"

namespace tracealg {

using FuncMatrix = ExactMatrix<RatFunc>;

/// The split model of the 3x3, g = 1 trace *-algebra: one generic matrix Xi
/// with transpose as the ambient involution, the antisymmetric pair
/// a1 = Xi - Xi^t, a2 = e1 Xi (1-e1) - (1-e1) Xi^t e1, their rank-1
/// complement idempotents e_i = 1 - 2 tr(a_i^2)^{-1} a_i^2, the diagonal
/// weights beta1 = -1/2 tr(a^2) (a square-class representative: tr(a1^2) =
/// 4 tr(a^2)) and beta2 = -1/2 tr(a2^2) of the twisted involution, and the
/// transcendence basis alpha_1..alpha_6 of the centre.
struct PS3Context {
  PolyMatrix xi;         // generic Xi
  PolyMatrix s, a, s0;   // s = (Xi+Xi^t)/2, a = (Xi-Xi^t)/2, s0 = s - tr(s)/3
  FuncMatrix a1, a2, e1, e2;
  RatFunc beta1, beta2;
  std::array<RatFunc, 6> alpha;
};

PS3Context build_ps3_context();

/// e_i^2 = e_i = e_i^t, tr(e_i) = 1, a_i e_i = e_i a_i = 0, e1 e2 = e2 e1 = 0,
/// all as exact rational-function identities.
bool verify_idempotents(const PS3Context& ctx);

/// a^3 - 1/2 tr(a^2) a = 0 for a generic antisymmetric n x n matrix; holds
/// for n = 3 (trace and determinant of an odd antisymmetric matrix vanish)
/// and fails for n = 4, which serves as the control.
bool verify_antisym_cubic(std::size_t n = 3);

/// beta1 = -1/2 alpha2,
/// beta2 = (288 a2^3 a4^2 a6^2 - (3 a3 a4 + 2 a4 a5 + 9 a3)^2) / (9 a2^2 (a4+1)),
/// tr(s0^2) = 2 a4 beta2 / (a4+1) + 6 a3^2 / a2^2   (writing a_i for alpha_i).
bool verify_beta_formulas(const PS3Context& ctx);

/// Jacobian criterion: the 6x9 matrix of partial derivatives of alpha_1..6
/// in the xi entries has exact rank 6 at a random rational point (resampling
/// when a denominator vanishes, at most 100 attempts).
bool verify_independence(const PS3Context& ctx, std::uint64_t seed);

/// x -> diag(1, beta1, beta2)^{-1} x^t diag(1, beta1, beta2).
FuncMatrix twisted_involution(const FuncMatrix& m, const PS3Context& ctx);

/// beta1 beta2 = tr(h h^ti) for h = beta2 E_23; the identity is checked
/// before the (totally positive, central) witness is returned.
RatFunc total_positivity_witness(const PS3Context& ctx);

/// (1,1) entry of sum_i r_i r_i^ti, checked against the three-term form
/// sum_i (r_i11^2 + beta1^{-1} r_i12^2 + beta2^{-1} r_i13^2) that drives the
/// non-representability argument.
RatFunc entry11_obstruction(const std::vector<FuncMatrix>& rs, const PS3Context& ctx);

}  // namespace tracealg
