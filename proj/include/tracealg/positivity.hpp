#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tracealg/generic_eval.hpp"

namespace tracealg {

/// Finite description of the semialgebraic set
/// K_S = { X : s(X) >= 0 for all s in generators } at matrix size n.
struct ConstraintSet {
  std::vector<TracePolynomial> generators;  // each symmetric
  std::size_t n;
  ConstraintSet(std::vector<TracePolynomial> gens, std::size_t n);
};

/// An element of the central preordering generated by Tr(h h'):
/// sum over products of scale * prod_i Tr(h_i h_i'), scale a nonnegative
/// rational (nonnegative rationals are sums of rational squares, hence
/// admissible weights).
struct OmegaProduct {
  Rational scale{1};
  std::vector<TracePolynomial> factors;
};
struct OmegaCertificate {
  std::vector<OmegaProduct> products;
};

TracePolynomial omega_value(const OmegaCertificate& w);

/// One summand of a cyclic quadratic module / preordering element:
///   Omega:       omega * h h'                  (weighted hermitian square)
///   Conjugate:   h s h'                        (s a generator, by index)
///   ScaledTrace: prod_j Tr(h_j s_j h_j') * omega * h h'
/// Multi-factor trace products materialize the preordering extension
/// S' = S u { prod Tr(h s h') } explicitly, so a single term shape covers
/// both quadratic-module and preordering certificates.
struct QMTerm {
  enum class Kind { Omega, Conjugate, ScaledTrace };
  Kind kind = Kind::Omega;
  OmegaCertificate omega;     // Omega, ScaledTrace
  TracePolynomial h{1};       // square factor (Omega/ScaledTrace) or conjugator
  std::size_t s = 0;          // Conjugate: generator index
  std::vector<std::pair<TracePolynomial, std::size_t>> traces;  // ScaledTrace

  static QMTerm make_omega(OmegaCertificate w, TracePolynomial h = TracePolynomial(1));
  static QMTerm make_conjugate(TracePolynomial h, std::size_t s);
  static QMTerm make_scaled_trace(std::vector<std::pair<TracePolynomial, std::size_t>> traces,
                                  OmegaCertificate w,
                                  TracePolynomial h = TracePolynomial(1));
};

struct CyclicQMCertificate {
  std::vector<QMTerm> terms;
};

/// Reconstructs the represented ring element. Throws BadIndex when a term
/// references a generator outside S.
TracePolynomial certificate_value(const CyclicQMCertificate& cert, const ConstraintSet& S);

/// Krivine-Stengle certificate for the sign behaviour of a on K_S:
///   psd:  a t1 = t1 a = a^{2k} + t2
///   pd:   a t1 = t1 a = 1 + t2        (k must be 0)
///   zero: -a^{2k} = t1                (t2 must be empty)
struct KSCertificate {
  enum class Mode { Psd, Pd, Zero };
  Mode mode = Mode::Psd;
  std::uint32_t k = 0;
  CyclicQMCertificate t1, t2;
};

/// Checks the mode's equation modulo n x n trace identities. a must be
/// symmetric; both orders a t1 and t1 a are verified.
bool verify_ks(const TracePolynomial& a, const KSCertificate& cert, const ConstraintSet& S);

/// K_S = {} certificate: the represented value equals -1 at size n.
bool verify_empty_refutation(const ConstraintSet& S, const CyclicQMCertificate& cert);

/// Two-sided (trace-closed) ideal combination sum_i left_i u_{s_i} right_i,
/// optionally wrapped in Tr(.) per term.
struct IdealCombination {
  struct Term {
    TracePolynomial left{1};
    std::size_t s = 0;  // index into the ideal generators
    TracePolynomial right{1};
    bool traced = false;
  };
  std::vector<Term> terms;
};

/// Real Nullstellensatz witness: -(h' h)^k = omega + ideal combination,
/// checked modulo n x n trace identities.
bool verify_nullstellensatz(const TracePolynomial& h,
                            const std::vector<TracePolynomial>& ideal_gens,
                            const OmegaCertificate& omega, const IdealCombination& comb,
                            std::uint32_t k, std::size_t n);

/// Signed characteristic coefficients [sigma_1(s), .., sigma_n(s)] as pure
/// trace polynomials, via Newton's identities from Tr(s^i). K_{{s}} equals
/// K_{{sigma_1,..,sigma_n}}.
std::vector<TracePolynomial> central_reduce_sigma(const TracePolynomial& s, std::size_t n);

/// The four-element central reduction for n = 3:
///   c1 = Tr(s),
///   c2 = Tr((s - s1) s (s - s1)),
///   c3 = Tr((s^2 - s1 s + s2) s (s^2 - s1 s + s2)),
///   c4 = Tr((s - s1 - 1) s (s - s1 - 1))
/// with s_j = sigma_j(s). Each is verified against its closed form
/// (s1, s1 s2 + 3 s3, s2 s3, s1 + 4 s2 + 3 s3 + s1 s2) modulo 3x3 trace
/// identities before returning; K_{{s}} = K_{{c1,..,c4}}.
std::vector<TracePolynomial> central_reduce_example61(const TracePolynomial& s, std::size_t n = 3);

/// f = sum coeffs[i] zeta^i with sum_j f(lambda_j)^2 lambda_j = value < 0.
struct NegativityFunctional {
  std::vector<Rational> coeffs;
  Rational value;
};

/// Builds the Hankel matrix P_ij = p_{i+j-1} from the power sums
/// p_i = sum lambda_j^i alone. Returns nothing when P is PSD (all lambda_j
/// nonnegative); otherwise converts the LDL^t negativity witness of P into
/// a polynomial separating the negative eigenvalue, with the inequality
/// re-checked exactly.
std::optional<NegativityFunctional> negativity_functional(const std::vector<Rational>& lambda);

/// Auxiliary quadratic-form coordinate eta_i (1-based) used by gram_verify.
MultiPoly quad_unit(std::size_t i);

/// Verifies a Gram representation: the scalar form u f(Xi) u^t in the
/// auxiliary coordinates eta equals v G v^t coefficient-by-coefficient, and
/// G is PSD. u = (eta_1, .., eta_n).
bool gram_verify(const TracePolynomial& f, const std::vector<MultiPoly>& basis,
                 const NumMatrix& G, std::size_t n);

/// Searches for X in K_S with f(X) not PSD over rational tuples with entries
/// on the grid [-radius, radius] with the given denominator. Deterministic
/// for fixed seed; returns the witness with the smallest trial index.
std::optional<std::vector<NumMatrix>> sample_refute(const TracePolynomial& f,
                                                    const ConstraintSet& S, std::size_t trials,
                                                    long radius, std::uint64_t seed,
                                                    long denominator = 64);

/// Archimedean test: the certificate represents rho - sum_j x_j x_j' modulo
/// n x n trace identities (j runs over every generator index appearing in
/// the certificate or in S).
bool verify_archimedean_bound(const CyclicQMCertificate& cert, const ConstraintSet& S,
                              const Rational& rho);

}  // namespace tracealg
