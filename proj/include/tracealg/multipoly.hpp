#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tracealg/errors.hpp"
#include "tracealg/rational.hpp"
#include "tracealg/varid.hpp"

namespace tracealg {

/// Power product of commuting variables. Factors sorted by variable code,
/// no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (VarId code, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> f);
  static Monomial var(VarId v, std::uint32_t e = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent_of(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  /// Quotient this/o, or false if o does not divide this.
  bool divide(const Monomial& o, Monomial& out) const;

  /// Graded-lex: higher total degree first; ties broken so that a larger
  /// exponent on an earlier variable wins.
  static int compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<Factor> f_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};
struct MonomialGradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

/// Sparse multivariate polynomial over Rational, terms in descending
/// graded-lex order, no zero coefficients.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c);               // NOLINT: implicit scalar embedding
  MultiPoly(long c) : MultiPoly(Rational(c)) {}
  static MultiPoly var(VarId v, std::uint32_t e = 1);
  static MultiPoly term(const Rational& c, const Monomial& m);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  Rational constant_value() const;
  std::size_t term_count() const { return t_.size(); }
  std::uint32_t degree() const { return t_.empty() ? 0 : t_[0].mono.degree(); }
  const Rational& leading_coef() const;
  const Monomial& leading_mono() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(std::uint32_t e) const;
  MultiPoly scaled(const Rational& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(VarId v) const;
  Rational eval(const std::unordered_map<std::uint32_t, Rational>& assignment) const;
  /// Simultaneous substitution of variables by polynomials; variables absent
  /// from the map are kept.
  MultiPoly substitute(
      const std::unordered_map<std::uint32_t, MultiPoly>& images) const;

  std::vector<VarId> variables() const;
  bool uses_family(VarFamily f) const;

  /// GCD of all coefficients, signed so leading coefficient stays positive.
  Rational content() const;
  /// Componentwise min of all exponent vectors.
  Monomial monomial_content() const;

  /// Exact division: on success sets q with *this == q * d and returns true.
  /// Gives up (returns false) once the quotient exceeds max_quotient_terms.
  bool try_divide(const MultiPoly& d, MultiPoly& q,
                  std::size_t max_quotient_terms = static_cast<std::size_t>(-1)) const;

  std::string str() const;

  static MultiPoly from_term_map(
      std::unordered_map<Monomial, Rational, MonomialHash>&& acc);

 private:
  std::vector<Term> t_;
  void normalize_sorted();

  friend bool operator==(const Term& a, const Term& b);
};

inline bool operator==(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return a.mono == b.mono && a.coef == b.coef;
}

/// GCD for univariate polynomials (both in the same single variable);
/// returns 1 when either input is multivariate or constant.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace tracealg
