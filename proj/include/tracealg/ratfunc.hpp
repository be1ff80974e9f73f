#pragma once

#include <vector>

#include "tracealg/multipoly.hpp"

namespace tracealg {

/// Rational function num/den over exact rationals. The denominator is kept
/// as a list of monic factors so that products and quotients built from the
/// same generators cancel without a multivariate gcd. The external contract
/// is still a single num/den pair (see den()).
class RatFunc {
 public:
  RatFunc() : num_(0) {}
  RatFunc(const Rational& c) : num_(c) {}  // NOLINT: scalar embedding
  RatFunc(long c) : num_(Rational(c)) {}
  RatFunc(MultiPoly num) : num_(std::move(num)) {}  // NOLINT: polynomial embedding
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  /// Expanded denominator (product of the stored factors).
  MultiPoly den() const;
  const std::vector<MultiPoly>& den_factors() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc pow(std::uint32_t e) const;
  RatFunc inverse() const;

  RatFunc derivative(VarId v) const;
  Rational eval(const std::unordered_map<std::uint32_t, Rational>& assignment) const;

  /// Exact equality as rational functions (cross-multiplication after
  /// cancelling shared denominator factors).
  friend bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

  std::string str() const;

 private:
  MultiPoly num_;
  std::vector<MultiPoly> den_;  // monic non-constant factors

  void push_den_factor(MultiPoly f);
  void reduce();
  static void cancel_common(std::vector<MultiPoly>& a, std::vector<MultiPoly>& b);
};

bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

}  // namespace tracealg
