#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tracealg/errors.hpp"
#include "tracealg/rational.hpp"

namespace tracealg {

/// Generator x_j or its involute x_j'.
struct Letter {
  std::uint32_t j = 1;
  bool starred = false;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.j == b.j && a.starred == b.starred;
  }
  // x1 < x1' < x2 < x2' < ...
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.j != b.j ? a.j < b.j : a.starred < b.starred;
  }
  std::string str() const { return "x" + std::to_string(j) + (starred ? "'" : ""); }
};

/// Word in the free *-monoid; empty = 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : l_(std::move(ls)) {}
  static Word letter(std::uint32_t j, bool starred = false) { return Word({{j, starred}}); }

  const std::vector<Letter>& letters() const { return l_; }
  bool empty() const { return l_.empty(); }
  std::size_t size() const { return l_.size(); }

  Word operator*(const Word& o) const {
    Word w = *this;
    w.l_.insert(w.l_.end(), o.l_.begin(), o.l_.end());
    return w;
  }
  Word rotated(std::size_t k) const;

  /// Graded-lex: shorter first, then letterwise.
  static int compare(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.l_ == b.l_; }
  friend bool operator<(const Word& a, const Word& b) { return compare(a, b) < 0; }

  std::uint32_t max_index() const;
  std::string str() const;  // "x1*x2'" ; "1" for the empty word

 private:
  std::vector<Letter> l_;
};

/// Reversal + star of each letter; an involutive anti-automorphism.
Word word_involute(const Word& w);

/// Formal trace of a word, stored by the minimal representative of the
/// rotation/involution orbit. Tr(1) (empty word) is a genuine generator.
class TraceSymbol {
 public:
  TraceSymbol() = default;  // Tr(1)
  const Word& rep() const { return rep_; }

  friend bool operator==(const TraceSymbol& a, const TraceSymbol& b) { return a.rep_ == b.rep_; }
  friend bool operator<(const TraceSymbol& a, const TraceSymbol& b) { return a.rep_ < b.rep_; }
  std::string str() const { return "Tr(" + rep_.str() + ")"; }

 private:
  friend TraceSymbol trace_canon(const Word& w);
  Word rep_;
};

/// Minimum over all rotations of w and of w^* (Tr(w1 w2) = Tr(w2 w1),
/// Tr(w^*) = Tr(w)).
TraceSymbol trace_canon(const Word& w);

/// Product of commuting trace symbols times one word.
struct TraceMonomial {
  std::vector<TraceSymbol> pure;  // sorted
  Word word;

  TraceMonomial() = default;
  TraceMonomial(std::vector<TraceSymbol> p, Word w);

  TraceMonomial operator*(const TraceMonomial& o) const;
  friend bool operator==(const TraceMonomial& a, const TraceMonomial& b) {
    return a.pure == b.pure && a.word == b.word;
  }
  friend bool operator<(const TraceMonomial& a, const TraceMonomial& b);
  std::string str() const;
};

/// Element of the free trace ring with involution.
class TracePolynomial {
 public:
  TracePolynomial() = default;
  TracePolynomial(const Rational& c);  // NOLINT: scalar embedding
  TracePolynomial(long c) : TracePolynomial(Rational(c)) {}
  static TracePolynomial variable(std::uint32_t j, bool starred = false);
  static TracePolynomial from_word(const Word& w);
  static TracePolynomial term(const Rational& c, const TraceMonomial& m);

  const std::map<TraceMonomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  std::uint32_t max_index() const;

  TracePolynomial operator-() const;
  TracePolynomial operator+(const TracePolynomial& o) const;
  TracePolynomial operator-(const TracePolynomial& o) const;
  TracePolynomial operator*(const TracePolynomial& o) const;
  TracePolynomial& operator+=(const TracePolynomial& o) { return *this = *this + o; }
  TracePolynomial& operator-=(const TracePolynomial& o) { return *this = *this - o; }
  TracePolynomial& operator*=(const TracePolynomial& o) { return *this = *this * o; }
  TracePolynomial pow(std::uint32_t e) const;
  TracePolynomial scaled(const Rational& c) const;

  friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const TracePolynomial& a, const TracePolynomial& b) {
    return !(a == b);
  }

  void add_term(const TraceMonomial& m, const Rational& c);

  std::string str() const;

 private:
  std::map<TraceMonomial, Rational> t_;
};

/// The involution: reverses words, fixes trace symbols and coefficients.
TracePolynomial tp_involute(const TracePolynomial& f);

/// T-linear trace: each term's word becomes a canonical trace symbol.
TracePolynomial tp_trace(const TracePolynomial& f);

/// Homomorphic substitution x_j -> images[j] (and x_j' -> images[j]^*);
/// Tr(w) maps to tp_trace of the substituted word.
TracePolynomial tp_substitute(const TracePolynomial& f,
                              const std::map<std::uint32_t, TracePolynomial>& images);

}  // namespace tracealg
