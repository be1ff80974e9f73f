#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tracealg/trace_ring.hpp"

namespace tracealg {

/// Expression tree for the shared text syntax. Subtraction is stored as
/// Add(a, Neg(b)); Pow exponents are nonnegative; Tr may nest (an inner Tr
/// is a central factor).
struct Ast {
  enum class Kind { Scalar, Var, Tr, Add, Mul, Neg, Pow };

  Kind kind = Kind::Scalar;
  Rational scalar;                                // Scalar
  std::uint32_t j = 0;                            // Var
  bool starred = false;                           // Var
  std::vector<std::shared_ptr<const Ast>> kids;   // Tr/Neg/Pow: 1, Add/Mul: >= 2
  std::uint32_t exp = 0;                          // Pow
};

using AstPtr = std::shared_ptr<const Ast>;

/// Grammar:
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" nat)?
///   atom   := rational | "x" nat "'"? | "Tr" "(" expr ")" | "(" expr ")"
/// Rational literals only ("p" or "p/q"); float literals are rejected.
/// Throws SyntaxError with 1-based line/column and the expected tokens.
AstPtr parse(const std::string& text);

TracePolynomial to_trace_polynomial(const Ast& a);
inline TracePolynomial to_trace_polynomial(const AstPtr& a) { return to_trace_polynomial(*a); }

/// parse + to_trace_polynomial.
TracePolynomial parse_trace_polynomial(const std::string& text);

/// Inverse of parse up to equivalence: parse(print(a)) yields the same
/// TracePolynomial as a.
std::string print(const Ast& a);
inline std::string print(const AstPtr& a) { return print(*a); }

}  // namespace tracealg
