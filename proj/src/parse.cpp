#include "tracealg/parse.hpp"

#include <cctype>
#include <utility>

namespace tracealg {

namespace {

struct Token {
  enum class Type { Number, Letter, Tr, Plus, Minus, Star, Caret, LParen, RParen, End };
  Type type = Type::End;
  Rational value;            // Number
  std::uint32_t j = 0;       // Letter
  bool starred = false;      // Letter
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) step();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= s_.size()) {
      tok_.type = Token::Type::End;
      return;
    }
    const char c = s_[pos_];
    switch (c) {
      case '+': tok_.type = Token::Type::Plus; step(); return;
      case '-': tok_.type = Token::Type::Minus; step(); return;
      case '*': tok_.type = Token::Type::Star; step(); return;
      case '^': tok_.type = Token::Type::Caret; step(); return;
      case '(': tok_.type = Token::Type::LParen; step(); return;
      case ')': tok_.type = Token::Type::RParen; step(); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_number();
      return;
    }
    if (c == 'x') {
      step();
      tok_.type = Token::Type::Letter;
      tok_.j = lex_nat("generator index after 'x'");
      if (pos_ < s_.size() && s_[pos_] == '\'') {
        tok_.starred = true;
        step();
      }
      return;
    }
    if (c == 'T') {
      if (s_.compare(pos_, 2, "Tr") == 0) {
        step();
        step();
        tok_.type = Token::Type::Tr;
        return;
      }
    }
    throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  void lex_number() {
    mpz_class num(lex_digits("number"));
    if (pos_ < s_.size() && s_[pos_] == '.')
      throw SyntaxError(line_, col_, "float literals are not supported; use p/q");
    tok_.type = Token::Type::Number;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      step();
      mpz_class den(lex_digits("denominator after '/'"));
      if (den == 0) throw SyntaxError(tok_.line, tok_.col, "zero denominator");
      tok_.value = Rational(num, den);
    } else {
      tok_.value = Rational(num);
    }
  }

  std::string lex_digits(const std::string& what) {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw SyntaxError(line_, col_, "expected " + what);
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      d += s_[pos_];
      step();
    }
    return d;
  }

  std::uint32_t lex_nat(const std::string& what) {
    const std::string d = lex_digits(what);
    if (d.size() > 9) throw SyntaxError(line_, col_, what + " too large");
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  void step() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

AstPtr make(Ast a) { return std::make_shared<const Ast>(std::move(a)); }

AstPtr scalar_node(Rational c) {
  Ast a;
  a.kind = Ast::Kind::Scalar;
  a.scalar = std::move(c);
  return make(std::move(a));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  AstPtr parse_all() {
    AstPtr e = expr();
    const Token& t = lex_.peek();
    if (t.type != Token::Type::End)
      throw SyntaxError(t.line, t.col, "expected '+', '-', '*', '^' or end of input");
    return e;
  }

 private:
  AstPtr expr() {
    bool lead_neg = false;
    if (lex_.peek().type == Token::Type::Minus) {
      lex_.take();
      lead_neg = true;
    }
    AstPtr first = term();
    if (lead_neg) first = negate(first);
    std::vector<AstPtr> kids{first};
    while (lex_.peek().type == Token::Type::Plus || lex_.peek().type == Token::Type::Minus) {
      const bool minus = lex_.take().type == Token::Type::Minus;
      AstPtr t = term();
      kids.push_back(minus ? negate(t) : t);
    }
    if (kids.size() == 1) return kids[0];
    Ast a;
    a.kind = Ast::Kind::Add;
    a.kids = std::move(kids);
    return make(std::move(a));
  }

  AstPtr term() {
    std::vector<AstPtr> kids{factor()};
    while (lex_.peek().type == Token::Type::Star) {
      lex_.take();
      kids.push_back(factor());
    }
    if (kids.size() == 1) return kids[0];
    Ast a;
    a.kind = Ast::Kind::Mul;
    a.kids = std::move(kids);
    return make(std::move(a));
  }

  AstPtr factor() {
    AstPtr base = atom();
    if (lex_.peek().type != Token::Type::Caret) return base;
    lex_.take();
    const Token t = lex_.peek();
    if (t.type != Token::Type::Number || t.value.den() != 1 || t.value.sign() < 0)
      throw SyntaxError(t.line, t.col, "expected a natural number exponent after '^'");
    lex_.take();
    if (t.value.num() > 1000000) throw SyntaxError(t.line, t.col, "exponent too large");
    Ast a;
    a.kind = Ast::Kind::Pow;
    a.exp = static_cast<std::uint32_t>(t.value.num().get_ui());
    a.kids = {base};
    return make(std::move(a));
  }

  AstPtr atom() {
    const Token t = lex_.peek();
    switch (t.type) {
      case Token::Type::Number:
        lex_.take();
        return scalar_node(t.value);
      case Token::Type::Letter: {
        lex_.take();
        if (t.j == 0) throw SyntaxError(t.line, t.col, "generator indices start at 1");
        Ast a;
        a.kind = Ast::Kind::Var;
        a.j = t.j;
        a.starred = t.starred;
        return make(std::move(a));
      }
      case Token::Type::Tr: {
        lex_.take();
        expect(Token::Type::LParen, "'(' after Tr");
        AstPtr inner = expr();
        expect(Token::Type::RParen, "')'");
        Ast a;
        a.kind = Ast::Kind::Tr;
        a.kids = {inner};
        return make(std::move(a));
      }
      case Token::Type::LParen: {
        lex_.take();
        AstPtr inner = expr();
        expect(Token::Type::RParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(t.line, t.col, "expected a rational, 'x<j>', 'Tr(' or '('");
    }
  }

  static AstPtr negate(AstPtr e) {
    if (e->kind == Ast::Kind::Neg) return e->kids[0];
    Ast a;
    a.kind = Ast::Kind::Neg;
    a.kids = {std::move(e)};
    return make(std::move(a));
  }

  void expect(Token::Type type, const std::string& what) {
    const Token& t = lex_.peek();
    if (t.type != type) throw SyntaxError(t.line, t.col, "expected " + what);
    lex_.take();
  }

  Lexer lex_;
};

// Precedence levels for parenthesization: Add < Mul < Neg < Pow < atom.
int prec(Ast::Kind k) {
  switch (k) {
    case Ast::Kind::Add: return 0;
    case Ast::Kind::Mul: return 1;
    case Ast::Kind::Neg: return 2;
    case Ast::Kind::Pow: return 3;
    default: return 4;
  }
}

void print_rec(const Ast& a, int parent_prec, std::string& out) {
  // A bare "-" is only valid at the start of an (sub)expression, so Neg and
  // negative literals need parentheses inside products and powers.
  const bool paren = prec(a.kind) < parent_prec ||
                     (a.kind == Ast::Kind::Neg && parent_prec > 1) ||
                     (a.kind == Ast::Kind::Scalar && a.scalar.sign() < 0 && parent_prec > 0);
  if (paren) out += "(";
  switch (a.kind) {
    case Ast::Kind::Scalar:
      out += a.scalar.str();
      break;
    case Ast::Kind::Var:
      out += "x" + std::to_string(a.j) + (a.starred ? "'" : "");
      break;
    case Ast::Kind::Tr:
      out += "Tr(";
      print_rec(*a.kids[0], 0, out);
      out += ")";
      break;
    case Ast::Kind::Add:
      for (std::size_t i = 0; i < a.kids.size(); ++i) {
        const Ast& kid = *a.kids[i];
        if (i && kid.kind == Ast::Kind::Neg) {
          out += " - ";
          print_rec(*kid.kids[0], 1, out);
        } else {
          if (i) out += " + ";
          print_rec(kid, 1, out);
        }
      }
      break;
    case Ast::Kind::Mul:
      for (std::size_t i = 0; i < a.kids.size(); ++i) {
        if (i) out += "*";
        print_rec(*a.kids[i], 2, out);
      }
      break;
    case Ast::Kind::Neg:
      out += "-";
      print_rec(*a.kids[0], 3, out);
      break;
    case Ast::Kind::Pow:
      print_rec(*a.kids[0], 4, out);
      out += "^" + std::to_string(a.exp);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

AstPtr parse(const std::string& text) { return Parser(text).parse_all(); }

TracePolynomial to_trace_polynomial(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Scalar:
      return TracePolynomial(a.scalar);
    case Ast::Kind::Var:
      return TracePolynomial::variable(a.j, a.starred);
    case Ast::Kind::Tr:
      return tp_trace(to_trace_polynomial(*a.kids[0]));
    case Ast::Kind::Add: {
      TracePolynomial s;
      for (const auto& kid : a.kids) s += to_trace_polynomial(*kid);
      return s;
    }
    case Ast::Kind::Mul: {
      TracePolynomial p(1);
      for (const auto& kid : a.kids) p *= to_trace_polynomial(*kid);
      return p;
    }
    case Ast::Kind::Neg:
      return -to_trace_polynomial(*a.kids[0]);
    case Ast::Kind::Pow:
      return to_trace_polynomial(*a.kids[0]).pow(a.exp);
  }
  throw std::logic_error("to_trace_polynomial: bad node kind");
}

TracePolynomial parse_trace_polynomial(const std::string& text) {
  return to_trace_polynomial(parse(text));
}

std::string print(const Ast& a) {
  std::string out;
  print_rec(a, 0, out);
  return out;
}

}  // namespace tracealg
