#include "tracealg/trace_ring.hpp"

#include <algorithm>

namespace tracealg {

Word Word::rotated(std::size_t k) const {
  if (l_.empty()) return *this;
  k %= l_.size();
  std::vector<Letter> r(l_.begin() + static_cast<long>(k), l_.end());
  r.insert(r.end(), l_.begin(), l_.begin() + static_cast<long>(k));
  return Word(std::move(r));
}

int Word::compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.l_[i] == b.l_[i]) continue;
    return a.l_[i] < b.l_[i] ? -1 : 1;
  }
  return 0;
}

std::uint32_t Word::max_index() const {
  std::uint32_t m = 0;
  for (const auto& l : l_) m = std::max(m, l.j);
  return m;
}

std::string Word::str() const {
  if (l_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < l_.size(); ++i) {
    if (i) s += "*";
    s += l_[i].str();
  }
  return s;
}

Word word_involute(const Word& w) {
  std::vector<Letter> r(w.letters().rbegin(), w.letters().rend());
  for (auto& l : r) l.starred = !l.starred;
  return Word(std::move(r));
}

TraceSymbol trace_canon(const Word& w) {
  TraceSymbol s;
  s.rep_ = w;
  const Word ws = word_involute(w);
  for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
    for (const Word* base : {&w, &ws}) {
      Word cand = base->rotated(k);
      if (Word::compare(cand, s.rep_) < 0) s.rep_ = std::move(cand);
    }
  }
  return s;
}

TraceMonomial::TraceMonomial(std::vector<TraceSymbol> p, Word w)
    : pure(std::move(p)), word(std::move(w)) {
  std::sort(pure.begin(), pure.end());
}

TraceMonomial TraceMonomial::operator*(const TraceMonomial& o) const {
  std::vector<TraceSymbol> p = pure;
  p.insert(p.end(), o.pure.begin(), o.pure.end());
  return TraceMonomial(std::move(p), word * o.word);
}

bool operator<(const TraceMonomial& a, const TraceMonomial& b) {
  if (int c = Word::compare(a.word, b.word)) return c < 0;
  return std::lexicographical_compare(a.pure.begin(), a.pure.end(),
                                      b.pure.begin(), b.pure.end());
}

std::string TraceMonomial::str() const {
  std::string s;
  for (const auto& t : pure) {
    if (!s.empty()) s += "*";
    s += t.str();
  }
  if (!word.empty()) {
    if (!s.empty()) s += "*";
    s += word.str();
  }
  return s.empty() ? "1" : s;
}

TracePolynomial::TracePolynomial(const Rational& c) {
  if (!c.is_zero()) t_.emplace(TraceMonomial(), c);
}

TracePolynomial TracePolynomial::variable(std::uint32_t j, bool starred) {
  return from_word(Word::letter(j, starred));
}

TracePolynomial TracePolynomial::from_word(const Word& w) {
  TracePolynomial f;
  f.t_.emplace(TraceMonomial({}, w), Rational(1));
  return f;
}

TracePolynomial TracePolynomial::term(const Rational& c, const TraceMonomial& m) {
  TracePolynomial f;
  if (!c.is_zero()) f.t_.emplace(m, c);
  return f;
}

std::uint32_t TracePolynomial::max_index() const {
  std::uint32_t m = 0;
  for (const auto& [mono, c] : t_) {
    m = std::max(m, mono.word.max_index());
    for (const auto& s : mono.pure) m = std::max(m, s.rep().max_index());
  }
  return m;
}

void TracePolynomial::add_term(const TraceMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TracePolynomial TracePolynomial::operator-() const {
  TracePolynomial f = *this;
  for (auto& [m, c] : f.t_) c = -c;
  return f;
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& o) const {
  TracePolynomial f = *this;
  for (const auto& [m, c] : o.t_) f.add_term(m, c);
  return f;
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& o) const {
  TracePolynomial f = *this;
  for (const auto& [m, c] : o.t_) f.add_term(m, -c);
  return f;
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& o) const {
  TracePolynomial f;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) f.add_term(ma * mb, ca * cb);
  return f;
}

TracePolynomial TracePolynomial::pow(std::uint32_t e) const {
  TracePolynomial r(1);
  TracePolynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

TracePolynomial TracePolynomial::scaled(const Rational& c) const {
  TracePolynomial f;
  if (c.is_zero()) return f;
  for (const auto& [m, k] : t_) f.t_.emplace(m, k * c);
  return f;
}

std::string TracePolynomial::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (a.is_one() && !(m.pure.empty() && m.word.empty())) {
      s += m.str();
    } else if (m.pure.empty() && m.word.empty()) {
      s += a.str();
    } else {
      s += a.str() + "*" + m.str();
    }
  }
  return s;
}

TracePolynomial tp_involute(const TracePolynomial& f) {
  TracePolynomial g;
  for (const auto& [m, c] : f.terms())
    g.add_term(TraceMonomial(m.pure, word_involute(m.word)), c);
  return g;
}

TracePolynomial tp_trace(const TracePolynomial& f) {
  TracePolynomial g;
  for (const auto& [m, c] : f.terms()) {
    std::vector<TraceSymbol> p = m.pure;
    p.push_back(trace_canon(m.word));
    g.add_term(TraceMonomial(std::move(p), Word()), c);
  }
  return g;
}

TracePolynomial tp_substitute(const TracePolynomial& f,
                              const std::map<std::uint32_t, TracePolynomial>& images) {
  auto image_of = [&](const Letter& l) -> TracePolynomial {
    auto it = images.find(l.j);
    if (it == images.end()) throw MissingImage("x" + std::to_string(l.j));
    return l.starred ? tp_involute(it->second) : it->second;
  };
  auto subst_word = [&](const Word& w) -> TracePolynomial {
    TracePolynomial p(1);
    for (const auto& l : w.letters()) p = p * image_of(l);
    return p;
  };
  TracePolynomial g;
  for (const auto& [m, c] : f.terms()) {
    TracePolynomial t(c);
    for (const auto& s : m.pure) t = t * tp_trace(subst_word(s.rep()));
    t = t * subst_word(m.word);
    g += t;
  }
  return g;
}

}  // namespace tracealg
