#include "tracealg/multipoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace tracealg {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> f) : f_(std::move(f)) {
  std::sort(f_.begin(), f_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  for (const auto& x : f_) {
    if (!merged.empty() && merged.back().first == x.first)
      merged.back().second += x.second;
    else
      merged.push_back(x);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Factor& a) { return a.second == 0; }),
               merged.end());
  f_ = std::move(merged);
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.push_back({v.code(), e});
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& x : f_) d += x.second;
  return d;
}

std::uint32_t Monomial::exponent_of(VarId v) const {
  const std::uint32_t c = v.code();
  for (const auto& x : f_)
    if (x.first == c) return x.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first < o.f_[j].first)
      r.f_.push_back(f_[i++]);
    else if (f_[i].first > o.f_[j].first)
      r.f_.push_back(o.f_[j++]);
    else {
      r.f_.push_back({f_[i].first, f_[i].second + o.f_[j].second});
      ++i, ++j;
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  return r;
}

bool Monomial::divide(const Monomial& o, Monomial& out) const {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (j < o.f_.size()) {
    if (i >= f_.size()) return false;
    if (f_[i].first < o.f_[j].first) {
      r.f_.push_back(f_[i++]);
    } else if (f_[i].first > o.f_[j].first) {
      return false;
    } else {
      if (f_[i].second < o.f_[j].second) return false;
      if (f_[i].second > o.f_[j].second)
        r.f_.push_back({f_[i].first, f_[i].second - o.f_[j].second});
      ++i, ++j;
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  out = std::move(r);
  return true;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Lex tie-break on the fixed variable order: at the first variable where the
  // exponents differ, the monomial with the larger exponent is greater.
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first < b.f_[j].first) return 1;   // a has the earlier variable
    if (a.f_[i].first > b.f_[j].first) return -1;
    if (a.f_[i].second != b.f_[j].second)
      return a.f_[i].second < b.f_[j].second ? -1 : 1;
    ++i, ++j;
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& x : f_) {
    h ^= x.first;
    h *= 0x100000001b3ull;
    h ^= x.second;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& x : f_) {
    if (!s.empty()) s += "*";
    s += VarId::from_code(x.first).str();
    if (x.second > 1) s += "^" + std::to_string(x.second);
  }
  return s;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) t_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::var(VarId v, std::uint32_t e) {
  MultiPoly p;
  p.t_.push_back({Monomial::var(v, e), Rational(1)});
  if (e == 0) p.t_[0].mono = Monomial{};
  return p;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  if (!c.is_zero()) p.t_.push_back({m, c});
  return p;
}

Rational MultiPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (t_.size() == 1 && t_[0].mono.is_one()) return t_[0].coef;
  throw std::logic_error("MultiPoly::constant_value: not a constant");
}

const Rational& MultiPoly::leading_coef() const {
  if (t_.empty()) throw std::logic_error("leading_coef of zero polynomial");
  return t_[0].coef;
}

const Monomial& MultiPoly::leading_mono() const {
  if (t_.empty()) throw std::logic_error("leading_mono of zero polynomial");
  return t_[0].mono;
}

void MultiPoly::normalize_sorted() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
    return Monomial::compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(t_.size());
  for (auto& x : t_) {
    if (!merged.empty() && merged.back().mono == x.mono)
      merged.back().coef += x.coef;
    else
      merged.push_back(std::move(x));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& a) { return a.coef.is_zero(); }),
               merged.end());
  t_ = std::move(merged);
}

MultiPoly MultiPoly::from_term_map(
    std::unordered_map<Monomial, Rational, MonomialHash>&& acc) {
  MultiPoly r;
  r.t_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back({m, std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) {
    return Monomial::compare(a.mono, b.mono) > 0;
  });
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& x : r.t_) x.coef = -x.coef;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    const int c = Monomial::compare(t_[i].mono, o.t_[j].mono);
    if (c > 0)
      r.t_.push_back(t_[i++]);
    else if (c < 0)
      r.t_.push_back(o.t_[j++]);
    else {
      Rational s = t_[i].coef + o.t_[j].coef;
      if (!s.is_zero()) r.t_.push_back({t_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (t_.empty() || o.t_.empty()) return MultiPoly{};
  if (t_.size() == 1 && t_[0].mono.is_one()) return o.scaled(t_[0].coef);
  if (o.t_.size() == 1 && o.t_[0].mono.is_one()) return scaled(o.t_[0].coef);
  const MultiPoly& a = t_.size() >= o.t_.size() ? *this : o;
  const MultiPoly& b = t_.size() >= o.t_.size() ? o : *this;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.t_.size() * 2);
  for (const auto& y : b.t_) {
    for (const auto& x : a.t_) {
      Monomial m = x.mono * y.mono;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), x.coef * y.coef);
      else
        it->second += x.coef * y.coef;
    }
  }
  return from_term_map(std::move(acc));
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly r(Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly{};
  MultiPoly r = *this;
  for (auto& x : r.t_) x.coef *= c;
  return r;
}

MultiPoly MultiPoly::derivative(VarId v) const {
  const std::uint32_t code = v.code();
  MultiPoly r;
  for (const auto& t : t_) {
    const std::uint32_t e = t.mono.exponent_of(v);
    if (e == 0) continue;
    Monomial m;
    t.mono.divide(Monomial::var(v, 1), m);
    (void)code;
    r.t_.push_back({m, t.coef * Rational(static_cast<long>(e))});
  }
  r.normalize_sorted();
  return r;
}

Rational MultiPoly::eval(
    const std::unordered_map<std::uint32_t, Rational>& assignment) const {
  Rational sum(0);
  for (const auto& t : t_) {
    Rational v = t.coef;
    for (const auto& f : t.mono.factors()) {
      auto it = assignment.find(f.first);
      if (it == assignment.end())
        throw MissingVariable(VarId::from_code(f.first).str());
      Rational p(1);
      Rational base = it->second;
      std::uint32_t e = f.second;
      while (e) {
        if (e & 1) p *= base;
        e >>= 1;
        if (e) base *= base;
      }
      v *= p;
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(
    const std::unordered_map<std::uint32_t, MultiPoly>& images) const {
  MultiPoly result;
  std::unordered_map<std::uint64_t, MultiPoly> power_cache;
  for (const auto& t : t_) {
    MultiPoly prod(t.coef);
    Monomial kept;  // factors of variables without an image
    std::vector<Monomial::Factor> kept_f;
    for (const auto& f : t.mono.factors()) {
      auto it = images.find(f.first);
      if (it == images.end()) {
        kept_f.push_back(f);
        continue;
      }
      const std::uint64_t key =
          (static_cast<std::uint64_t>(f.first) << 32) | f.second;
      auto pc = power_cache.find(key);
      if (pc == power_cache.end())
        pc = power_cache.emplace(key, it->second.pow(f.second)).first;
      prod = prod * pc->second;
    }
    if (!kept_f.empty()) prod = prod * MultiPoly::term(Rational(1), Monomial(std::move(kept_f)));
    result += prod;
  }
  return result;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<std::uint32_t> codes;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) codes.push_back(f.first);
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<VarId> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(VarId::from_code(c));
  return out;
}

bool MultiPoly::uses_family(VarFamily fam) const {
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors())
      if (VarId::from_code(f.first).family == fam) return true;
  return false;
}

Rational MultiPoly::content() const {
  if (t_.empty()) return Rational(0);
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.den().get_mpz_t());
  }
  Rational c(g, l);
  return t_[0].coef.sign() < 0 ? -c : c;
}

Monomial MultiPoly::monomial_content() const {
  if (t_.empty()) return Monomial{};
  std::vector<Monomial::Factor> common(t_[0].mono.factors());
  for (std::size_t i = 1; i < t_.size() && !common.empty(); ++i) {
    const auto& f = t_[i].mono.factors();
    std::vector<Monomial::Factor> next;
    std::size_t a = 0, b = 0;
    while (a < common.size() && b < f.size()) {
      if (common[a].first < f[b].first)
        ++a;
      else if (common[a].first > f[b].first)
        ++b;
      else {
        next.push_back({common[a].first, std::min(common[a].second, f[b].second)});
        ++a, ++b;
      }
    }
    common = std::move(next);
  }
  return Monomial(std::move(common));
}

bool MultiPoly::try_divide(const MultiPoly& d, MultiPoly& q,
                           std::size_t max_quotient_terms) const {
  if (d.is_zero()) return false;
  if (is_zero()) {
    q = MultiPoly{};
    return true;
  }
  if (d.is_constant()) {
    q = scaled(Rational(1) / d.constant_value());
    return true;
  }
  if (degree() < d.degree()) return false;
  std::map<Monomial, Rational, MonomialGradedLexGreater> rem;
  for (const auto& t : t_) rem.emplace(t.mono, t.coef);
  std::vector<Term> quo;
  const Monomial& dl = d.leading_mono();
  const Rational& dc = d.leading_coef();
  while (!rem.empty()) {
    auto lead = rem.begin();
    Monomial qm;
    if (!lead->first.divide(dl, qm)) return false;
    Rational qc = lead->second / dc;
    quo.push_back({qm, qc});
    if (quo.size() > max_quotient_terms) return false;
    for (const auto& t : d.t_) {
      Monomial m = t.mono * qm;
      Rational delta = t.coef * qc;
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(std::move(m), -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  MultiPoly out;
  out.t_ = std::move(quo);
  out.normalize_sorted();
  q = std::move(out);
  return true;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& t : t_) {
    Rational c = t.coef;
    if (s.empty()) {
      if (c.sign() < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      c = c.abs();
    }
    if (t.mono.is_one())
      s += c.str();
    else if (c.is_one())
      s += t.mono.str();
    else
      s += c.str() + "*" + t.mono.str();
  }
  return s;
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  auto va = a.variables();
  auto vb = b.variables();
  if (va.size() != 1 || vb.size() != 1 || !(va[0] == vb[0])) return MultiPoly(1);
  // Euclidean algorithm over Q[x] via dense coefficient vectors.
  const VarId x = va[0];
  auto to_dense = [&](const MultiPoly& p) {
    std::vector<Rational> c(p.degree() + 1, Rational(0));
    for (const auto& t : p.terms()) c[t.mono.exponent_of(x)] = t.coef;
    return c;
  };
  auto deg = [](const std::vector<Rational>& c) -> long {
    for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i)
      if (!c[i].is_zero()) return i;
    return -1;
  };
  std::vector<Rational> u = to_dense(a), v = to_dense(b);
  while (deg(v) >= 0) {
    long du = deg(u), dv = deg(v);
    if (du < dv) {
      std::swap(u, v);
      continue;
    }
    Rational f = u[du] / v[dv];
    for (long i = 0; i <= dv; ++i) u[du - dv + i] -= f * v[i];
    if (deg(u) < deg(v)) std::swap(u, v);
  }
  long du = deg(u);
  if (du <= 0) return MultiPoly(1);
  MultiPoly g;
  for (long i = 0; i <= du; ++i)
    if (!u[i].is_zero())
      g += MultiPoly::term(u[i] / u[du], Monomial::var(x, static_cast<std::uint32_t>(i)));
  return g;
}

}  // namespace tracealg
