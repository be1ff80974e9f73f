#include "tracealg/ratfunc.hpp"

#include <algorithm>

#include "tracealg/errors.hpp"

namespace tracealg {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)) {
  if (den.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  push_den_factor(std::move(den));
  reduce();
}

void RatFunc::push_den_factor(MultiPoly f) {
  if (f.is_constant()) {
    num_ = num_.scaled(Rational(1) / f.constant_value());
    return;
  }
  const Rational lc = f.leading_coef();
  if (!lc.is_one()) {
    f = f.scaled(Rational(1) / lc);
    num_ = num_.scaled(Rational(1) / lc);
  }
  den_.push_back(std::move(f));
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  bool progress = true;
  while (progress && !den_.empty()) {
    progress = false;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      MultiPoly q;
      const std::size_t cap = num_.term_count() * 4 + 64;
      if (num_.try_divide(den_[i], q, cap)) {
        num_ = std::move(q);
        den_.erase(den_.begin() + static_cast<long>(i));
        progress = true;
        break;
      }
    }
  }
  if (den_.size() == 1) {
    MultiPoly g = univariate_gcd(num_, den_[0]);
    if (!g.is_constant()) {
      MultiPoly qn, qd;
      if (num_.try_divide(g, qn) && den_[0].try_divide(g, qd)) {
        num_ = std::move(qn);
        den_.clear();
        push_den_factor(std::move(qd));
      }
    }
  }
}

MultiPoly RatFunc::den() const {
  MultiPoly d(1);
  for (const auto& f : den_) d = d * f;
  return d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

void RatFunc::cancel_common(std::vector<MultiPoly>& a, std::vector<MultiPoly>& b) {
  for (std::size_t i = 0; i < a.size();) {
    bool cancelled = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == b[j]) {
        a.erase(a.begin() + static_cast<long>(i));
        b.erase(b.begin() + static_cast<long>(j));
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ++i;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Shared factors stay in the common denominator.
  std::vector<MultiPoly> mine = den_, theirs = o.den_, shared;
  for (std::size_t i = 0; i < mine.size();) {
    bool found = false;
    for (std::size_t j = 0; j < theirs.size(); ++j) {
      if (mine[i] == theirs[j]) {
        shared.push_back(mine[i]);
        mine.erase(mine.begin() + static_cast<long>(i));
        theirs.erase(theirs.begin() + static_cast<long>(j));
        found = true;
        break;
      }
    }
    if (!found) ++i;
  }
  MultiPoly lhs = num_;
  for (const auto& f : theirs) lhs = lhs * f;
  MultiPoly rhs = o.num_;
  for (const auto& f : mine) rhs = rhs * f;
  RatFunc r;
  r.num_ = lhs + rhs;
  r.den_ = shared;
  for (auto& f : mine) r.den_.push_back(std::move(f));
  for (auto& f : theirs) r.den_.push_back(std::move(f));
  r.reduce();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  r.reduce();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("RatFunc::inverse of zero");
  RatFunc r;
  r.num_ = MultiPoly(1);
  for (const auto& f : den_) r.num_ = r.num_ * f;
  r.push_den_factor(num_);
  r.reduce();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(std::uint32_t e) const {
  RatFunc r(Rational(1));
  RatFunc base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

RatFunc RatFunc::derivative(VarId v) const {
  // (n / f1...fk)' = (n' f1...fk - n sum_i fi' prod_{j!=i} fj) / (f1...fk)^2
  MultiPoly D(1);
  for (const auto& f : den_) D = D * f;
  MultiPoly Dp(0);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    MultiPoly p = den_[i].derivative(v);
    for (std::size_t j = 0; j < den_.size(); ++j)
      if (j != i) p = p * den_[j];
    Dp += p;
  }
  RatFunc r;
  r.num_ = num_.derivative(v) * D - num_ * Dp;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), den_.begin(), den_.end());
  r.reduce();
  return r;
}

Rational RatFunc::eval(
    const std::unordered_map<std::uint32_t, Rational>& assignment) const {
  Rational v = num_.eval(assignment);
  for (const auto& f : den_) {
    Rational d = f.eval(assignment);
    if (d.is_zero()) throw DenominatorVanishes(f.str());
    v /= d;
  }
  return v;
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
  std::vector<MultiPoly> df = f.den_, dg = g.den_;
  RatFunc::cancel_common(df, dg);
  MultiPoly lhs = f.num_;
  for (const auto& x : dg) lhs = lhs * x;
  MultiPoly rhs = g.num_;
  for (const auto& x : df) rhs = rhs * x;
  return lhs == rhs;
}

std::string RatFunc::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ") / (";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) s += ")*(";
    s += f.str();
    first = false;
  }
  return s + ")";
}

}  // namespace tracealg
