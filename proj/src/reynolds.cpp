#include "tracealg/reynolds.hpp"

#include <mutex>
#include <unordered_map>

namespace tracealg {

namespace {

// Dual number a + s*b + t*c + st*d with s^2 = t^2 = 0.
struct Dual {
  Rational a, s, t, st;
  Dual operator*(const Dual& o) const {
    return {a * o.a, a * o.s + s * o.a, a * o.t + t * o.a,
            a * o.st + s * o.t + t * o.s + st * o.a};
  }
};

// Entry (r,c) of (1 + s e_{ij})(1 + t e_{kl}), 1-based indices.
Dual pert_entry(int r, int c, int i, int j, int k, int l) {
  Dual d{Rational(r == c ? 1 : 0), Rational(r == i && j == c ? 1 : 0),
         Rational(r == k && l == c ? 1 : 0),
         Rational(r == i && j == k && l == c ? 1 : 0)};
  return d;
}

Rational st_coeff(const Monomial& mu, int i, int j, int k, int l) {
  Dual acc{Rational(1), Rational(0), Rational(0), Rational(0)};
  for (const auto& [code, e] : mu.factors()) {
    VarId v = VarId::from_code(code);
    Dual base = pert_entry(v.i, v.k, i, j, k, l);
    for (std::uint32_t p = 0; p < e; ++p) acc = acc * base;
  }
  return acc.st;
}

std::mutex casimir_mutex;
std::unordered_map<std::string, Rational> casimir_memo;

}  // namespace

Rational casimir_value(const Monomial& mu, std::size_t n) {
  const std::string key = std::to_string(n) + "|" + mu.str();
  {
    std::lock_guard<std::mutex> lock(casimir_mutex);
    auto it = casimir_memo.find(key);
    if (it != casimir_memo.end()) return it->second;
  }
  Rational v;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j)
      v += st_coeff(mu, i, j, i, j) - st_coeff(mu, i, j, j, i);
  std::lock_guard<std::mutex> lock(casimir_mutex);
  casimir_memo.emplace(key, v);
  return v;
}

MultiPoly casimir_tilde(const MultiPoly& f, std::size_t n) {
  GenericContext ctx(n, 1);  // g is irrelevant to the substitution
  MultiPoly fu = apply_group_element(f, ctx);
  MultiPoly out;
  for (const auto& [mu, fi] : split_by_family(fu, VarFamily::U))
    out += fi.scaled(casimir_value(mu, n));
  return out;
}

namespace {

// Incremental echelon basis over sparse monomial coordinates, remembering
// each reduced vector as a combination of the inserted iterates.
struct KrylovBasis {
  struct Row {
    std::map<Monomial, Rational, MonomialGradedLexGreater> vec;
    std::vector<Rational> comb;  // coefficients over iterates 0..k
  };
  std::vector<Row> rows;

  static std::map<Monomial, Rational, MonomialGradedLexGreater> to_map(const MultiPoly& p) {
    std::map<Monomial, Rational, MonomialGradedLexGreater> m;
    for (const auto& t : p.terms()) m.emplace(t.mono, t.coef);
    return m;
  }

  // Inserts iterate #idx. Returns false and fills dependence (over iterates
  // 0..idx, with coefficient 1 at idx) when the vector is dependent.
  bool insert(const MultiPoly& p, std::size_t idx, std::vector<Rational>& dependence) {
    Row r;
    r.vec = to_map(p);
    r.comb.assign(idx + 1, Rational(0));
    r.comb[idx] = Rational(1);
    // Each subtraction removes a row's leading monomial and only introduces
    // smaller ones, so this fixed-point loop terminates.
    bool changed = true;
    while (changed && !r.vec.empty()) {
      changed = false;
      for (const auto& row : rows) {
        if (r.vec.empty()) break;
        auto lead = row.vec.begin();
        auto it = r.vec.find(lead->first);
        if (it == r.vec.end()) continue;
        Rational factor = it->second / lead->second;
        for (const auto& [m, c] : row.vec) {
          auto jt = r.vec.find(m);
          if (jt == r.vec.end()) {
            r.vec.emplace(m, -factor * c);
          } else {
            jt->second -= factor * c;
            if (jt->second.is_zero()) r.vec.erase(jt);
          }
        }
        for (std::size_t i = 0; i < row.comb.size(); ++i) r.comb[i] -= factor * row.comb[i];
        changed = true;
      }
    }
    if (r.vec.empty()) {
      dependence = std::move(r.comb);
      return false;
    }
    rows.push_back(std::move(r));
    return true;
  }
};

}  // namespace

ReynoldsReport reynolds_so_report(const MultiPoly& f, std::size_t n) {
  ReynoldsReport rep;
  rep.input = f;
  if (f.is_zero()) {
    rep.minimal_poly = {Rational(0), Rational(1)};  // p(t) = t
    rep.iterates = 1;
    return rep;
  }

  // Iteration cap: dimension of polynomials of degree <= d in the xi
  // variables of f; the Krylov space cannot exceed it.
  const std::size_t nvars = f.variables().size();
  const std::size_t d = f.degree();
  std::size_t cap = 1;
  for (std::size_t i = 1; i <= d; ++i) cap = cap * (nvars + i) / i;  // C(nvars+d, d)

  KrylovBasis basis;
  std::vector<MultiPoly> iterates{f};
  std::vector<Rational> dep;
  std::size_t k = 0;
  while (true) {
    if (!basis.insert(iterates[k], k, dep)) break;
    if (k + 1 > cap)
      throw std::runtime_error("reynolds_so: Krylov iteration exceeded the ambient dimension");
    iterates.push_back(casimir_tilde(iterates[k], n));
    ++k;
  }

  rep.iterates = dep.size();
  rep.minimal_poly = dep;  // monic by construction
  if (!dep[0].is_zero()) {
    rep.output = MultiPoly(0);  // invertible Casimir action: no invariant part
    return rep;
  }
  // p = t q; R'' = q(0)^{-1} q(ct)(f) = q(0)^{-1} sum_{i>=1} p_i ct^{i-1}(f)
  const Rational q0 = dep[1];
  MultiPoly out;
  for (std::size_t i = 1; i < dep.size(); ++i)
    if (!dep[i].is_zero()) out += iterates[i - 1].scaled(dep[i] / q0);
  rep.output = std::move(out);
  return rep;
}

MultiPoly reynolds_so(const MultiPoly& f, std::size_t n) {
  return reynolds_so_report(f, n).output;
}

namespace {

// Conjugation by the reflection diag(-1,1,...,1): flips the sign of
// xi_{j,i,k} whenever exactly one of i,k equals 1.
MultiPoly reflect(const MultiPoly& f) {
  std::unordered_map<std::uint32_t, MultiPoly> images;
  for (VarId v : f.variables()) {
    if (v.family != VarFamily::Xi) continue;
    if ((v.i == 1) != (v.k == 1)) images.emplace(v.code(), -MultiPoly::var(v));
  }
  return f.substitute(images);
}

}  // namespace

MultiPoly reynolds_on(const MultiPoly& f, std::size_t n) {
  MultiPoly g = reynolds_so(f, n);
  return (g + reflect(g)).scaled(Rational(1, 2));
}

PolyMatrix reynolds_matrix(const PolyMatrix& f, const GenericContext& ctx) {
  if (f.rows() != ctx.n || f.cols() != ctx.n) throw SizeMismatch("reynolds_matrix shape");
  const int aux = static_cast<int>(ctx.g) + 1;
  MultiPoly h;
  for (std::size_t i = 0; i < ctx.n; ++i)
    for (std::size_t k = 0; k < ctx.n; ++k)
      h += f(i, k) * MultiPoly::var(VarId::xi(aux, static_cast<int>(k + 1),
                                              static_cast<int>(i + 1)));
  MultiPoly r = reynolds_on(h, ctx.n);
  PolyMatrix f0(ctx.n, ctx.n);
  for (const auto& t : r.terms()) {
    int hits = 0;
    VarId found = VarId::xi(0, 0, 0);
    std::vector<Monomial::Factor> rest;
    for (const auto& [code, e] : t.mono.factors()) {
      VarId v = VarId::from_code(code);
      if (v.family == VarFamily::Xi && v.j == aux) {
        hits += static_cast<int>(e);
        found = v;
      } else {
        rest.emplace_back(code, e);
      }
    }
    if (hits != 1) throw NotLinearInAuxiliary();
    // term c * xi_{aux,a,b} * rest contributes to f0(b-1, a-1)
    f0(static_cast<std::size_t>(found.k - 1), static_cast<std::size_t>(found.i - 1)) +=
        MultiPoly::term(t.coef, Monomial(std::move(rest)));
  }
  return f0;
}

}  // namespace tracealg
