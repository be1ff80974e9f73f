#include "tracealg/generic_eval.hpp"

#include <cstdlib>
#include <random>

namespace tracealg {

namespace {

// Generic matrices and their transposes, built on demand.
struct SymbolicImages {
  const GenericContext& ctx;
  std::map<std::pair<std::uint32_t, bool>, PolyMatrix> cache;

  const PolyMatrix& of(const Letter& l) {
    auto key = std::make_pair(l.j, l.starred);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PolyMatrix m = generic_matrix(ctx, l.j);
    if (l.starred) m = m.transpose();
    return cache.emplace(key, std::move(m)).first->second;
  }
};

template <typename T, typename Images>
ExactMatrix<T> eval_word(const Word& w, std::size_t n, Images&& img) {
  ExactMatrix<T> m = ExactMatrix<T>::identity(n);
  for (const auto& l : w.letters()) m = m * img(l);
  return m;
}

std::size_t max_entry_terms(const PolyMatrix& m) {
  std::size_t mx = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mx = std::max(mx, m(i, j).term_count());
  return mx;
}

bool try_eval_symbolic(const TracePolynomial& f, const GenericContext& ctx,
                       std::size_t budget, PolyMatrix& out) {
  if (f.max_index() > ctx.g) throw IndexOutOfRange("trace polynomial uses x_j with j > g");
  SymbolicImages imgs{ctx, {}};
  auto img = [&](const Letter& l) -> const PolyMatrix& { return imgs.of(l); };
  std::map<TraceSymbol, MultiPoly> traces;
  out = PolyMatrix(ctx.n, ctx.n);
  for (const auto& [mono, c] : f.terms()) {
    MultiPoly scalar(c);
    for (const auto& s : mono.pure) {
      auto it = traces.find(s);
      if (it == traces.end()) {
        MultiPoly t = s.rep().empty()
                          ? MultiPoly(static_cast<long>(ctx.n))
                          : eval_word<MultiPoly>(s.rep(), ctx.n, img).trace();
        it = traces.emplace(s, std::move(t)).first;
      }
      scalar *= it->second;
      if (scalar.term_count() > budget) return false;
    }
    PolyMatrix wm = eval_word<MultiPoly>(mono.word, ctx.n, img);
    if (scalar.term_count() * std::max<std::size_t>(max_entry_terms(wm), 1) > 4 * budget)
      return false;
    out += wm.scaled(scalar);
    if (max_entry_terms(out) > budget) return false;
  }
  return true;
}

}  // namespace

PolyMatrix generic_matrix(const GenericContext& ctx, std::uint32_t j) {
  if (j < 1 || j > ctx.g) throw IndexOutOfRange("generic matrix index " + std::to_string(j));
  PolyMatrix m(ctx.n, ctx.n);
  for (std::size_t i = 0; i < ctx.n; ++i)
    for (std::size_t k = 0; k < ctx.n; ++k)
      m(i, k) = MultiPoly::var(VarId::xi(static_cast<int>(j), static_cast<int>(i + 1),
                                         static_cast<int>(k + 1)));
  return m;
}

PolyMatrix eval_symbolic(const TracePolynomial& f, const GenericContext& ctx) {
  PolyMatrix out;
  try_eval_symbolic(f, ctx, static_cast<std::size_t>(-1), out);
  return out;
}

NumMatrix eval_numeric(const TracePolynomial& f, const std::vector<NumMatrix>& X) {
  if (X.empty()) throw SizeMismatch("empty matrix tuple");
  const std::size_t n = X[0].rows();
  for (const auto& m : X)
    if (m.rows() != n || m.cols() != n) throw SizeMismatch("matrix tuple sizes differ");
  if (f.max_index() > X.size())
    throw SizeMismatch("trace polynomial uses x_j beyond the tuple");
  std::vector<NumMatrix> Xt;
  Xt.reserve(X.size());
  for (const auto& m : X) Xt.push_back(m.transpose());
  auto img = [&](const Letter& l) -> const NumMatrix& {
    return l.starred ? Xt[l.j - 1] : X[l.j - 1];
  };
  NumMatrix out(n, n);
  for (const auto& [mono, c] : f.terms()) {
    Rational scalar = c;
    for (const auto& s : mono.pure)
      scalar *= s.rep().empty() ? Rational(static_cast<long>(n))
                                : eval_word<Rational>(s.rep(), n, img).trace();
    out += eval_word<Rational>(mono.word, n, img).scaled(scalar);
  }
  return out;
}

std::size_t default_term_budget() {
  if (const char* s = std::getenv("TRACEALG_TERM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

IdentityCheck check_trace_identity(const TracePolynomial& f, std::size_t n,
                                   std::size_t term_budget) {
  const std::uint32_t g = std::max<std::uint32_t>(f.max_index(), 1);
  GenericContext ctx(n, g);
  PolyMatrix out;
  if (try_eval_symbolic(f, ctx, term_budget, out)) return {out.is_zero(), false};

  // Schwartz-Zippel fallback: each random point over [0, 2^31) misses a
  // nonzero polynomial of degree D with probability < D / 2^31.
  std::size_t deg = 1;
  for (const auto& [mono, c] : f.terms()) {
    std::size_t d = mono.word.size();
    for (const auto& s : mono.pure) d += std::max<std::size_t>(s.rep().size(), 1);
    deg = std::max(deg, d);
  }
  int deg_bits = 0;
  while ((deg >> deg_bits) != 0) ++deg_bits;
  const int bits_per_point = std::max(1, 31 - deg_bits);
  std::mt19937_64 rng(0x74726163656c6721ull);
  std::uniform_int_distribution<long> dist(0, (1L << 31) - 1);
  for (int have = 0; have < 64; have += bits_per_point) {
    std::vector<NumMatrix> X;
    for (std::uint32_t j = 0; j < g; ++j) {
      NumMatrix m(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(a, b) = Rational(dist(rng));
      X.push_back(std::move(m));
    }
    if (!eval_numeric(f, X).is_zero()) return {false, false};
  }
  return {true, true};
}

bool is_trace_identity(const TracePolynomial& f, std::size_t n) {
  return check_trace_identity(f, n).identity;
}

bool is_psd(const NumMatrix& m) {
  if (!m.is_symmetric()) throw NotSymmetric();
  for (const auto& s : char_coeffs(m))
    if (s.sign() < 0) return false;
  return true;
}

bool is_pd(const NumMatrix& m) {
  if (!m.is_symmetric()) throw NotSymmetric();
  for (const auto& s : char_coeffs(m))
    if (s.sign() <= 0) return false;
  return true;
}

PolyMatrix u_matrix(std::size_t n) {
  PolyMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      u(i, k) = MultiPoly::var(VarId::u(static_cast<int>(i + 1), static_cast<int>(k + 1)));
  return u;
}

MultiPoly apply_group_element(const MultiPoly& f, const GenericContext& ctx) {
  std::unordered_map<std::uint32_t, MultiPoly> images;
  for (VarId v : f.variables()) {
    if (v.family != VarFamily::Xi) continue;
    MultiPoly img;
    for (std::size_t a = 1; a <= ctx.n; ++a)
      for (std::size_t b = 1; b <= ctx.n; ++b)
        img += MultiPoly::var(VarId::u(v.i, static_cast<int>(a))) *
               MultiPoly::var(VarId::u(v.k, static_cast<int>(b))) *
               MultiPoly::var(VarId::xi(v.j, static_cast<int>(a), static_cast<int>(b)));
    images.emplace(v.code(), std::move(img));
  }
  return f.substitute(images);
}

PolyMatrix apply_group_element(const PolyMatrix& f, const GenericContext& ctx) {
  PolyMatrix sub = f.map([&](const MultiPoly& p) { return apply_group_element(p, ctx); });
  PolyMatrix u = u_matrix(ctx.n);
  return u.transpose() * sub * u;
}

std::map<Monomial, MultiPoly, MonomialGradedLexGreater> split_by_family(const MultiPoly& f,
                                                                        VarFamily fam) {
  std::map<Monomial, MultiPoly, MonomialGradedLexGreater> parts;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Factor> in_fam, rest;
    for (const auto& fac : t.mono.factors()) {
      if (VarId::from_code(fac.first).family == fam)
        in_fam.push_back(fac);
      else
        rest.push_back(fac);
    }
    parts[Monomial(std::move(in_fam))] += MultiPoly::term(t.coef, Monomial(std::move(rest)));
  }
  return parts;
}

}  // namespace tracealg
