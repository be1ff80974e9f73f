#include "tracealg/io.hpp"

#include <fstream>

#include "tracealg/parse.hpp"

namespace tracealg {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::runtime_error("io: " + what);
}

Json var_to_json(VarId v) {
  switch (v.family) {
    case VarFamily::Xi: return Json::array({"xi", v.j, v.i, v.k});
    case VarFamily::U: return Json::array({"u", v.i, v.k});
    case VarFamily::Aux: return Json::array({"aux", v.j, v.i, v.k});
  }
  bad("unknown variable family");
}

VarId var_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) bad("variable tag must be [\"name\", ...]");
  const std::string fam = j[0].get<std::string>();
  auto idx = [&](std::size_t i) {
    if (i >= j.size() || !j[i].is_number_integer()) bad("variable tag index missing");
    const int v = j[i].get<int>();
    if (v < 0 || v >= 1024) bad("variable tag index out of range");
    return v;
  };
  if (fam == "xi" && j.size() == 4) return VarId::xi(idx(1), idx(2), idx(3));
  if (fam == "u" && j.size() == 3) return VarId::u(idx(1), idx(2));
  if (fam == "aux" && j.size() == 4) return VarId::aux(idx(1), idx(2), idx(3));
  bad("unknown variable tag '" + fam + "'");
}

TracePolynomial expr_from_json(const Json& j) {
  if (!j.is_string()) bad("expected an expression string");
  return parse_trace_polynomial(j.get<std::string>());
}

OmegaCertificate omega_from_json(const Json& j) {
  OmegaCertificate w;
  if (j.is_null()) return w;
  if (!j.is_array()) bad("omega must be a list of products");
  for (const Json& pj : j) {
    OmegaProduct p;
    if (pj.contains("scale")) p.scale = rational_from_json(pj.at("scale"));
    if (pj.contains("factors"))
      for (const Json& f : pj.at("factors")) p.factors.push_back(expr_from_json(f));
    w.products.push_back(std::move(p));
  }
  return w;
}

Json omega_to_json(const OmegaCertificate& w) {
  Json out = Json::array();
  for (const OmegaProduct& p : w.products) {
    Json pj;
    pj["scale"] = rational_to_json(p.scale);
    Json fs = Json::array();
    for (const TracePolynomial& f : p.factors) fs.push_back(f.str());
    pj["factors"] = std::move(fs);
    out.push_back(std::move(pj));
  }
  return out;
}

QMTerm term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("certificate term needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  QMTerm t;
  if (kind == "omega") {
    t.kind = QMTerm::Kind::Omega;
  } else if (kind == "conjugate") {
    t.kind = QMTerm::Kind::Conjugate;
    t.s = j.at("s").get<std::size_t>();
  } else if (kind == "scaledTrace") {
    t.kind = QMTerm::Kind::ScaledTrace;
    if (!j.contains("traces") || !j.at("traces").is_array())
      bad("scaledTrace term needs a \"traces\" list");
    for (const Json& tr : j.at("traces")) {
      if (!tr.is_array() || tr.size() != 2) bad("trace factor must be [\"expr\", s]");
      t.traces.emplace_back(expr_from_json(tr[0]), tr[1].get<std::size_t>());
    }
  } else {
    bad("unknown term kind '" + kind + "'");
  }
  if (j.contains("omega")) t.omega = omega_from_json(j.at("omega"));
  if (j.contains("h")) t.h = expr_from_json(j.at("h"));
  return t;
}

Json term_to_json(const QMTerm& t) {
  Json j;
  switch (t.kind) {
    case QMTerm::Kind::Omega:
      j["kind"] = "omega";
      break;
    case QMTerm::Kind::Conjugate:
      j["kind"] = "conjugate";
      j["s"] = t.s;
      break;
    case QMTerm::Kind::ScaledTrace: {
      j["kind"] = "scaledTrace";
      Json trs = Json::array();
      for (const auto& [h, s] : t.traces) trs.push_back(Json::array({h.str(), s}));
      j["traces"] = std::move(trs);
      break;
    }
  }
  if (!t.omega.products.empty()) j["omega"] = omega_to_json(t.omega);
  j["h"] = t.h.str();
  return j;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("rational must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const MultiPoly::Term& t : p.terms()) {
    Json tj;
    tj["coef"] = rational_to_json(t.coef);
    Json exps = Json::array();
    for (const auto& [code, e] : t.mono.factors())
      exps.push_back(Json::array({var_to_json(VarId::from_code(code)), e}));
    tj["exps"] = std::move(exps);
    out.push_back(std::move(tj));
  }
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be a term list");
  MultiPoly p;
  for (const Json& tj : j) {
    Rational c = rational_from_json(tj.at("coef"));
    std::vector<Monomial::Factor> fs;
    for (const Json& ej : tj.at("exps")) {
      if (!ej.is_array() || ej.size() != 2) bad("exponent entry must be [var, e]");
      fs.emplace_back(var_from_json(ej[0]).code(), ej[1].get<std::uint32_t>());
    }
    p += MultiPoly::term(c, Monomial(std::move(fs)));
  }
  return p;
}

Json matrix_to_json(const NumMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

NumMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) bad("matrix rows must be nonempty arrays");
  NumMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json matrix_tuple_to_json(const MatrixTuple& t) {
  Json j;
  j["n"] = t.n;
  j["g"] = t.g;
  Json ms = Json::array();
  for (const NumMatrix& m : t.matrices) ms.push_back(matrix_to_json(m));
  j["matrices"] = std::move(ms);
  return j;
}

MatrixTuple matrix_tuple_from_json(const Json& j) {
  MatrixTuple t;
  if (!j.is_object()) bad("matrix tuple must be an object");
  t.n = j.at("n").get<std::size_t>();
  t.g = j.at("g").get<std::uint32_t>();
  if (t.n < 1) bad("matrix tuple needs n >= 1");
  const Json& ms = j.at("matrices");
  if (!ms.is_array() || ms.size() != t.g) bad("matrix tuple needs exactly g matrices");
  for (const Json& mj : ms) {
    NumMatrix m = matrix_from_json(mj);
    if (m.rows() != t.n || m.cols() != t.n) bad("matrix tuple entries must be n x n");
    t.matrices.push_back(std::move(m));
  }
  return t;
}

Json constraints_to_json(const ConstraintSet& s) {
  Json j;
  j["n"] = s.n;
  Json gens = Json::array();
  for (const TracePolynomial& g : s.generators) gens.push_back(g.str());
  j["generators"] = std::move(gens);
  return j;
}

ConstraintSet constraints_from_json(const Json& j) {
  if (!j.is_object()) bad("constraint set must be an object");
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<TracePolynomial> gens;
  if (j.contains("generators"))
    for (const Json& g : j.at("generators")) gens.push_back(expr_from_json(g));
  return ConstraintSet(std::move(gens), n);
}

Json qm_certificate_to_json(const CyclicQMCertificate& c) {
  Json out = Json::array();
  for (const QMTerm& t : c.terms) out.push_back(term_to_json(t));
  return out;
}

CyclicQMCertificate qm_certificate_from_json(const Json& j) {
  if (!j.is_array()) bad("certificate part must be a term list");
  CyclicQMCertificate c;
  for (const Json& tj : j) c.terms.push_back(term_from_json(tj));
  return c;
}

Json ks_certificate_to_json(const KSCertificate& c) {
  Json j;
  switch (c.mode) {
    case KSCertificate::Mode::Psd: j["mode"] = "psd"; break;
    case KSCertificate::Mode::Pd: j["mode"] = "pd"; break;
    case KSCertificate::Mode::Zero: j["mode"] = "zero"; break;
  }
  j["k"] = c.k;
  j["t1"] = qm_certificate_to_json(c.t1);
  j["t2"] = qm_certificate_to_json(c.t2);
  return j;
}

KSCertificate ks_certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("certificate must be an object");
  KSCertificate c;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "psd") c.mode = KSCertificate::Mode::Psd;
  else if (mode == "pd") c.mode = KSCertificate::Mode::Pd;
  else if (mode == "zero") c.mode = KSCertificate::Mode::Zero;
  else bad("unknown mode '" + mode + "'");
  if (j.contains("k")) c.k = j.at("k").get<std::uint32_t>();
  if (j.contains("t1")) c.t1 = qm_certificate_from_json(j.at("t1"));
  if (j.contains("t2")) c.t2 = qm_certificate_from_json(j.at("t2"));
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    bad("'" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace tracealg
