#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tracealg/identities.hpp"
#include "tracealg/io.hpp"
#include "tracealg/parse.hpp"
#include "tracealg/ps3.hpp"
#include "tracealg/reynolds.hpp"

using namespace tracealg;

namespace {

// 0 = verified/true, 1 = refuted/false, 2 = error.
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string matrix_str(const NumMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j).str() + " ";
    s += "]\n";
  }
  return s;
}

void emit(bool json, const Json& j, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

ConstraintSet load_constraints(const std::string& path, std::size_t n_override) {
  if (path.empty()) return ConstraintSet({}, n_override ? n_override : 1);
  Json j = read_json_file(path);
  if (n_override) j["n"] = n_override;
  return constraints_from_json(j);
}

struct Args {
  bool json = false;
  std::string expr, file, cert_file, constraints_file, out_file, only;
  std::size_t n = 0, trials = 10000;
  std::uint32_t m = 1;
  std::uint64_t seed = 0;
  long radius = 1, denominator = 64;
  std::size_t witness_n = 1, witness_d = 1;
  bool matrix_mode = false, example61 = false, check = false;
  std::vector<std::size_t> witness_nd;
};

int cmd_canon(const Args& a) {
  TracePolynomial f = parse_trace_polynomial(a.expr);
  emit(a.json, Json{{"canonical", f.str()}, {"terms", f.term_count()}}, f.str() + "\n");
  return kTrue;
}

int cmd_eval(const Args& a) {
  TracePolynomial f = parse_trace_polynomial(a.expr);
  MatrixTuple t = matrix_tuple_from_json(read_json_file(a.file));
  if (f.max_index() > t.g) {
    std::cerr << "eval: expression uses x" << f.max_index() << " but the file has g = " << t.g
              << " matrices\n";
    return kError;
  }
  NumMatrix r = eval_numeric(f, t.matrices);
  emit(a.json, Json{{"n", t.n}, {"value", matrix_to_json(r)}}, matrix_str(r));
  return kTrue;
}

int cmd_identity(const Args& a) {
  TracePolynomial f = parse_trace_polynomial(a.expr);
  IdentityCheck c = check_trace_identity(f, a.n);
  emit(a.json, Json{{"identity", c.identity}, {"probabilistic", c.probabilistic}, {"n", a.n}},
       std::string(c.identity ? "identity" : "not an identity") + " at n = " +
           std::to_string(a.n) + (c.probabilistic ? " (probabilistic)" : " (exact)") + "\n");
  return c.identity ? kTrue : kFalse;
}

int cmd_psd(const Args& a) {
  NumMatrix m = matrix_from_json(read_json_file(a.file));
  const bool psd = is_psd(m);
  emit(a.json, Json{{"psd", psd}, {"pd", psd && is_pd(m)}},
       std::string(psd ? "psd" : "not psd") + "\n");
  return psd ? kTrue : kFalse;
}

int cmd_reynolds(const Args& a) {
  TracePolynomial f = parse_trace_polynomial(a.expr);
  GenericContext ctx(a.n, std::max<std::uint32_t>(1, f.max_index()));
  PolyMatrix fm = eval_symbolic(f, ctx);
  if (a.matrix_mode) {
    PolyMatrix r = reynolds_matrix(fm, ctx);
    Json entries = Json::array();
    std::string text;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        entries.push_back(poly_to_json(r(i, j)));
        text += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " +
                r(i, j).str() + "\n";
      }
    emit(a.json, Json{{"n", a.n}, {"matrix", true}, {"entries", entries}}, text);
    return kTrue;
  }
  // scalar mode needs a central (pure trace) input so f(Xi) is scalar
  for (std::size_t i = 0; i < ctx.n; ++i)
    for (std::size_t j = 0; j < ctx.n; ++j)
      if ((i == j ? fm(i, j) - fm(0, 0) : fm(i, j)) != MultiPoly()) {
        std::cerr << "reynolds: expression is not central at n = " << a.n
                  << "; use --matrix for the concomitant lift\n";
        return kError;
      }
  ReynoldsReport rep = reynolds_so_report(fm(0, 0), a.n);
  Json mp = Json::array();
  std::string mps;
  for (const Rational& c : rep.minimal_poly) {
    mp.push_back(rational_to_json(c));
    mps += (mps.empty() ? "" : ", ") + c.str();
  }
  emit(a.json,
       Json{{"n", a.n},
            {"output", poly_to_json(rep.output)},
            {"minimal_poly", mp},
            {"iterates", rep.iterates}},
       "R(f) = " + rep.output.str() + "\nminimal poly coefficients: [" + mps +
           "]\niterates: " + std::to_string(rep.iterates) + "\n");
  return kTrue;
}

int cmd_fm(const Args& a) {
  if (a.check) {
    const bool ok = verify_fm_identity(a.m);
    emit(a.json, Json{{"m", a.m}, {"identity", ok}},
         std::string("f_") + std::to_string(a.m) + (ok ? " vanishes" : " does NOT vanish") +
             " on antisymmetric pairs at n = " + std::to_string(2 * a.m) + "\n");
    return ok ? kTrue : kFalse;
  }
  if (!a.witness_nd.empty()) {
    FmWitness w = fm_symplectic_witness(a.witness_nd[0], a.m, a.witness_nd[1]);
    const bool nonzero = !w.value.is_zero();
    emit(a.json,
         Json{{"m", a.m},
              {"n", a.witness_nd[0]},
              {"d", a.witness_nd[1]},
              {"nonzero", nonzero},
              {"value", matrix_to_json(w.value)}},
         std::string(nonzero ? "nonzero" : "zero") + " value:\n" + matrix_str(w.value));
    return nonzero ? kTrue : kFalse;
  }
  FmPolynomial f = newton_fm(a.m);
  emit(a.json, Json{{"m", a.m}, {"fm", f.value.str()}}, f.value.str() + "\n");
  return kTrue;
}

int cmd_capelli(const Args& a) {
  TracePolynomial c = capelli(a.m);
  emit(a.json, Json{{"m", a.m}, {"capelli", c.str()}, {"terms", c.term_count()}}, c.str() + "\n");
  return kTrue;
}

int cmd_central_reduce(const Args& a) {
  TracePolynomial s = parse_trace_polynomial(a.expr);
  std::vector<TracePolynomial> cs =
      a.example61 ? central_reduce_example61(s, a.n) : central_reduce_sigma(s, a.n);
  Json out = Json::array();
  std::string text;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out.push_back(cs[i].str());
    text += (a.example61 ? "c" : "sigma") + std::to_string(i + 1) + " = " + cs[i].str() + "\n";
  }
  emit(a.json, Json{{"n", a.n}, {"generators", out}}, text);
  return kTrue;
}

int cmd_verify_cert(const Args& a) {
  TracePolynomial f = parse_trace_polynomial(a.expr);
  KSCertificate cert = ks_certificate_from_json(read_json_file(a.cert_file));
  ConstraintSet S = load_constraints(a.constraints_file, a.n);
  const bool ok = verify_ks(f, cert, S);
  emit(a.json, Json{{"verified", ok}, {"n", S.n}},
       std::string(ok ? "verified" : "NOT verified") + "\n");
  return ok ? kTrue : kFalse;
}

int cmd_refute(const Args& a) {
  TracePolynomial f = parse_trace_polynomial(a.expr);
  ConstraintSet S = load_constraints(a.constraints_file, a.n);
  auto witness = sample_refute(f, S, a.trials, a.radius, a.seed, a.denominator);
  if (!witness) {
    emit(a.json, Json{{"refuted", false}, {"trials", a.trials}, {"n", S.n}},
         "no witness in " + std::to_string(a.trials) + " trials\n");
    return kTrue;
  }
  MatrixTuple t{S.n, static_cast<std::uint32_t>(witness->size()), *witness};
  if (!a.out_file.empty()) write_json_file(a.out_file, matrix_tuple_to_json(t));
  std::string text = "witness found";
  if (!a.out_file.empty()) text += " (written to " + a.out_file + ")";
  text += ":\n";
  for (const NumMatrix& m : t.matrices) text += matrix_str(m);
  emit(a.json,
       Json{{"refuted", true}, {"witness", matrix_tuple_to_json(t)},
            {"file", a.out_file}},
       text);
  return kFalse;
}

int cmd_ps3(const Args& a) {
  const PS3Context ctx = build_ps3_context();
  std::vector<std::pair<std::string, bool>> results;
  auto want = [&](const std::string& part) { return a.only.empty() || a.only == part; };
  if (want("idempotents")) {
    results.emplace_back("idempotents", verify_idempotents(ctx));
    results.emplace_back("antisymmetric cubic", verify_antisym_cubic());
  }
  if (want("betas")) results.emplace_back("beta formulas", verify_beta_formulas(ctx));
  if (want("jacobian")) results.emplace_back("jacobian rank 6", verify_independence(ctx, 1));
  if (want("witness")) {
    bool ok = true;
    try {
      total_positivity_witness(ctx);
      FuncMatrix e12(3, 3), e13(3, 3);
      e12(0, 1) = RatFunc(1);
      e13(0, 2) = RatFunc(1);
      entry11_obstruction({e12, e13}, ctx);
    } catch (const std::logic_error&) {
      ok = false;
    }
    results.emplace_back("positivity witness and (1,1) obstruction", ok);
  }
  bool all = true;
  Json parts = Json::array();
  std::string text;
  for (const auto& [name, ok] : results) {
    all = all && ok;
    parts.push_back(Json{{"name", name}, {"pass", ok}});
    text += name + ": " + (ok ? "pass" : "FAIL") + "\n";
  }
  emit(a.json, Json{{"pass", all}, {"checks", parts}}, text);
  return all ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tracealg: exact trace-polynomial computation"};
  app.require_subcommand(1);
  Args a;
  int (*run)(const Args&) = nullptr;
  auto sub = [&](const std::string& name, const std::string& desc, int (*fn)(const Args&)) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_flag("--json", a.json, "machine-readable output");
    s->callback([&run, fn] { run = fn; });
    return s;
  };

  CLI::App* canon = sub("canon", "canonical form of an expression", cmd_canon);
  canon->add_option("expr", a.expr)->required();

  CLI::App* eval = sub("eval", "evaluate at a matrix tuple file", cmd_eval);
  eval->add_option("expr", a.expr)->required();
  eval->add_option("--matrices", a.file, "matrix tuple JSON file")->required();

  CLI::App* identity = sub("identity", "trace-identity test at size n", cmd_identity);
  identity->add_option("expr", a.expr)->required();
  identity->add_option("--n", a.n)->required();

  CLI::App* psd = sub("psd", "exact semidefiniteness of a symmetric matrix", cmd_psd);
  psd->add_option("--matrix", a.file, "JSON 2D array of rationals")->required();

  CLI::App* reynolds = sub("reynolds", "Reynolds operator / concomitant lift", cmd_reynolds);
  reynolds->add_option("expr", a.expr)->required();
  reynolds->add_option("--n", a.n)->required();
  reynolds->add_flag("--matrix", a.matrix_mode, "concomitant lift of the full matrix value");

  CLI::App* fm = sub("fm", "the antisymmetric trace identity f_m", cmd_fm);
  fm->add_option("--m", a.m)->required();
  fm->add_flag("--check", a.check, "verify f_m vanishes on antisymmetric pairs at n = 2m");
  fm->add_option("--witness", a.witness_nd, "N D: nonvanishing witness on 2N x 2N blocks, d = D")
      ->expected(2);

  CLI::App* cap = sub("capelli", "Capelli polynomial c_m", cmd_capelli);
  cap->add_option("--m", a.m)->required();

  CLI::App* central = sub("central-reduce", "central constraint reduction", cmd_central_reduce);
  central->add_option("expr", a.expr)->required();
  central->add_option("--n", a.n)->required();
  central->add_flag("--example61", a.example61, "four-element reduction (n = 3)");

  CLI::App* vc = sub("verify-cert", "verify a Positivstellensatz certificate", cmd_verify_cert);
  vc->add_option("--a", a.expr, "the certified element")->required();
  vc->add_option("--cert", a.cert_file, "certificate JSON file")->required();
  vc->add_option("--constraints", a.constraints_file, "constraint set JSON file")->required();
  vc->add_option("--n", a.n, "override the constraint file's n");

  CLI::App* refute = sub("refute", "sample for a non-psd point on K_S", cmd_refute);
  refute->add_option("expr", a.expr)->required();
  refute->add_option("--constraints", a.constraints_file, "constraint set JSON file");
  refute->add_option("--n", a.n)->required();
  refute->add_option("--trials", a.trials)->required();
  refute->add_option("--seed", a.seed)->required();
  refute->add_option("--radius", a.radius, "grid radius (default 1)");
  refute->add_option("--denominator", a.denominator, "grid denominator (default 64)");
  refute->add_option("--out", a.out_file, "witness tuple output file");

  CLI::App* ps3 = sub("ps3", "3x3 one-variable model verifications", cmd_ps3);
  CLI::App* ps3v = ps3->add_subcommand("verify", "run the identity checks");
  ps3v->add_option("--only", a.only, "idempotents|betas|jacobian|witness")
      ->check(CLI::IsMember({"idempotents", "betas", "jacobian", "witness"}));
  ps3->require_subcommand(1);
  ps3v->callback([] {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    return run(a);
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
