#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tracealg/positivity.hpp"

namespace tracealg {

using Json = nlohmann::json;

/// "p/q" (or "p" when q = 1).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Term list [{"coef":"p/q","exps":[[["xi",j,i,k],e], ...]}, ...]; variable
/// tags are ["xi",j,i,k], ["u",i,k] or ["aux",j,i,k].
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

/// {"n":int,"g":int,"matrices":[[["p/q",...],...],...]} — g matrices, each
/// n x n with rational string entries.
struct MatrixTuple {
  std::size_t n = 0;
  std::uint32_t g = 0;
  std::vector<NumMatrix> matrices;
};

Json matrix_tuple_to_json(const MatrixTuple& t);
MatrixTuple matrix_tuple_from_json(const Json& j);

/// A bare 2D array of rational strings.
Json matrix_to_json(const NumMatrix& m);
NumMatrix matrix_from_json(const Json& j);

/// {"n":int,"generators":["expr", ...]} with expressions in the shared text
/// syntax; every generator must be symmetric.
Json constraints_to_json(const ConstraintSet& s);
ConstraintSet constraints_from_json(const Json& j);

/// {"mode":"psd|pd|zero","k":int,"t1":[...terms...],"t2":[...]} where terms
/// are tagged objects:
///   {"kind":"omega","omega":[{"scale":"p/q","factors":["expr",...]},...],
///    "h":"expr"}                                        (omega and h optional)
///   {"kind":"conjugate","h":"expr","s":int}
///   {"kind":"scaledTrace","traces":[["expr",int],...],"omega":[...],"h":"expr"}
Json ks_certificate_to_json(const KSCertificate& c);
KSCertificate ks_certificate_from_json(const Json& j);

Json qm_certificate_to_json(const CyclicQMCertificate& c);
CyclicQMCertificate qm_certificate_from_json(const Json& j);

/// File helpers; throw std::runtime_error with the path on failure.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tracealg
