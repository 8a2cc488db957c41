#include "psi/json_io.hpp"

#include <fstream>
#include <sstream>

#include "psi/error.hpp"

namespace psi {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_field(const Json& j, const char* key, bool required = true) {
  if (!j.contains(key)) {
    if (required) bad(std::string("missing field '") + key + "'");
    return Rational(0);
  }
  const Json& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  bad(std::string("field '") + key + "' must be an integer or a rational string");
}

std::size_t nvars_field(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long>() < 1) bad("'n' must be a positive integer");
  return n.get<std::size_t>();
}

MultiIndex sized_index(const Json& j, std::size_t n) {
  MultiIndex alpha = multi_index_from_json(j);
  if (alpha.size() != n) bad("exponent " + alpha.str() + " has the wrong length");
  return alpha;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json gaussian_json(const GaussianRational& g) { return {{"re", g.re.str()}, {"im", g.im.str()}}; }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const MultiIndex& alpha) { return Json(alpha.vec()); }

MultiIndex multi_index_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("exponent must be a nonempty array");
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 0) bad("exponents must be nonnegative integers");
    e.push_back(x.get<int>());
  }
  return MultiIndex(std::move(e));
}

Json to_json(const RealSparsePoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"exp", to_json(it->first)}, {"coef", it->second.str()}});
  }
  return {{"n", p.nvars()}, {"terms", terms}};
}

RealSparsePoly poly_from_json(const Json& j) {
  const std::size_t n = nvars_field(j);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  std::vector<std::pair<MultiIndex, Rational>> list;
  for (const auto& t : terms) list.emplace_back(sized_index(field(t, "exp"), n), rational_field(t, "coef"));
  return RealSparsePoly(n, list);
}

Json to_json(const HermitianPoly& r) {
  Json entries = Json::array();
  for (const auto& [key, v] : r.entries()) {
    if (key.first < key.second) continue;
    entries.push_back({{"alpha", to_json(key.first)},
                       {"beta", to_json(key.second)},
                       {"re", v.re.str()},
                       {"im", v.im.str()}});
  }
  return {{"n", r.nvars()}, {"entries", entries}};
}

HermitianPoly herm_from_json(const Json& j) {
  const std::size_t n = nvars_field(j);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("'entries' must be an array");
  std::vector<HermitianPoly::RawEntry> raw;
  for (const auto& e : entries) {
    raw.push_back({sized_index(field(e, "alpha"), n), sized_index(field(e, "beta"), n),
                   GaussianRational(rational_field(e, "re"), rational_field(e, "im", false))});
  }
  return HermitianPoly::from_entries(n, raw);
}

Json to_json(const SignPattern& p) {
  Json pos = Json::array();
  Json neg = Json::array();
  for (auto it = p.signs().rbegin(); it != p.signs().rend(); ++it) {
    if (it->second == Sign::Pos) pos.push_back(to_json(it->first));
    if (it->second == Sign::Neg) neg.push_back(to_json(it->first));
  }
  return {{"n", p.nvars()}, {"D", p.degree()}, {"pos", pos}, {"neg", neg}};
}

SignPattern pattern_from_json(const Json& j) {
  const std::size_t n = nvars_field(j);
  const Json& D = field(j, "D");
  if (!D.is_number_integer() || D.get<long>() < 0) bad("'D' must be a nonnegative integer");
  SignPattern p(static_cast<int>(n), D.get<int>());
  for (const auto& [key, sign] : {std::pair{"pos", Sign::Pos}, std::pair{"neg", Sign::Neg}}) {
    if (!j.contains(key)) continue;
    for (const auto& e : j.at(key)) {
      const MultiIndex alpha = sized_index(e, n);
      if (alpha.degree() != D.get<int>()) bad("lattice point " + alpha.str() + " has the wrong degree");
      if (p.sign(alpha) != Sign::Zero) bad("lattice point " + alpha.str() + " listed twice");
      p.set(alpha, sign);
    }
  }
  return p;
}

Json to_json(const SignaturePair& s) {
  const auto r = s.ratio();
  return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"ratio", r ? Json(r->str()) : Json(nullptr)}};
}

Json to_json(const Inertia& i) { return {{"n_plus", i.n_plus}, {"n_minus", i.n_minus}, {"n_zero", i.n_zero}}; }

Json to_json(const PsiReport& r) {
  Json out = {{"member", r.member}};
  if (r.d >= 0) out["d"] = r.d;
  if (!r.multiplier.empty()) {
    Json m = Json::array();
    for (const auto& s : r.multiplier) m.push_back(to_json(s));
    out["multiplier"] = m;
  }
  Json cert;
  if (const auto* c = std::get_if<NonnegativeProduct>(&r.certificate)) {
    cert = {{"kind", "nonnegative_product"}, {"terms", c->terms}};
  } else if (const auto* c = std::get_if<PsdCertificate>(&r.certificate)) {
    cert = {{"kind", "psd"}, {"inertia", to_json(c->inertia)}, {"dim", c->dim}};
  } else if (const auto* c = std::get_if<NegativeMonomial>(&r.certificate)) {
    cert = {{"kind", "negative_monomial"}, {"monomial", to_json(c->monomial)}, {"value", c->value.str()}};
  } else if (const auto* c = std::get_if<NegativeDirection>(&r.certificate)) {
    Json basis = Json::array();
    Json vec = Json::array();
    for (const auto& b : c->basis) basis.push_back(to_json(b));
    for (const auto& v : c->vector) vec.push_back(gaussian_json(v));
    cert = {{"kind", "negative_direction"}, {"basis", basis}, {"vector", vec}, {"value", c->value.str()}};
  }
  out["certificate"] = cert;
  return out;
}

Json to_json(const BoundReport& r) {
  return {{"n", r.n},           {"d", r.d},
          {"signature", to_json(r.signature)}, {"bound", r.bound.str()},
          {"strict", r.strict}, {"satisfied", r.satisfied}};
}

Json to_json(const PigeonholeCertificate& c) {
  Json pairs = Json::array();
  for (const auto& [from, to] : c.assignment) pairs.push_back({{"negative", to_json(from)}, {"positive", to_json(to)}});
  return {{"assignment", pairs},
          {"max_fiber", c.max_fiber},
          {"empty_fiber_monomial", c.least_monomial ? to_json(*c.least_monomial) : Json(nullptr)}};
}

Json to_json(const SearchResult& r) {
  return {{"strategy", to_string(r.strategy)},
          {"ratio", r.ratio.str()},
          {"ratio_value", r.ratio.to_double()},
          {"signature", to_json(r.best.counts())},
          {"evaluations", r.evaluations},
          {"complete", r.complete},
          {"ceiling", r.ceiling.str()},
          {"reference", r.knight_reference ? Json(r.knight_reference->str()) : Json(nullptr)},
          {"pattern", to_json(r.best)},
          {"polynomial", to_json(r.realized)}};
}

Json to_json(const ReductionResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json t = Json::array();
    for (int i = 0; i < 2; ++i) t.push_back({complex_json(s.t(i, 0)), complex_json(s.t(i, 1))});
    steps.push_back({{"pivot_col", s.pivot_col},
                     {"rows", {s.rows.first, s.rows.second}},
                     {"lambda", s.lambda_used ? Json(s.lambda_used->str()) : Json(nullptr)},
                     {"t", t},
                     {"j_identity_error", j_identity_error(s.t)}});
  }
  Json basis = Json::array();
  for (const auto& b : r.form.basis) basis.push_back(to_json(b));
  Json lambdas = Json::array();
  for (const auto& l : r.lambdas) lambdas.push_back(l.str());
  return {{"basis", basis},
          {"plus_rows", matrix_json(r.form.plus_rows)},
          {"minus_rows", matrix_json(r.form.minus_rows)},
          {"steps", steps},
          {"lambdas", lambdas},
          {"partial_row_echelon", is_partial_row_echelon(r.form)},
          {"exact_signature", to_json(r.exact_signature)},
          {"output_signature", to_json(r.output_signature)},
          {"eigen_signature", to_json(r.eigen_signature)},
          {"reconstruction_error", r.reconstruction_error},
          {"psi1_margin", r.psi1_margin},
          {"psi1_verified", r.psi1_verified}};
}

}  // namespace psi
