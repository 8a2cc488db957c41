#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "psi/bounds.hpp"
#include "psi/diagram.hpp"
#include "psi/error.hpp"
#include "psi/generators.hpp"
#include "psi/json_io.hpp"
#include "psi/pattern_search.hpp"
#include "psi/psi.hpp"
#include "psi/reduction.hpp"

namespace psi::cli {

namespace {

struct Input {
  std::string poly;
  std::string herm;
};

struct Options {
  std::string format = "json";
  Input input;

  // generate
  int n = 3;
  int D = 6;
  int d = 1;
  std::optional<int> m;
  std::optional<int> nu;
  int k = 8;
  std::string lambda = "15";
  std::string epsilon = "auto";
  bool homogenize = false;

  // check-psi
  std::vector<std::string> multiplier;

  // min-d
  int max_d = kDefaultMaxD;

  // search
  std::string strategy = "local";
  long budget = 200000;
  std::uint64_t seed = 0;
  std::string support;
  int restarts = 8;

  // reduce
  double tol = 1e-9;
  std::string out_path;

  // verify-bounds
  std::optional<int> bound_n;

  // diagram
  std::string pattern;
  std::string kind = "svg";
  bool simplices = false;
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInPsiD:
    case ErrorCode::BudgetExhausted:
      return kNegative;
    case ErrorCode::CertificateFailure:
    case ErrorCode::PivotDominanceViolated:
    case ErrorCode::NumericalBreakdown:
    case ErrorCode::EpsilonSearchFailed:
      return kInternal;
    default:
      return kUsage;
  }
}

void add_input(CLI::App* sub, Options& o) {
  auto* p = sub->add_option("--poly", o.input.poly, "real polynomial JSON (diagonal form)");
  auto* h = sub->add_option("--herm", o.input.herm, "Hermitian polynomial JSON");
  p->excludes(h);
}

PsiInput load_input(const Input& in) {
  if (!in.poly.empty()) return poly_from_json(read_json_file(in.poly));
  if (!in.herm.empty()) return herm_from_json(read_json_file(in.herm));
  throw Error(ErrorCode::InvalidArgument, "one of --poly or --herm is required");
}

RealSparsePoly load_poly(const Input& in) {
  if (in.poly.empty()) throw Error(ErrorCode::InvalidArgument, "--poly is required");
  return poly_from_json(read_json_file(in.poly));
}

MultiIndex parse_exponents(const std::string& s) {
  std::vector<int> e;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      e.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad exponent list '" + s + "'");
    }
  }
  if (e.empty()) throw Error(ErrorCode::ParseError, "empty exponent list");
  return MultiIndex(std::move(e));
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::function<void()>& text) {
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    text();
  }
}

std::string sig_text(const SignaturePair& s) {
  const auto r = s.ratio();
  return "(" + std::to_string(s.n_plus) + ", " + std::to_string(s.n_minus) + ")" +
         (r ? " ratio " + r->str() : std::string());
}

int cmd_generate(const std::string& family, const Options& o, std::ostream& out) {
  RealSparsePoly p(1);
  Json extra;
  if (family == "pd") {
    p = generate_pD(o.n, o.D);
  } else if (family == "two-var") {
    p = generate_two_var(o.d, *o.m);
  } else if (family == "inductive") {
    InductiveParams params;
    params.n = o.n;
    params.d = o.d;
    params.k = o.k;
    params.nu = o.nu;
    if (o.m) params.m = *o.m;
    params.homogenize = o.homogenize;
    p = generate_inductive(params);
  } else if (family == "qk") {
    std::optional<Rational> eps;
    if (o.epsilon != "auto") eps = Rational::parse(o.epsilon);
    const auto res = generate_qk(o.n, o.k, eps);
    p = res.poly;
    extra = {{"epsilon", res.epsilon.str()}, {"power", res.power}};
  } else if (family == "lambda") {
    p = generate_lambda_example(Rational::parse(o.lambda));
  } else if (family == "fig2") {
    p = example_fig2();
  } else if (family == "fig1") {
    p = example_fig1();
  }
  emit(out, o, to_json(p), [&] {
    out << p.str() << '\n';
    if (!extra.is_null()) out << "epsilon " << extra["epsilon"].get<std::string>() << " power " << extra["power"] << '\n';
  });
  return kOk;
}

int cmd_check_psi(const Options& o, std::ostream& out) {
  const PsiInput input = load_input(o.input);
  PsiReport report;
  if (!o.multiplier.empty()) {
    std::vector<MultiIndex> s;
    for (const auto& m : o.multiplier) s.push_back(parse_exponents(m));
    report = in_psi_general_multiplier(input, s);
  } else if (const auto* p = std::get_if<RealSparsePoly>(&input)) {
    report = in_psi_diagonal(*p, o.d);
  } else {
    report = in_psi_hermitian(std::get<HermitianPoly>(input), o.d);
  }
  emit(out, o, to_json(report), [&] {
    out << (report.member ? "member" : "not a member");
    if (report.d >= 0) out << " of Psi_" << report.d;
    out << '\n';
    if (const auto* c = std::get_if<NegativeMonomial>(&report.certificate)) {
      out << "negative coefficient " << c->value.str() << " at " << c->monomial.str() << '\n';
    } else if (const auto* c = std::get_if<NegativeDirection>(&report.certificate)) {
      out << "negative direction with value " << c->value.str() << '\n';
    }
  });
  return report.member ? kOk : kNegative;
}

int cmd_min_d(const Options& o, std::ostream& out) {
  const PsiInput input = load_input(o.input);
  const auto d = min_psi_index(input, o.max_d);
  Json j = {{"max_d", o.max_d}, {"min_d", d ? Json(*d) : Json(nullptr)}};
  emit(out, o, j, [&] {
    if (d) {
      out << "min d = " << *d << '\n';
    } else {
      out << "none found <= " << o.max_d << '\n';
    }
  });
  return d ? kOk : kNegative;
}

int cmd_signature(const Options& o, std::ostream& out) {
  const PsiInput input = load_input(o.input);
  Json j;
  SignaturePair sig;
  if (const auto* p = std::get_if<RealSparsePoly>(&input)) {
    sig = sign_counts(*p);
    j = {{"signature", to_json(sig)}};
  } else {
    const Inertia in = inertia(coefficient_matrix(std::get<HermitianPoly>(input)));
    sig = in.signature();
    j = {{"signature", to_json(sig)}, {"inertia", to_json(in)}};
  }
  emit(out, o, j, [&] { out << "signature " << sig_text(sig) << '\n'; });
  return kOk;
}

// Inline JSON list or a file holding a list or a pattern.
std::vector<MultiIndex> load_support(const std::string& arg) {
  const Json j = arg.starts_with('[') ? parse_json(arg) : read_json_file(arg);
  if (j.is_array()) {
    std::vector<MultiIndex> pts;
    for (const auto& e : j) pts.push_back(multi_index_from_json(e));
    return pts;
  }
  return pattern_from_json(j).support();
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchOptions opt;
  opt.strategy = parse_strategy(o.strategy);
  opt.budget = o.budget;
  opt.seed = o.seed;
  opt.restarts = o.restarts;
  if (!o.support.empty()) opt.support = load_support(o.support);
  bool exhausted = false;
  std::optional<SearchResult> res;
  try {
    res = search_max_ratio(o.n, o.D, o.d, opt);
  } catch (const BudgetExhaustedError& e) {
    res = e.best();
    exhausted = true;
  }
  Json j = to_json(*res);
  j["seed"] = o.seed;
  j["budget_exhausted"] = exhausted;
  emit(out, o, j, [&] {
    out << to_string(res->strategy) << " seed " << o.seed << " ratio " << res->ratio.str() << " signature "
        << sig_text(res->best.counts()) << " evaluations " << res->evaluations << '\n';
    if (exhausted) out << "budget exhausted; best pattern so far shown\n";
    DiagramSpec spec{res->best, DiagramFormat::Ascii, false};
    if (res->best.nvars() <= 3) out << render_diagram(spec);
  });
  return exhausted ? kNegative : kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  if (o.input.herm.empty() && o.input.poly.empty()) {
    throw Error(ErrorCode::InvalidArgument, "one of --herm or --poly is required");
  }
  const HermitianPoly r = o.input.herm.empty() ? real_to_diagonal(load_poly(o.input))
                                               : herm_from_json(read_json_file(o.input.herm));
  Tolerances tol;
  tol.global = o.tol;
  const ReductionResult res = partial_row_echelon(decompose(r), tol);
  const Json j = to_json(res);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out_path);
    f << j.dump(2) << '\n';
  }
  const bool ok = is_partial_row_echelon(res.form) && res.output_signature == res.exact_signature &&
                  res.reconstruction_error <= o.tol && res.psi1_verified;
  emit(out, o, j, [&] {
    out << "steps " << res.steps.size() << " lambdas " << res.lambdas.size() << '\n';
    out << "signature " << sig_text(res.exact_signature) << " output " << sig_text(res.output_signature) << '\n';
    out << "reconstruction error " << res.reconstruction_error << '\n';
    out << "psi1 margin " << res.psi1_margin << '\n';
    out << (ok ? "ok" : "invariant check failed") << '\n';
  });
  return ok ? kOk : kInternal;
}

int cmd_verify_bounds(const Options& o, std::ostream& out) {
  const PsiInput input = load_input(o.input);
  SignaturePair sig;
  PsiReport member;
  int n = 0;
  if (const auto* p = std::get_if<RealSparsePoly>(&input)) {
    sig = sign_counts(*p);
    member = in_psi_diagonal(*p, o.d);
    n = static_cast<int>(p->nvars());
  } else {
    const auto& r = std::get<HermitianPoly>(input);
    sig = inertia(coefficient_matrix(r)).signature();
    member = in_psi_hermitian(r, o.d);
    n = static_cast<int>(r.nvars());
  }
  if (o.bound_n && *o.bound_n != n) {
    throw Error(ErrorCode::InvalidArgument, "--n differs from the variable count of the input");
  }
  const BoundReport report = verify_ratio_bound(sig, n, o.d);
  Json j = to_json(report);
  j["member"] = member.member;
  emit(out, o, j, [&] {
    out << "signature " << sig_text(sig) << " ceiling " << report.bound.str() << (report.satisfied ? " holds" : " fails")
        << '\n';
    if (!member.member) out << "input is not in Psi_" << o.d << "; the ceiling does not apply\n";
  });
  if (!member.member) return kNegative;
  return report.satisfied ? kOk : kInternal;
}

int cmd_certificate(const Options& o, std::ostream& out) {
  const RealSparsePoly p = load_poly(o.input);
  const PigeonholeCertificate cert = pigeonhole_certificate(p);
  if (!check_pigeonhole_certificate(p, cert)) {
    throw Error(ErrorCode::CertificateFailure, "constructed certificate does not check");
  }
  emit(out, o, to_json(cert), [&] {
    for (const auto& [from, to] : cert.assignment) out << from.str() << " -> " << to.str() << '\n';
    out << "max fiber " << cert.max_fiber << '\n';
    if (cert.least_monomial) out << "empty fiber at " << cert.least_monomial->str() << '\n';
  });
  return kOk;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  std::optional<SignPattern> pattern;
  if (!o.pattern.empty()) {
    pattern = pattern_from_json(read_json_file(o.pattern));
  } else {
    pattern = SignPattern::from_poly(load_poly(o.input));
  }
  const DiagramSpec spec{*pattern, parse_diagram_format(o.kind), o.simplices};
  const std::string doc = render_diagram(spec);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out_path);
    f << doc;
  }
  const SignaturePair c = pattern->counts();
  Json j = {{"kind", o.kind},
            {"nodes", pattern->signs().size()},
            {"pos", c.n_plus},
            {"neg", c.n_minus}};
  if (o.out_path.empty()) j["document"] = doc;
  else j["out"] = o.out_path;
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else if (o.out_path.empty()) {
    out << doc;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact positivity classes, signature pairs and sign patterns"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  const auto fmt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* gen = app.add_subcommand("generate", "emit a polynomial family member as JSON");
  gen->require_subcommand(1);
  std::string family;
  for (const char* name : {"pd", "two-var", "inductive", "qk", "lambda", "fig1", "fig2"}) {
    auto* f = gen->add_subcommand(name);
    f->callback([&family, name] { family = name; });
    fmt(f);
  }
  gen->get_subcommand("pd")->add_option("--n", o.n)->required();
  gen->get_subcommand("pd")->add_option("--D", o.D)->required();
  gen->get_subcommand("two-var")->add_option("--d", o.d)->required();
  gen->get_subcommand("two-var")->add_option("--m", o.m)->required();
  {
    auto* f = gen->get_subcommand("inductive");
    f->add_option("--n", o.n);
    f->add_option("--d", o.d)->required();
    f->add_option("--k", o.k)->required();
    f->add_option("--nu", o.nu);
    f->add_option("--m", o.m);
    f->add_flag("--homogenize", o.homogenize);
  }
  gen->get_subcommand("qk")->add_option("--n", o.n)->required();
  gen->get_subcommand("qk")->add_option("--k", o.k)->required();
  gen->get_subcommand("qk")->add_option("--epsilon", o.epsilon, "rational or auto");
  gen->get_subcommand("lambda")->add_option("--lambda", o.lambda)->required();
  fmt(gen);

  auto* check = app.add_subcommand("check-psi", "decide membership in Psi_d");
  add_input(check, o);
  check->add_option("--d", o.d, "multiplier power")->check(CLI::Range(0, kHardMaxD));
  check->add_option("--multiplier", o.multiplier, "multiplier exponents such as 1,0,0 (repeatable)");
  fmt(check);

  auto* mind = app.add_subcommand("min-d", "smallest d with membership");
  add_input(mind, o);
  mind->add_option("--max-d", o.max_d);
  fmt(mind);

  auto* sig = app.add_subcommand("signature", "signature pair (N+, N-)");
  add_input(sig, o);
  fmt(sig);

  auto* search = app.add_subcommand("search", "search sign patterns for a large N-/N+");
  search->add_option("--n", o.n)->required();
  search->add_option("--D", o.D)->required();
  search->add_option("--d", o.d);
  search->add_option("--strategy", o.strategy)->check(
      CLI::IsMember({"exhaustive", "greedy", "local", "EXHAUSTIVE", "GREEDY", "LOCAL"}));
  search->add_option("--budget", o.budget);
  search->add_option("--seed", o.seed);
  search->add_option("--restarts", o.restarts);
  search->add_option("--support", o.support, "JSON list of lattice points, or a pattern whose support is used");
  fmt(search);

  auto* reduce = app.add_subcommand("reduce", "partial row-echelon reduction of a Psi_1 member");
  add_input(reduce, o);
  reduce->add_option("--tol", o.tol);
  reduce->add_option("--out", o.out_path, "write the step list here");
  fmt(reduce);

  auto* bounds = app.add_subcommand("verify-bounds", "check the N-/N+ ceiling");
  add_input(bounds, o);
  bounds->add_option("--n", o.bound_n);
  bounds->add_option("--d", o.d);
  fmt(bounds);

  auto* cert = app.add_subcommand("certificate", "pigeonhole certificate for a diagonal Psi_1 member");
  cert->add_option("--poly", o.input.poly)->required();
  fmt(cert);

  auto* diag = app.add_subcommand("diagram", "draw a sign pattern");
  auto* dp = diag->add_option("--poly", o.input.poly);
  diag->add_option("--pattern", o.pattern)->excludes(dp);
  diag->add_option("--kind", o.kind)->check(CLI::IsMember({"svg", "ascii"}));
  diag->add_flag("--simplices", o.simplices);
  diag->add_option("--out", o.out_path);
  fmt(diag);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out;
    std::ostringstream o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_generate(family, o, out);
    if (*check) return cmd_check_psi(o, out);
    if (*mind) return cmd_min_d(o, out);
    if (*sig) return cmd_signature(o, out);
    if (*search) return cmd_search(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*bounds) return cmd_verify_bounds(o, out);
    if (*cert) return cmd_certificate(o, out);
    if (*diag) return cmd_diagram(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace psi::cli
