#include "psi/generators.hpp"

#include <map>

#include "psi/error.hpp"
#include "psi/psi.hpp"

namespace psi {

long gamma(const MultiIndex& alpha, int D, int n) {
  if (n < 1 || alpha.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidArgument, "multi-index length differs from n");
  }
  if (alpha.degree() != D) {
    throw Error(ErrorCode::DegreeMismatch,
                "|alpha| = " + std::to_string(alpha.degree()) + " but D = " + std::to_string(D));
  }
  for (int k = 0; k < n; ++k) {
    if (alpha[k] == 0) return n - 1;
  }
  long weighted = 0;
  for (int k = 1; k < n; ++k) weighted += static_cast<long>(k) * alpha[k - 1];
  const long residue = ((weighted - D) % n + n) % n;
  return residue == 0 ? n - 1 : -1;
}

RealSparsePoly generate_pD(int n, int D) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "p_D needs n >= 2");
  if (D < 1) throw Error(ErrorCode::InvalidArgument, "p_D needs D >= 1");
  RealSparsePoly p(n);
  for (const auto& alpha : monomials_of_degree(n, D)) p.add_term(alpha, Rational(gamma(alpha, D, n)));
  return p;
}

Rational pD_ratio_lower_bound(int n, int D) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "bound needs n >= 2");
  if (D <= 3 * n) {
    throw Error(ErrorCode::DomainTooSmall,
                "bound requires D > 3n (D = " + std::to_string(D) + ", n = " + std::to_string(n) + ")");
  }
  const Rational interior = Rational(n - 1, n) * Rational(binomial(D - n, n - 1));
  const Rational total(binomial(D + n - 1, n - 1));
  return interior / (total - interior);
}

RealSparsePoly generate_two_var(int d, int m) {
  if (d < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "two-variable family needs d >= 1, m >= 1");
  const int D = (d + 1) * m;
  const Rational positive(mpz_class((mpz_class(1) << d) - 1));
  RealSparsePoly p(2);
  for (int j = 0; j <= D; ++j) {
    p.add_term(MultiIndex{D - j, j}, j % (d + 1) == 0 ? positive : Rational(-1));
  }
  return p;
}

namespace {

// Sign skeleton of a dehomogenized polynomial: +1 or -1 per support point.
using SignMap = std::map<MultiIndex, int>;

int resolve_nu(const InductiveParams& p) { return p.nu.value_or(p.d / 2); }

void validate(const InductiveParams& p) {
  const int nu = resolve_nu(p);
  if (p.n < 3) throw Error(ErrorCode::ParamsInfeasible, "inductive family needs n >= 3");
  if (p.d < 1) throw Error(ErrorCode::ParamsInfeasible, "inductive family needs d >= 1");
  if (nu < 0 || nu >= p.d) throw Error(ErrorCode::ParamsInfeasible, "need 0 <= nu < d");
  if (p.k < 2 * (nu + 1)) throw Error(ErrorCode::ParamsInfeasible, "need k >= 2(nu+1)");
  if (p.m < 1) throw Error(ErrorCode::ParamsInfeasible, "need m >= 1");
}

// Points alpha of the support such that alpha + beta stays in the support
// for every beta >= 0 with |beta| <= reach.
std::vector<MultiIndex> shrink_support(const SignMap& base, int reach) {
  std::vector<MultiIndex> out;
  for (const auto& [alpha, s] : base) {
    bool inside = true;
    for (int t = 1; t <= reach && inside; ++t) {
      for (const auto& beta : monomials_of_degree(alpha.size(), t)) {
        if (!base.contains(alpha + beta)) {
          inside = false;
          break;
        }
      }
    }
    if (inside) out.push_back(alpha);
  }
  return out;
}

// Sign skeleton in n-1 variables (x_n = 1) for power d.
SignMap inductive_signs(int n, int d, int k, int nu, int m) {
  const int inner_d = d - nu;
  SignMap base;
  if (n == 3) {
    const RealSparsePoly two = generate_two_var(inner_d, m);
    for (const auto& [alpha, c] : two.terms()) base.emplace(MultiIndex{alpha[0]}, c.sign());
  } else {
    const int inner_nu = inner_d / 2;
    if (k < 2 * (inner_nu + 1)) {
      throw Error(ErrorCode::ParamsInfeasible, "k too small for the inner recursion level");
    }
    base = inductive_signs(n - 1, inner_d, k, inner_nu, m);
  }
  const std::vector<MultiIndex> negative_layer = shrink_support(base, nu);

  SignMap out;
  auto put = [&](const MultiIndex& alpha, int j, int sign) {
    std::vector<int> e = alpha.vec();
    e.push_back(j);
    out.emplace(MultiIndex(std::move(e)), sign);
  };
  for (int j = 0; j <= k; ++j) {
    if (j == 0 || j == k) {
      for (const auto& [alpha, s] : base) put(alpha, j, 1);
    } else if (j % (nu + 1) == 0) {
      for (const auto& [alpha, s] : base) put(alpha, j, s);
    } else {
      for (const auto& alpha : negative_layer) put(alpha, j, -1);
    }
  }
  return out;
}

}  // namespace

RealSparsePoly generate_inductive(const InductiveParams& params) {
  validate(params);
  const int n = params.n;
  const int d = params.d;
  const SignMap signs = inductive_signs(n, d, params.k, resolve_nu(params), params.m);

  RealSparsePoly skeleton(n - 1);
  for (const auto& [alpha, s] : signs) skeleton.add_term(alpha, Rational(s));
  const int total_degree = *skeleton.degree();
  const RealSparsePoly homog = homogenize(skeleton, total_degree);

  // Negative mass reaching each product monomial, and whether a positive reaches it.
  RealSparsePoly negatives(n), positives(n);
  for (const auto& [alpha, c] : homog.terms()) {
    if (c.sign() < 0) negatives.add_term(alpha, 1);
    else positives.add_term(alpha, 1);
  }
  const RealSparsePoly neg_mass = multiply_by_simplex_power(negatives, d);
  const RealSparsePoly pos_mass = multiply_by_simplex_power(positives, d);
  Rational max_mass(0);
  for (const auto& [A, mass] : neg_mass.terms()) {
    if (pos_mass.coeff(A).is_zero()) {
      throw Error(ErrorCode::ParamsInfeasible,
                  "product monomial " + A.str() + " receives only negative contributions");
    }
    if (mass > max_mass) max_mass = mass;
  }
  const Rational big = max_mass + 1;

  RealSparsePoly out(n);
  for (const auto& [alpha, c] : homog.terms()) out.add_term(alpha, c.sign() < 0 ? Rational(-1) : big);
  return params.homogenize ? out : dehomogenize(out);
}

int inductive_total_degree(const InductiveParams& params) {
  InductiveParams p = params;
  p.homogenize = true;
  return *generate_inductive(p).degree();
}

RealSparsePoly qk_polynomial(int n, int k, const Rational& epsilon) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "q_k needs n >= 3");
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "q_k needs k >= 2");
  if (epsilon.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  auto mono = [n](std::initializer_list<std::pair<int, int>> powers) {
    std::vector<int> e(n, 0);
    for (auto [var, pow] : powers) e[var] += pow;
    return MultiIndex(std::move(e));
  };
  RealSparsePoly q(n);
  q.add_term(mono({{0, k}}), 1);
  q.add_term(mono({{1, k}}), 1);
  for (int j = 2; j < n; ++j) q.add_term(mono({{1, k - 1}, {j, 1}}), 1);
  q.add_term(mono({{0, 1}, {1, k - 1}}), -epsilon);
  return q;
}

QkResult generate_qk(int n, int k, const std::optional<Rational>& epsilon) {
  if (epsilon) {
    RealSparsePoly q = qk_polynomial(n, k, *epsilon);
    for (int power : {k - 1, k}) {
      if (in_psi_diagonal(q, power).member) return {std::move(q), *epsilon, power};
    }
    return {std::move(q), *epsilon, -1};
  }
  constexpr int kMinExponent = 20;
  for (int power : {k - 1, k}) {
    Rational eps(1);
    for (int halvings = 0; halvings <= kMinExponent; ++halvings, eps /= 2) {
      RealSparsePoly q = qk_polynomial(n, k, eps);
      if (in_psi_diagonal(q, power).member) return {std::move(q), eps, power};
    }
  }
  throw Error(ErrorCode::EpsilonSearchFailed,
              "no epsilon >= 2^-20 gives membership at power <= " + std::to_string(k));
}

RealSparsePoly generate_lambda_example(const Rational& lambda) {
  if (lambda.sign() < 0) throw Error(ErrorCode::InvalidArgument, "lambda must be >= 0");
  RealSparsePoly p(2);
  for (int j = 0; j <= 4; ++j) p.add_term(MultiIndex{4 - j, j}, Rational(binomial(4, j)));
  p.add_term(MultiIndex{2, 2}, -lambda);
  return p;
}

bool lambda_in_positive_regime(const Rational& lambda) {
  return lambda.sign() >= 0 && lambda < Rational(16);
}

RealSparsePoly example_fig2() {
  return RealSparsePoly(3, {
      {MultiIndex{1, 1, 4}, 2}, {MultiIndex{3, 0, 3}, 2}, {MultiIndex{0, 3, 3}, 2},
      {MultiIndex{2, 2, 2}, 2}, {MultiIndex{4, 1, 1}, 2}, {MultiIndex{1, 4, 1}, 2},
      {MultiIndex{3, 3, 0}, 2}, {MultiIndex{2, 1, 3}, -1}, {MultiIndex{1, 2, 3}, -1},
      {MultiIndex{3, 1, 2}, -1}, {MultiIndex{1, 3, 2}, -1}, {MultiIndex{3, 2, 1}, -1},
      {MultiIndex{2, 3, 1}, -1},
  });
}

RealSparsePoly example_fig1() {
  return RealSparsePoly(3, {
      {MultiIndex{2, 0, 0}, 1}, {MultiIndex{0, 2, 0}, 1},
      {MultiIndex{1, 0, 1}, 1}, {MultiIndex{1, 1, 0}, -1},
  });
}

}  // namespace psi
