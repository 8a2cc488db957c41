#pragma once

#include <optional>

#include "psi/multi_index.hpp"
#include "psi/rational.hpp"
#include "psi/real_poly.hpp"

namespace psi {

/// Coefficient of x^alpha in p_D: n-1 on the boundary faces and on the
/// interior residue class sum_{k<n} k*alpha_k == D (mod n), -1 elsewhere.
long gamma(const MultiIndex& alpha, int D, int n);

/// sum over |alpha| = D of gamma(alpha) x^alpha; every degree-D monomial appears.
RealSparsePoly generate_pD(int n, int D);

/// Guaranteed lower bound on N-/N+ for p_D (requires D > 3n).
Rational pD_ratio_lower_bound(int n, int D);

/// Two-variable family of degree D = (d+1)m: 2^d - 1 at x1^{D-j} x2^j with
/// j divisible by d+1, -1 elsewhere.
RealSparsePoly generate_two_var(int d, int m);

struct InductiveParams {
  int n = 3;
  int d = 2;
  int k = 8;
  std::optional<int> nu;  ///< row skip; nullopt picks floor(d/2)
  int m = 4;              ///< block count of the two-variable base pattern
  bool homogenize = false;
};

/// Layered construction in n variables, built on the pattern for n-1
/// variables at power d - nu. Without `homogenize` the result is expressed in
/// x1..x_{n-1} with x_n set to 1.
RealSparsePoly generate_inductive(const InductiveParams& params);

/// Degree of the homogenized inductive polynomial (so homogenize(p, deg) works).
int inductive_total_degree(const InductiveParams& params);

struct QkResult {
  RealSparsePoly poly;
  Rational epsilon;
  int power = 0;  ///< multiplier power at which membership was verified
};

/// q_k = x1^k + x2^k + x2^{k-1}(x3 + ... + xn) - eps x1 x2^{k-1}.
RealSparsePoly qk_polynomial(int n, int k, const Rational& epsilon);

/// With epsilon = nullopt, eps is halved from 1 until q_k is a member at power
/// k-1 (then k); throws EpsilonSearchFailed below 2^-20. With an explicit
/// epsilon, the smallest power in {k-1, k} that works is reported (-1 if none).
QkResult generate_qk(int n, int k, const std::optional<Rational>& epsilon = std::nullopt);

/// (x1 + x2)^4 - lambda x1^2 x2^2.
RealSparsePoly generate_lambda_example(const Rational& lambda);
/// True when 0 <= lambda < 16, where the form is positive on the simplex.
bool lambda_in_positive_regime(const Rational& lambda);

/// The 13-term degree-6 polynomial with 7 positive and 6 negative terms.
RealSparsePoly example_fig2();

/// x^2 + y^2 + xz - xy.
RealSparsePoly example_fig1();

}  // namespace psi
