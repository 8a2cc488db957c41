#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psi/multi_index.hpp"
#include "psi/rational.hpp"
#include "psi/signature.hpp"

namespace psi {

/// Sparse real polynomial p(x) with exact rational coefficients.
/// Zero coefficients are never stored.
class RealSparsePoly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit RealSparsePoly(std::size_t n);
  RealSparsePoly(std::size_t n, const std::vector<std::pair<MultiIndex, Rational>>& terms);

  static RealSparsePoly constant(std::size_t n, const Rational& c);
  static RealSparsePoly monomial(const MultiIndex& alpha, const Rational& c = 1);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& alpha) const;
  /// Adds c to the coefficient of x^alpha, erasing the entry if it cancels.
  void add_term(const MultiIndex& alpha, const Rational& c);

  /// None for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  RealSparsePoly& operator+=(const RealSparsePoly& o);
  RealSparsePoly& operator-=(const RealSparsePoly& o);
  friend RealSparsePoly operator+(RealSparsePoly a, const RealSparsePoly& b) { return a += b; }
  friend RealSparsePoly operator-(RealSparsePoly a, const RealSparsePoly& b) { return a -= b; }
  RealSparsePoly scaled(const Rational& c) const;

  friend bool operator==(const RealSparsePoly&, const RealSparsePoly&) = default;

  std::string str() const;

 private:
  std::size_t n_;
  Terms terms_;
};

/// p * (x1 + ... + xn)^d by d successive exact convolutions with the linear form.
RealSparsePoly multiply_by_simplex_power(const RealSparsePoly& p, int d);

/// Same product through the closed-form multinomial expansion of (x1+...+xn)^d.
RealSparsePoly multiply_by_simplex_power_direct(const RealSparsePoly& p, int d);

/// p * sum_j x^{alpha_j}; throws DuplicateMultiplierTerm on repeated indices.
RealSparsePoly multiply_by_diagonal_multiplier(const RealSparsePoly& p,
                                               const std::vector<MultiIndex>& s);

/// Homogeneous components ordered by increasing degree; empty for p = 0.
std::vector<RealSparsePoly> homogeneous_components(const RealSparsePoly& p);

/// Number of strictly positive and strictly negative coefficients.
SignaturePair sign_counts(const RealSparsePoly& p);

/// Homogenizes p to degree `degree` by appending the variable x_{n+1}.
RealSparsePoly homogenize(const RealSparsePoly& p, int degree);
/// Sets the last variable to 1.
RealSparsePoly dehomogenize(const RealSparsePoly& p);

}  // namespace psi
