#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "psi/multi_index.hpp"
#include "psi/rational.hpp"
#include "psi/real_poly.hpp"

namespace psi {

/// Exact complex number re + i*im over the rationals.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;
};

/// Hermitian polynomial r(z, zbar) = sum c_{alpha,beta} z^alpha zbar^beta.
///
/// Both triangles are stored; every mutation keeps c_{beta,alpha} equal to
/// conj(c_{alpha,beta}).
class HermitianPoly {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;
  using Entries = std::map<Key, GaussianRational>;

  struct RawEntry {
    MultiIndex alpha;
    MultiIndex beta;
    GaussianRational value;
  };

  explicit HermitianPoly(std::size_t n);

  /// Completes a possibly one-sided entry list to the Hermitian matrix and
  /// rejects contradictory mirrors, repeated keys and non-real diagonals.
  static HermitianPoly from_entries(std::size_t n, const std::vector<RawEntry>& entries);

  std::size_t nvars() const { return n_; }
  const Entries& entries() const { return entries_; }
  GaussianRational entry(const MultiIndex& alpha, const MultiIndex& beta) const;
  bool is_zero() const { return entries_.empty(); }
  bool is_diagonal() const;

  /// Adds v at (alpha, beta) and conj(v) at (beta, alpha); v must be real on the diagonal.
  void add_entry(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& v);

  /// Every alpha or beta that appears, descending lex order.
  std::vector<MultiIndex> basis() const;

  HermitianPoly& operator+=(const HermitianPoly& o);
  HermitianPoly& operator-=(const HermitianPoly& o);
  friend HermitianPoly operator+(HermitianPoly a, const HermitianPoly& b) { return a += b; }
  friend HermitianPoly operator-(HermitianPoly a, const HermitianPoly& b) { return a -= b; }
  HermitianPoly scaled(const Rational& c) const;

  friend bool operator==(const HermitianPoly&, const HermitianPoly&) = default;

 private:
  void add_raw(const Key& key, const GaussianRational& v);

  std::size_t n_;
  Entries entries_;
};

/// Dense Hermitian matrix over Gaussian rationals, indexed by a monomial basis.
class HermitianMatrix {
 public:
  /// Throws NotHermitian on a symmetry violation, InvalidArgument on duplicate
  /// basis elements, ExplicitLimit above the dimension cap.
  HermitianMatrix(std::vector<MultiIndex> basis, std::vector<GaussianRational> row_major);
  /// Zero matrix.
  explicit HermitianMatrix(std::vector<MultiIndex> basis);
  /// Matrix with an index-only basis (for tests and direct matrix input).
  static HermitianMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<MultiIndex>& basis() const { return basis_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * dim() + j]; }
  const std::vector<GaussianRational>& data() const { return a_; }

  /// Sets (i,j) and its mirror.
  void set(std::size_t i, std::size_t j, const GaussianRational& v);
  void add(std::size_t i, std::size_t j, const GaussianRational& v);

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::vector<MultiIndex> basis_;
  std::vector<GaussianRational> a_;
};

/// Hard cap on dense matrix dimension; PSI_MAX_DIM may lower it.
std::size_t max_matrix_dim();
void check_matrix_dim(std::size_t dim);

/// Coefficient matrix C with r = Z* C Z over the basis of r.
HermitianMatrix coefficient_matrix(const HermitianPoly& r);
HermitianPoly to_hermitian_poly(const HermitianMatrix& m);

/// x_k = |z_k|^2 correspondence for diagonal Hermitian polynomials.
RealSparsePoly diagonal_real_bridge(const HermitianPoly& r);
HermitianPoly real_to_diagonal(const RealSparsePoly& p);

}  // namespace psi
