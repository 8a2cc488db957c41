#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "psi/hermitian.hpp"
#include "psi/rational.hpp"
#include "psi/signature.hpp"

namespace psi {

struct Tolerances {
  double local = 1e-12;   ///< J-identity of a single T
  double global = 1e-9;   ///< reconstruction and float membership checks
  double pivot = 1e-10;   ///< smallest pivot relative to its row norm
};

/// r = |A Z|^2 - |B Z|^2 over `basis`, Z the monomial vector.
struct DecomposedForm {
  std::size_t nvars = 0;
  std::vector<MultiIndex> basis;
  Eigen::MatrixXcd plus_rows;   ///< A, one row per positive square
  Eigen::MatrixXcd minus_rows;  ///< B
  /// Exact form this one represents.
  std::optional<HermitianPoly> origin;
  /// A and B are still unitary images of the origin's exact decomposition, so
  /// lambda scaling can be carried out exactly on the origin.
  bool unmixed = true;

  SignaturePair signature() const {
    return {static_cast<long>(plus_rows.rows()), static_cast<long>(minus_rows.rows())};
  }
};

struct HyperbolicStep {
  Eigen::Matrix2cd t;
  std::size_t pivot_col = 0;
  std::pair<std::size_t, std::size_t> rows;  ///< (row of A, row of B)
  std::optional<Rational> lambda_used;
};

/// Float form from the exact holomorphic decomposition of r; origin = r.
DecomposedForm decompose(const HermitianPoly& r);

/// Coefficient matrix A^T conj(A) - B^T conj(B) over the form's basis.
Eigen::MatrixXcd form_matrix(const DecomposedForm& form);
/// Coefficient matrix of an exact polynomial over a given basis.
Eigen::MatrixXcd float_matrix(const HermitianPoly& r, const std::vector<MultiIndex>& basis);

/// B -> sqrt(lambda) B; lambda = 0 drops B. An unmixed origin P - N becomes
/// P - lambda N exactly, a mixed one is dropped.
DecomposedForm lambda_scale(const DecomposedForm& form, const Rational& lambda);

/// T with theta = 0 sending (a1, b1) to (*, 0); requires |a1| > |b1|.
HyperbolicStep hyperbolic_eliminate(std::complex<double> a1, std::complex<double> b1);

/// max |T* J T - J| / |T|^2, J = diag(1, -1).
double j_identity_error(const Eigen::Matrix2cd& t);

/// Index of the first entry of `row` above `zero_tol` in magnitude, or -1.
long leading_column(const Eigen::RowVectorXcd& row, double zero_tol = 0.0);

/// Distinct rows of the stacked [A; B] have distinct leading columns.
bool is_partial_row_echelon(const DecomposedForm& form, double zero_tol = 0.0);

/// Float inertia of a Hermitian matrix, eigenvalues within tol * scale count as zero.
SignaturePair float_signature(const Eigen::MatrixXcd& m, double tol);

/// Smallest eigenvalue of the coefficient matrix of m * |z|^2 (m over `basis`),
/// relative to its largest entry.
double psi1_margin(const Eigen::MatrixXcd& m, const std::vector<MultiIndex>& basis);

struct ReductionResult {
  DecomposedForm form;
  std::vector<HyperbolicStep> steps;
  std::vector<Rational> lambdas;
  Eigen::MatrixXcd target;           ///< the lambda-adjusted form the output must equal
  double reconstruction_error = 0;   ///< relative, max entry
  SignaturePair exact_signature;     ///< of the origin
  /// Row counts of the output; rows with distinct nonzero pivots are
  /// independent, so this is the inertia of the output form.
  SignaturePair output_signature;
  SignaturePair eigen_signature;     ///< eigenvalue count, tolerance-limited
  double psi1_margin = 0;
  bool psi1_verified = false;
};

/// Householder echelonization of A and B, then left-to-right resolution of
/// shared pivot columns by lambda scaling and hyperbolic steps.
ReductionResult partial_row_echelon(const DecomposedForm& form, const Tolerances& tol = {});

}  // namespace psi
