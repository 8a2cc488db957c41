#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psi/hermitian.hpp"
#include "psi/signature.hpp"

namespace psi {

struct Inertia {
  long n_plus = 0;
  long n_minus = 0;
  long n_zero = 0;

  SignaturePair signature() const { return {n_plus, n_minus}; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct PivotRecord {
  enum class Kind { Diagonal, Combine };
  Kind kind = Kind::Diagonal;
  std::size_t index = 0;    ///< pivot index (Diagonal) or receiving index (Combine)
  std::size_t partner = 0;  ///< index folded into `index` (Combine only)
  GaussianRational factor;  ///< multiplier used by Combine

  friend bool operator==(const PivotRecord&, const PivotRecord&) = default;
};

/// transform^* * M * transform = diag(diag), exactly.
///
/// diag[k] is the k-th congruent diagonal entry; column k of `transform`
/// is the corresponding vector. `inverse` is transform^{-1}.
struct CongruenceFactorization {
  std::vector<Rational> diag;
  std::vector<std::vector<GaussianRational>> transform;  ///< row-major, dim x dim
  std::vector<std::vector<GaussianRational>> inverse;    ///< row-major, dim x dim
  std::vector<PivotRecord> pivot_log;

  Inertia inertia() const;
};

/// Symmetric elimination with 1x1 pivots on the diagonal entry of largest
/// absolute value (lowest index on ties). When the remaining diagonal is zero
/// but the block is not, column j is added to column i (i < j the first pair
/// with W_ij != 0) to create a nonzero diagonal entry. The factor is 1 unless
/// Re W_ij = 0, in which case conj(W_ij) is used.
CongruenceFactorization congruence_factorization(const HermitianMatrix& m);

Inertia inertia(const HermitianMatrix& m);

struct PsdResult {
  bool psd = false;
  /// On failure, v with v* M v < 0.
  std::vector<GaussianRational> witness;
  Rational witness_value;
};

PsdResult is_positive_semidefinite(const HermitianMatrix& m);

/// Exact v* M v.
Rational quadratic_form(const HermitianMatrix& m, const std::vector<GaussianRational>& v);

/// r = sum scale_i |plus_i . Z|^2 - sum scale_j |minus_j . Z|^2.
struct HolomorphicDecomposition {
  std::vector<MultiIndex> basis;
  std::vector<std::vector<GaussianRational>> plus_rows;
  std::vector<std::vector<GaussianRational>> minus_rows;
  std::vector<Rational> plus_scale;
  std::vector<Rational> minus_scale;

  SignaturePair signature() const {
    return {static_cast<long>(plus_rows.size()), static_cast<long>(minus_rows.size())};
  }
};

HolomorphicDecomposition holomorphic_decomposition(const HermitianPoly& r);

/// Sum of scale * |row . Z|^2 as a Hermitian polynomial.
HermitianPoly squared_norm_form(std::size_t n, const std::vector<MultiIndex>& basis,
                                const std::vector<std::vector<GaussianRational>>& rows,
                                const std::vector<Rational>& scales);

/// Rebuilds r from a decomposition.
HermitianPoly reconstruct(const HolomorphicDecomposition& dec, std::size_t n);

}  // namespace psi
