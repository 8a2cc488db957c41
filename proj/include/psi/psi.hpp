#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "psi/hermitian.hpp"
#include "psi/inertia.hpp"
#include "psi/real_poly.hpp"

namespace psi {

inline constexpr int kDefaultMaxD = 16;
inline constexpr int kHardMaxD = 64;

/// Member certificate: the product matrix is PSD with this inertia.
struct PsdCertificate {
  Inertia inertia;
  std::size_t dim = 0;
};

/// Non-member certificate for the diagonal path: a product coefficient < 0.
struct NegativeMonomial {
  MultiIndex monomial;
  Rational value;
};

/// Non-member certificate for the Hermitian path: v with v* M v < 0 on the
/// product matrix over `basis`.
struct NegativeDirection {
  std::vector<MultiIndex> basis;
  std::vector<GaussianRational> vector;
  Rational value;
};

/// Diagonal member certificate: the product has no negative coefficient.
struct NonnegativeProduct {
  std::size_t terms = 0;
};

using PsiCertificate = std::variant<NonnegativeProduct, PsdCertificate, NegativeMonomial, NegativeDirection>;

struct PsiReport {
  int d = 0;  ///< multiplier power; -1 when a general multiplier was used
  std::vector<MultiIndex> multiplier;  ///< empty unless a general multiplier was used
  bool member = false;
  PsiCertificate certificate;
};

using PsiInput = std::variant<RealSparsePoly, HermitianPoly>;

/// r in Psi_d for diagonal r, decided on the coefficients of p * l^d.
PsiReport in_psi_diagonal(const RealSparsePoly& p, int d);

/// Coefficient matrix of r(z,zbar) * |z|^{2d}, built by index arithmetic.
HermitianMatrix product_matrix(const HermitianPoly& r, int d);
/// Same for a general diagonal multiplier sum_j |z^{s_j}|^2.
HermitianMatrix product_matrix(const HermitianPoly& r, const std::vector<MultiIndex>& s);

PsiReport in_psi_hermitian(const HermitianPoly& r, int d);

/// Smallest d <= d_max with membership, if any. Throws CapExceeded above 64.
std::optional<int> min_psi_index(const PsiInput& input, int d_max = kDefaultMaxD);

/// Membership of r * s in the squared norms, s = sum_j |z^{alpha_j}|^2.
PsiReport in_psi_general_multiplier(const PsiInput& input, const std::vector<MultiIndex>& s);

/// Re-checks a report's certificate against the input exactly.
bool verify_certificate(const PsiInput& input, const PsiReport& report);

}  // namespace psi
