#pragma once

#include <map>
#include <optional>

#include "psi/multi_index.hpp"
#include "psi/rational.hpp"
#include "psi/real_poly.hpp"
#include "psi/signature.hpp"

namespace psi {

struct BoundReport {
  int n = 0;
  int d = 0;
  SignaturePair signature;
  Rational bound;
  bool satisfied = false;
  bool strict = true;  ///< the ceilings are strict inequalities
};

/// Ceiling on N-/N+ for members of Psi_d: n-1 when d = 1, C(n-1+d, d) - 1 otherwise.
Rational ratio_ceiling(int n, int d);

BoundReport verify_ratio_bound(const SignaturePair& sig, int n, int d);

/// Same check against the ceiling L - 1 for a multiplier with L distinct terms.
BoundReport verify_ratio_bound_multiplier(const SignaturePair& sig, int n, std::size_t terms);

/// N- = 0 or N+ >= n. Throws NotInPsiD unless p * l^d has nonnegative coefficients.
bool verify_min_positive(const RealSparsePoly& p, int d);

/// The map f from negative to positive support: f(alpha) = alpha + e_n - e_j
/// with j < n minimal such that the image is positive.
struct PigeonholeCertificate {
  std::map<MultiIndex, MultiIndex> assignment;
  std::size_t max_fiber = 0;
  /// Extreme monomial of the support whose fiber is empty; nullopt for p = 0.
  std::optional<MultiIndex> least_monomial;
};

/// Requires p homogeneous with p * l nonnegative; throws CertificateFailure when
/// a step of the construction is unavailable.
PigeonholeCertificate pigeonhole_certificate(const RealSparsePoly& p);

/// Checks every invariant of a certificate against p.
bool check_pigeonhole_certificate(const RealSparsePoly& p, const PigeonholeCertificate& cert);

}  // namespace psi
