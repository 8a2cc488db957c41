#include "psi/bounds.hpp"

#include "psi/error.hpp"
#include "psi/psi.hpp"

namespace psi {

Rational ratio_ceiling(int n, int d) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ratio ceiling needs n >= 2");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "ratio ceiling needs d >= 1");
  if (d == 1) return Rational(n - 1);
  return Rational(binomial(n - 1 + d, d)) - 1;
}

namespace {

bool below(const SignaturePair& sig, const Rational& bound) {
  if (sig.n_minus == 0) return true;
  if (sig.n_plus == 0) return false;
  return *sig.ratio() < bound;
}

}  // namespace

BoundReport verify_ratio_bound(const SignaturePair& sig, int n, int d) {
  BoundReport rep;
  rep.n = n;
  rep.d = d;
  rep.signature = sig;
  rep.bound = ratio_ceiling(n, d);
  rep.satisfied = below(sig, rep.bound);
  return rep;
}

BoundReport verify_ratio_bound_multiplier(const SignaturePair& sig, int n, std::size_t terms) {
  if (terms == 0) throw Error(ErrorCode::InvalidArgument, "multiplier must be nonempty");
  BoundReport rep;
  rep.n = n;
  rep.d = -1;
  rep.signature = sig;
  rep.bound = Rational(static_cast<long>(terms) - 1);
  rep.satisfied = below(sig, rep.bound);
  return rep;
}

bool verify_min_positive(const RealSparsePoly& p, int d) {
  if (!in_psi_diagonal(p, d).member) {
    throw Error(ErrorCode::NotInPsiD, "p * l^" + std::to_string(d) + " has a negative coefficient");
  }
  const SignaturePair sig = sign_counts(p);
  return sig.n_minus == 0 || sig.n_plus >= static_cast<long>(p.nvars());
}

PigeonholeCertificate pigeonhole_certificate(const RealSparsePoly& p) {
  if (!p.is_homogeneous()) {
    throw Error(ErrorCode::InvalidArgument, "pigeonhole certificate needs a homogeneous polynomial");
  }
  if (!in_psi_diagonal(p, 1).member) {
    throw Error(ErrorCode::NotInPsiD, "p * l has a negative coefficient");
  }
  PigeonholeCertificate cert;
  if (p.is_zero()) return cert;

  const std::size_t n = p.nvars();
  const MultiIndex last = MultiIndex::unit(n, n - 1);
  std::map<MultiIndex, std::size_t> fiber;
  for (const auto& [alpha, c] : p.terms()) {
    if (c.sign() >= 0) continue;
    const MultiIndex shifted = alpha + last;
    bool assigned = false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (shifted[j] == 0) continue;
      MultiIndex image = shifted - MultiIndex::unit(n, j);
      if (p.coeff(image).sign() > 0) {
        ++fiber[image];
        cert.assignment.emplace(alpha, std::move(image));
        assigned = true;
        break;
      }
    }
    if (!assigned) {
      throw Error(ErrorCode::CertificateFailure,
                  "no positive neighbour for negative monomial " + alpha.str());
    }
  }
  for (const auto& [beta, count] : fiber) cert.max_fiber = std::max(cert.max_fiber, count);
  if (cert.max_fiber > n - 1) {
    throw Error(ErrorCode::CertificateFailure, "a fiber exceeds n-1 preimages");
  }

  // With x1 highest, every preimage beta - e_n + e_j of beta is lex-greater
  // than beta, so the lex-greatest support monomial has an empty fiber.
  const auto& [top, top_coeff] = *p.terms().rbegin();
  if (top_coeff.sign() <= 0) {
    throw Error(ErrorCode::CertificateFailure, "extreme monomial " + top.str() + " is not positive");
  }
  if (fiber.contains(top)) {
    throw Error(ErrorCode::CertificateFailure, "extreme monomial " + top.str() + " has a preimage");
  }
  cert.least_monomial = top;
  return cert;
}

bool check_pigeonhole_certificate(const RealSparsePoly& p, const PigeonholeCertificate& cert) {
  const std::size_t n = p.nvars();
  std::map<MultiIndex, std::size_t> fiber;
  std::size_t negatives = 0;
  for (const auto& [alpha, c] : p.terms()) {
    if (c.sign() >= 0) continue;
    ++negatives;
    auto it = cert.assignment.find(alpha);
    if (it == cert.assignment.end()) return false;
    const MultiIndex& image = it->second;
    if (p.coeff(image).sign() <= 0) return false;
    // image must be alpha + e_n - e_j for some j < n
    MultiIndex shifted = alpha + MultiIndex::unit(n, n - 1);
    bool neighbour = false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (shifted[j] > 0 && shifted - MultiIndex::unit(n, j) == image) neighbour = true;
    }
    if (!neighbour) return false;
    ++fiber[image];
  }
  if (negatives != cert.assignment.size()) return false;
  std::size_t max_fiber = 0;
  for (const auto& [beta, count] : fiber) max_fiber = std::max(max_fiber, count);
  if (max_fiber != cert.max_fiber || max_fiber > n - 1) return false;
  if (p.is_zero()) return !cert.least_monomial;
  if (!cert.least_monomial) return false;
  return p.coeff(*cert.least_monomial).sign() > 0 && !fiber.contains(*cert.least_monomial);
}

}  // namespace psi
