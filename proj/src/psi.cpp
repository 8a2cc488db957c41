#include "psi/psi.hpp"

#include <map>
#include <set>

#include "psi/error.hpp"

namespace psi {

namespace {

PsiReport diagonal_report(const RealSparsePoly& product, int d) {
  PsiReport rep;
  rep.d = d;
  // Terms are ascending in lex order, so the first negative is the lex-least one.
  for (const auto& [alpha, c] : product.terms()) {
    if (c.sign() < 0) {
      rep.member = false;
      rep.certificate = NegativeMonomial{alpha, c};
      return rep;
    }
  }
  rep.member = true;
  rep.certificate = NonnegativeProduct{product.size()};
  return rep;
}

PsiReport hermitian_report(const HermitianMatrix& m, int d) {
  PsiReport rep;
  rep.d = d;
  auto f = congruence_factorization(m);
  for (std::size_t k = 0; k < f.diag.size(); ++k) {
    if (f.diag[k].sign() < 0) {
      NegativeDirection dir{m.basis(), {}, f.diag[k]};
      for (std::size_t r = 0; r < m.dim(); ++r) dir.vector.push_back(f.transform[r][k]);
      rep.member = false;
      rep.certificate = std::move(dir);
      return rep;
    }
  }
  rep.member = true;
  rep.certificate = PsdCertificate{f.inertia(), m.dim()};
  return rep;
}

void check_multiplier(std::size_t n, const std::vector<MultiIndex>& s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "multiplier must be nonempty");
  std::set<MultiIndex> seen;
  for (const auto& a : s) {
    if (a.size() != n) throw Error(ErrorCode::InvalidArgument, "multiplier term length differs from n");
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::DuplicateMultiplierTerm, "repeated multiplier term " + a.str());
    }
  }
}

HermitianMatrix weighted_product(const HermitianPoly& r,
                                 const std::vector<std::pair<MultiIndex, Rational>>& mult) {
  std::set<MultiIndex> keys;
  for (const auto& alpha : r.basis()) {
    for (const auto& [delta, w] : mult) keys.insert(alpha + delta);
  }
  std::vector<MultiIndex> basis(keys.rbegin(), keys.rend());
  check_matrix_dim(basis.size());
  std::map<MultiIndex, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  HermitianMatrix m(std::move(basis));
  for (const auto& [key, c] : r.entries()) {
    for (const auto& [delta, w] : mult) {
      const std::size_t i = pos.at(key.first + delta);
      const std::size_t j = pos.at(key.second + delta);
      if (i > j) continue;  // the mirror entry supplies this one
      m.add(i, j, GaussianRational(c.re * w, c.im * w));
    }
  }
  return m;
}

}  // namespace

PsiReport in_psi_diagonal(const RealSparsePoly& p, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "d must be >= 0");
  return diagonal_report(multiply_by_simplex_power(p, d), d);
}

HermitianMatrix product_matrix(const HermitianPoly& r, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "d must be >= 0");
  std::vector<std::pair<MultiIndex, Rational>> mult;
  for (auto& delta : monomials_of_degree(r.nvars(), d)) {
    Rational w(multinomial(delta.vec()));
    mult.emplace_back(std::move(delta), std::move(w));
  }
  return weighted_product(r, mult);
}

HermitianMatrix product_matrix(const HermitianPoly& r, const std::vector<MultiIndex>& s) {
  check_multiplier(r.nvars(), s);
  std::vector<std::pair<MultiIndex, Rational>> mult;
  for (const auto& a : s) mult.emplace_back(a, Rational(1));
  return weighted_product(r, mult);
}

PsiReport in_psi_hermitian(const HermitianPoly& r, int d) {
  return hermitian_report(product_matrix(r, d), d);
}

std::optional<int> min_psi_index(const PsiInput& input, int d_max) {
  if (d_max > kHardMaxD) {
    throw Error(ErrorCode::CapExceeded,
                "d_max " + std::to_string(d_max) + " exceeds the limit " + std::to_string(kHardMaxD));
  }
  if (d_max < 0) throw Error(ErrorCode::InvalidArgument, "d_max must be >= 0");
  if (const auto* p = std::get_if<RealSparsePoly>(&input)) {
    // One extra convolution per step instead of recomputing p * l^d.
    RealSparsePoly product = *p;
    for (int d = 0; d <= d_max; ++d) {
      if (d > 0) product = multiply_by_simplex_power(product, 1);
      if (diagonal_report(product, d).member) return d;
    }
    return std::nullopt;
  }
  const auto& r = std::get<HermitianPoly>(input);
  for (int d = 0; d <= d_max; ++d) {
    if (in_psi_hermitian(r, d).member) return d;
  }
  return std::nullopt;
}

PsiReport in_psi_general_multiplier(const PsiInput& input, const std::vector<MultiIndex>& s) {
  PsiReport rep;
  if (const auto* p = std::get_if<RealSparsePoly>(&input)) {
    rep = diagonal_report(multiply_by_diagonal_multiplier(*p, s), -1);
  } else {
    rep = hermitian_report(product_matrix(std::get<HermitianPoly>(input), s), -1);
  }
  rep.multiplier = s;
  return rep;
}

bool verify_certificate(const PsiInput& input, const PsiReport& report) {
  const bool general = !report.multiplier.empty();
  if (const auto* p = std::get_if<RealSparsePoly>(&input)) {
    const RealSparsePoly product = general ? multiply_by_diagonal_multiplier(*p, report.multiplier)
                                           : multiply_by_simplex_power(*p, report.d);
    if (const auto* neg = std::get_if<NegativeMonomial>(&report.certificate)) {
      return !report.member && neg->value.sign() < 0 && product.coeff(neg->monomial) == neg->value;
    }
    if (std::holds_alternative<NonnegativeProduct>(report.certificate)) {
      if (!report.member) return false;
      for (const auto& [alpha, c] : product.terms()) {
        if (c.sign() < 0) return false;
      }
      return true;
    }
    return false;
  }
  const auto& r = std::get<HermitianPoly>(input);
  const HermitianMatrix m = general ? product_matrix(r, report.multiplier) : product_matrix(r, report.d);
  if (const auto* dir = std::get_if<NegativeDirection>(&report.certificate)) {
    if (report.member || dir->basis != m.basis()) return false;
    const Rational v = quadratic_form(m, dir->vector);
    return v.sign() < 0 && v == dir->value;
  }
  if (const auto* cert = std::get_if<PsdCertificate>(&report.certificate)) {
    return report.member && inertia(m) == cert->inertia && cert->inertia.n_minus == 0;
  }
  return false;
}

}  // namespace psi
