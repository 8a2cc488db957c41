#include "psi/real_poly.hpp"

#include <set>

#include "psi/error.hpp"

namespace psi {

namespace {

void check_length(std::size_t n, const MultiIndex& alpha) {
  if (alpha.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                "multi-index " + alpha.str() + " has length " + std::to_string(alpha.size()) +
                    ", expected " + std::to_string(n));
  }
}

// Exponent vectors of (x1+...+xn)^d together with their multinomial weights.
std::vector<std::pair<MultiIndex, Rational>> simplex_power_terms(std::size_t n, int d) {
  std::vector<std::pair<MultiIndex, Rational>> out;
  for (auto& delta : monomials_of_degree(n, d)) {
    Rational w(multinomial(delta.vec()));
    out.emplace_back(std::move(delta), std::move(w));
  }
  return out;
}

}  // namespace

RealSparsePoly::RealSparsePoly(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "polynomial needs n >= 1 variables");
}

RealSparsePoly::RealSparsePoly(std::size_t n,
                               const std::vector<std::pair<MultiIndex, Rational>>& terms)
    : RealSparsePoly(n) {
  for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

RealSparsePoly RealSparsePoly::constant(std::size_t n, const Rational& c) {
  RealSparsePoly p(n);
  p.add_term(MultiIndex::zero(n), c);
  return p;
}

RealSparsePoly RealSparsePoly::monomial(const MultiIndex& alpha, const Rational& c) {
  RealSparsePoly p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

Rational RealSparsePoly::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RealSparsePoly::add_term(const MultiIndex& alpha, const Rational& c) {
  check_length(n_, alpha);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> RealSparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = 0;
  for (const auto& [alpha, c] : terms_) deg = std::max(deg, alpha.degree());
  return deg;
}

bool RealSparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int deg = terms_.begin()->first.degree();
  for (const auto& [alpha, c] : terms_) {
    if (alpha.degree() != deg) return false;
  }
  return true;
}

RealSparsePoly& RealSparsePoly::operator+=(const RealSparsePoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

RealSparsePoly& RealSparsePoly::operator-=(const RealSparsePoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

RealSparsePoly RealSparsePoly::scaled(const Rational& c) const {
  RealSparsePoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [alpha, v] : terms_) r.terms_.emplace(alpha, v * c);
  return r;
}

std::string RealSparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Descending lex order reads naturally (x1^D first).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, c] = *it;
    std::string cs = c.str();
    if (s.empty()) {
      s += cs;
    } else if (c.sign() < 0) {
      s += " - " + cs.substr(1);
    } else {
      s += " + " + cs;
    }
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      s += "*x" + std::to_string(k + 1);
      if (alpha[k] > 1) s += "^" + std::to_string(alpha[k]);
    }
  }
  return s;
}

RealSparsePoly multiply_by_simplex_power(const RealSparsePoly& p, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "multiplier power must be >= 0");
  const std::size_t n = p.nvars();
  RealSparsePoly cur = p;
  for (int pass = 0; pass < d; ++pass) {
    RealSparsePoly next(n);
    for (const auto& [alpha, c] : cur.terms()) {
      for (std::size_t k = 0; k < n; ++k) next.add_term(alpha + MultiIndex::unit(n, k), c);
    }
    cur = std::move(next);
  }
  return cur;
}

RealSparsePoly multiply_by_simplex_power_direct(const RealSparsePoly& p, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "multiplier power must be >= 0");
  const auto ell = simplex_power_terms(p.nvars(), d);
  RealSparsePoly out(p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    for (const auto& [delta, w] : ell) out.add_term(alpha + delta, c * w);
  }
  return out;
}

RealSparsePoly multiply_by_diagonal_multiplier(const RealSparsePoly& p,
                                               const std::vector<MultiIndex>& s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "multiplier must be nonempty");
  std::set<MultiIndex> seen;
  for (const auto& a : s) {
    check_length(p.nvars(), a);
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::DuplicateMultiplierTerm, "repeated multiplier term " + a.str());
    }
  }
  RealSparsePoly out(p.nvars());
  for (const auto& [alpha, c] : p.terms()) {
    for (const auto& a : s) out.add_term(alpha + a, c);
  }
  return out;
}

std::vector<RealSparsePoly> homogeneous_components(const RealSparsePoly& p) {
  std::map<int, RealSparsePoly> by_degree;
  for (const auto& [alpha, c] : p.terms()) {
    by_degree.try_emplace(alpha.degree(), p.nvars()).first->second.add_term(alpha, c);
  }
  std::vector<RealSparsePoly> out;
  for (auto& [deg, q] : by_degree) out.push_back(std::move(q));
  return out;
}

SignaturePair sign_counts(const RealSparsePoly& p) {
  SignaturePair sig;
  for (const auto& [alpha, c] : p.terms()) {
    if (c.sign() > 0) ++sig.n_plus;
    else ++sig.n_minus;
  }
  return sig;
}

RealSparsePoly homogenize(const RealSparsePoly& p, int degree) {
  RealSparsePoly out(p.nvars() + 1);
  for (const auto& [alpha, c] : p.terms()) {
    const int rest = degree - alpha.degree();
    if (rest < 0) throw Error(ErrorCode::DegreeMismatch, "homogenizing degree below polynomial degree");
    std::vector<int> e = alpha.vec();
    e.push_back(rest);
    out.add_term(MultiIndex(std::move(e)), c);
  }
  return out;
}

RealSparsePoly dehomogenize(const RealSparsePoly& p) {
  if (p.nvars() < 2) throw Error(ErrorCode::InvalidArgument, "dehomogenize needs n >= 2");
  RealSparsePoly out(p.nvars() - 1);
  for (const auto& [alpha, c] : p.terms()) {
    std::vector<int> e = alpha.vec();
    e.pop_back();
    out.add_term(MultiIndex(std::move(e)), c);
  }
  return out;
}

}  // namespace psi
