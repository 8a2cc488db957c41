#include "psi/rational.hpp"

#include <cmath>
#include <numeric>

#include "psi/error.hpp"

namespace psi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicateMultiplierTerm: return "DuplicateMultiplierTerm";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ExplicitLimit: return "ExplicitLimit";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::ParamsInfeasible: return "ParamsInfeasible";
    case ErrorCode::EpsilonSearchFailed: return "EpsilonSearchFailed";
    case ErrorCode::NotInPsiD: return "NotInPsiD";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::PivotDominanceViolated: return "PivotDominanceViolated";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "Unknown";
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) {
  if (sgn(v_.get_den()) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text)) {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text)) {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (sgn(den) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num_text), den);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational rational_approximation(double value, std::int64_t max_den) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  // Convergents of the continued fraction, stopping before the bound is crossed.
  const bool negative = value < 0;
  double x = std::fabs(value);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_d = std::floor(x);
    if (a_d > 1e18) break;
    const mpz_class a(static_cast<long>(a_d));
    const mpz_class p2 = a * p1 + p0;
    const mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = x - a_d;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (sgn(q1) == 0) return Rational(0);
  mpq_class q(negative ? mpz_class(-p1) : p1, q1);
  q.canonicalize();
  return Rational(q);
}

mpz_class multinomial(const std::vector<int>& parts) {
  mpz_class result = 1;
  long running = 0;
  for (int k : parts) {
    for (int i = 1; i <= k; ++i) {
      ++running;
      result *= running;
      result /= i;
    }
  }
  return result;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace psi
