#include "psi/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "psi/error.hpp"
#include "psi/inertia.hpp"
#include "psi/psi.hpp"

namespace psi {

namespace {

using cd = std::complex<double>;

cd to_complex(const GaussianRational& g) { return {g.re.to_double(), g.im.to_double()}; }

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Householder row reduction of rows [r0, end) starting at column c0; columns
// whose remaining part is already a single top entry are left alone. Column
// remainders below kZeroRel of the rows' norm are roundoff and get cleared.
constexpr double kZeroRel = 1e-11;

void echelonize(Eigen::MatrixXcd& x, Eigen::Index r0, Eigen::Index c0) {
  if (r0 >= x.rows()) return;
  const double zero_tol = kZeroRel * x.bottomRows(x.rows() - r0).norm();
  Eigen::Index r = r0;
  for (Eigen::Index c = c0; c < x.cols() && r < x.rows(); ++c) {
    const Eigen::Index m = x.rows() - r;
    auto col = x.block(r, c, m, 1);
    const double norm = col.norm();
    if (norm <= zero_tol) {
      col.setZero();
      continue;
    }
    if (m == 1 || x.block(r + 1, c, m - 1, 1).norm() == 0.0) {
      ++r;
      continue;
    }
    const cd x0 = x(r, c);
    const cd phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : cd(1.0);
    const cd alpha = -phase * norm;
    Eigen::VectorXcd v = col;
    v(0) -= alpha;
    const double vv = v.squaredNorm();
    auto blk = x.block(r, c, m, x.cols() - c);
    const Eigen::RowVectorXcd w = v.adjoint() * blk;
    blk.noalias() -= (2.0 / vv) * v * w;
    x(r, c) = alpha;
    x.block(r + 1, c, m - 1, 1).setZero();
    ++r;
  }
}

void check_pivots(const Eigen::MatrixXcd& x, double pivot_tol, const char* which) {
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const long lead = leading_column(x.row(i));
    const double norm = x.row(i).norm();
    if (lead < 0 || std::abs(x(i, lead)) < pivot_tol * norm) {
      throw Error(ErrorCode::NumericalBreakdown,
                  std::string("pivot of row ") + std::to_string(i) + " of " + which + " collapsed");
    }
  }
}

std::vector<long> leads(const Eigen::MatrixXcd& x) {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < x.rows(); ++i) out.push_back(leading_column(x.row(i)));
  return out;
}

// Half the admissible bound, as a rational with denominator at most 10^6; a
// finer denominator only when that rounds outside (0, bound).
std::optional<Rational> choose_lambda(double bound) {
  for (std::int64_t den = 1000000; den <= 1000000000000000LL; den *= 1000) {
    const Rational lambda = rational_approximation(0.5 * bound, den);
    if (lambda.sign() > 0 && lambda.to_double() < bound) return lambda;
  }
  return std::nullopt;
}

}  // namespace

DecomposedForm decompose(const HermitianPoly& r) {
  const auto dec = holomorphic_decomposition(r);
  DecomposedForm form;
  form.nvars = r.nvars();
  form.basis = dec.basis;
  const auto fill = [&](const auto& rows, const auto& scales) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dec.basis.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const double s = std::sqrt(scales[k].to_double());
      for (std::size_t j = 0; j < dec.basis.size(); ++j) m(k, j) = s * to_complex(rows[k][j]);
    }
    return m;
  };
  form.plus_rows = fill(dec.plus_rows, dec.plus_scale);
  form.minus_rows = fill(dec.minus_rows, dec.minus_scale);
  form.origin = r;
  return form;
}

Eigen::MatrixXcd form_matrix(const DecomposedForm& form) {
  const auto& a = form.plus_rows;
  const auto& b = form.minus_rows;
  const Eigen::Index dim = static_cast<Eigen::Index>(form.basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  if (a.rows() > 0) m += a.transpose() * a.conjugate();
  if (b.rows() > 0) m -= b.transpose() * b.conjugate();
  return m;
}

Eigen::MatrixXcd float_matrix(const HermitianPoly& r, const std::vector<MultiIndex>& basis) {
  std::map<MultiIndex, Eigen::Index> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<Eigen::Index>(i));
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, v] : r.entries()) {
    const auto ia = index.find(key.first);
    const auto ib = index.find(key.second);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorCode::InvalidArgument, "entry outside the given basis");
    }
    m(ia->second, ib->second) = to_complex(v);
  }
  return m;
}

DecomposedForm lambda_scale(const DecomposedForm& form, const Rational& lambda) {
  if (lambda.sign() < 0 || lambda > Rational(1)) {
    throw Error(ErrorCode::LambdaOutOfRange, "lambda must lie in [0, 1], got " + lambda.str());
  }
  DecomposedForm out = form;
  if (lambda.is_zero()) {
    out.minus_rows.resize(0, static_cast<Eigen::Index>(form.basis.size()));
  } else {
    out.minus_rows *= std::sqrt(lambda.to_double());
  }
  if (form.origin) {
    if (form.unmixed) {
      auto dec = holomorphic_decomposition(*form.origin);
      for (auto& s : dec.minus_scale) s *= lambda;
      out.origin = reconstruct(dec, form.nvars);
    } else {
      out.origin.reset();
    }
  }
  return out;
}

HyperbolicStep hyperbolic_eliminate(cd a1, cd b1) {
  if (!(std::abs(a1) > std::abs(b1))) {
    throw Error(ErrorCode::PivotDominanceViolated, "hyperbolic step needs |a1| > |b1|");
  }
  HyperbolicStep step;
  const cd rho = b1 / a1;
  const double t22 = 1.0 / std::sqrt(1.0 - std::norm(rho));
  step.t(0, 0) = t22;
  step.t(0, 1) = -t22 * std::conj(rho);
  step.t(1, 0) = -t22 * rho;
  step.t(1, 1) = t22;
  return step;
}

double j_identity_error(const Eigen::Matrix2cd& t) {
  Eigen::Matrix2cd j = Eigen::Matrix2cd::Zero();
  j(0, 0) = 1.0;
  j(1, 1) = -1.0;
  const Eigen::Matrix2cd diff = t.adjoint() * j * t - j;
  return diff.cwiseAbs().maxCoeff() / std::max(1.0, t.squaredNorm());
}

long leading_column(const Eigen::RowVectorXcd& row, double zero_tol) {
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (std::abs(row(j)) > zero_tol) return static_cast<long>(j);
  }
  return -1;
}

bool is_partial_row_echelon(const DecomposedForm& form, double zero_tol) {
  std::vector<long> seen;
  for (const auto* m : {&form.plus_rows, &form.minus_rows}) {
    for (Eigen::Index i = 0; i < m->rows(); ++i) {
      const long lead = leading_column(m->row(i), zero_tol);
      if (lead < 0) return false;
      seen.push_back(lead);
    }
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

SignaturePair float_signature(const Eigen::MatrixXcd& m, double tol) {
  SignaturePair sig;
  if (m.rows() == 0) return sig;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol * scale) ++sig.n_plus;
    if (ev(i) < -tol * scale) ++sig.n_minus;
  }
  return sig;
}

double psi1_margin(const Eigen::MatrixXcd& m, const std::vector<MultiIndex>& basis) {
  if (basis.empty()) return 0.0;
  const std::size_t n = basis.front().size();
  std::map<MultiIndex, Eigen::Index> index;
  for (const auto& alpha : basis) {
    for (std::size_t k = 0; k < n; ++k) index.emplace(alpha + MultiIndex::unit(n, k), 0);
  }
  Eigen::Index next = 0;
  for (auto& [alpha, i] : index) i = next++;
  Eigen::MatrixXcd prod = Eigen::MatrixXcd::Zero(next, next);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const cd v = m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (v == cd(0.0)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const auto e = MultiIndex::unit(n, k);
        prod(index.at(basis[a] + e), index.at(basis[b] + e)) += v;
      }
    }
  }
  const double scale = max_abs(prod);
  if (scale == 0.0) return 0.0;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(prod, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() / scale;
}

ReductionResult partial_row_echelon(const DecomposedForm& input, const Tolerances& tol) {
  if (!input.origin) throw Error(ErrorCode::InvalidArgument, "reduction needs the exact origin form");
  if (!in_psi_hermitian(*input.origin, 1).member) {
    throw Error(ErrorCode::NotInPsiD, "origin form is not in Psi_1");
  }
  ReductionResult res;
  res.exact_signature = inertia(coefficient_matrix(*input.origin)).signature();

  DecomposedForm form = input;
  auto& a = form.plus_rows;
  auto& b = form.minus_rows;
  echelonize(a, 0, 0);
  echelonize(b, 0, 0);
  check_pivots(a, tol.pivot, "A");
  check_pivots(b, tol.pivot, "B");
  res.target = form_matrix(input);

  const Eigen::Index cols = static_cast<Eigen::Index>(form.basis.size());
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto la = leads(a);
    const auto lb = leads(b);
    const auto ia = std::find(la.begin(), la.end(), c);
    const auto ib = std::find(lb.begin(), lb.end(), c);
    if (ia == la.end() || ib == lb.end()) continue;
    const Eigen::Index i = ia - la.begin();
    const Eigen::Index k = ib - lb.begin();

    std::optional<Rational> lambda;
    if (std::abs(a(i, c)) <= std::abs(b(k, c))) {
      const double ratio2 = std::norm(a(i, c) / b(k, c));
      lambda = choose_lambda(ratio2);
      if (!lambda) {
        throw Error(ErrorCode::NumericalBreakdown, "no usable rational lambda for column " + std::to_string(c));
      }
      form = lambda_scale(form, *lambda);
      res.lambdas.push_back(*lambda);
      res.target = form_matrix(form);
    }

    HyperbolicStep step = hyperbolic_eliminate(a(i, c), b(k, c));
    step.pivot_col = static_cast<std::size_t>(c);
    step.rows = {static_cast<std::size_t>(i), static_cast<std::size_t>(k)};
    step.lambda_used = lambda;
    if (j_identity_error(step.t) > tol.local) {
      throw Error(ErrorCode::NumericalBreakdown, "hyperbolic step lost J-orthogonality");
    }
    const Eigen::RowVectorXcd ra = a.row(i);
    const Eigen::RowVectorXcd rb = b.row(k);
    a.row(i) = step.t(0, 0) * ra + step.t(0, 1) * rb;
    b.row(k) = step.t(1, 0) * ra + step.t(1, 1) * rb;
    b(k, c) = 0.0;
    form.unmixed = false;
    echelonize(b, k, c + 1);
    check_pivots(a, tol.pivot, "A");
    check_pivots(b, tol.pivot, "B");
    res.steps.push_back(step);
  }

  const Eigen::MatrixXcd out = form_matrix(form);
  const double scale = std::max(max_abs(res.target), 1e-300);
  res.reconstruction_error = max_abs(out - res.target) / scale;
  check_pivots(a, tol.pivot, "A");
  check_pivots(b, tol.pivot, "B");
  if (!is_partial_row_echelon(form)) throw Error(ErrorCode::NumericalBreakdown, "output rows share a leading column");
  res.output_signature = form.signature();
  res.eigen_signature = float_signature(out, tol.global);
  res.psi1_margin = psi1_margin(out, form.basis);
  res.psi1_verified = res.psi1_margin >= -tol.global;
  res.form = std::move(form);
  return res;
}

}  // namespace psi
