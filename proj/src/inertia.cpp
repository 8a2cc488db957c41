#include "psi/inertia.hpp"

#include <numeric>

#include "psi/error.hpp"

namespace psi {

using Row = std::vector<GaussianRational>;
using Dense = std::vector<Row>;

namespace {

Dense identity(std::size_t n) {
  Dense d(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = GaussianRational(1);
  return d;
}

}  // namespace

Inertia CongruenceFactorization::inertia() const {
  Inertia in;
  for (const auto& v : diag) {
    if (v.sign() > 0) ++in.n_plus;
    else if (v.sign() < 0) ++in.n_minus;
    else ++in.n_zero;
  }
  return in;
}

CongruenceFactorization congruence_factorization(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  Dense w(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = m(i, j);
  }
  Dense t = identity(n);
  Dense inv = identity(n);
  std::vector<bool> done(n, false);
  std::vector<std::size_t> order;
  CongruenceFactorization out;

  for (;;) {
    // Largest |diagonal| among the remaining indices.
    std::size_t pivot = n;
    Rational best;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || w[i][i].re.is_zero()) continue;
      Rational a = w[i][i].re.abs();
      if (pivot == n || a > best) {
        pivot = i;
        best = std::move(a);
      }
    }

    if (pivot == n) {
      std::size_t fi = n, fj = n;
      for (std::size_t i = 0; i < n && fi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!done[j] && !w[i][j].is_zero()) {
            fi = i;
            fj = j;
            break;
          }
        }
      }
      if (fi == n) break;  // remaining block is zero
      const GaussianRational c = w[fi][fj].re.is_zero() ? w[fi][fj].conj() : GaussianRational(1);
      const GaussianRational cc = c.conj();
      for (std::size_t r = 0; r < n; ++r) w[r][fi] += c * w[r][fj];
      for (std::size_t col = 0; col < n; ++col) w[fi][col] += cc * w[fj][col];
      for (std::size_t r = 0; r < n; ++r) t[r][fi] += c * t[r][fj];
      for (std::size_t col = 0; col < n; ++col) inv[fj][col] -= c * inv[fi][col];
      out.pivot_log.push_back({PivotRecord::Kind::Combine, fi, fj, c});
      continue;
    }

    const Rational p = w[pivot][pivot].re;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (!done[j] && j != pivot) rest.push_back(j);
    }
    // m_j = W_kj / p, taken before the Schur update.
    std::vector<GaussianRational> mult(n);
    for (std::size_t j : rest) {
      mult[j] = w[pivot][j];
      mult[j].re /= p;
      mult[j].im /= p;
    }
    for (std::size_t j : rest) {
      if (w[j][pivot].is_zero()) continue;
      for (std::size_t l : rest) {
        if (mult[l].is_zero()) continue;
        w[j][l] -= w[j][pivot] * mult[l];
      }
    }
    for (std::size_t j : rest) {
      w[pivot][j] = GaussianRational();
      w[j][pivot] = GaussianRational();
    }
    for (std::size_t j : rest) {
      if (mult[j].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (!t[r][pivot].is_zero()) t[r][j] -= mult[j] * t[r][pivot];
      }
      for (std::size_t col = 0; col < n; ++col) {
        if (!inv[j][col].is_zero()) inv[pivot][col] += mult[j] * inv[j][col];
      }
    }
    done[pivot] = true;
    order.push_back(pivot);
    out.pivot_log.push_back({PivotRecord::Kind::Diagonal, pivot, pivot, GaussianRational()});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!done[i]) order.push_back(i);
  }
  out.diag.reserve(n);
  out.transform.assign(n, Row(n));
  out.inverse.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.diag.push_back(done[src] ? w[src][src].re : Rational(0));
    for (std::size_t r = 0; r < n; ++r) out.transform[r][k] = t[r][src];
    out.inverse.push_back(std::move(inv[src]));
  }
  return out;
}

Inertia inertia(const HermitianMatrix& m) { return congruence_factorization(m).inertia(); }

Rational quadratic_form(const HermitianMatrix& m, const std::vector<GaussianRational>& v) {
  if (v.size() != m.dim()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  GaussianRational acc;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (v[i].is_zero()) continue;
    GaussianRational rowsum;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!v[j].is_zero() && !m(i, j).is_zero()) rowsum += m(i, j) * v[j];
    }
    acc += v[i].conj() * rowsum;
  }
  return acc.re;
}

PsdResult is_positive_semidefinite(const HermitianMatrix& m) {
  auto f = congruence_factorization(m);
  PsdResult res;
  for (std::size_t k = 0; k < f.diag.size(); ++k) {
    if (f.diag[k].sign() < 0) {
      res.psd = false;
      res.witness.reserve(m.dim());
      for (std::size_t r = 0; r < m.dim(); ++r) res.witness.push_back(f.transform[r][k]);
      res.witness_value = f.diag[k];
      return res;
    }
  }
  res.psd = true;
  return res;
}

HolomorphicDecomposition holomorphic_decomposition(const HermitianPoly& r) {
  HolomorphicDecomposition dec;
  if (r.is_zero()) return dec;
  const HermitianMatrix m = coefficient_matrix(r);
  const auto f = congruence_factorization(m);
  dec.basis = m.basis();
  // M = L* D L, so f_k has coefficient vector conj(L_k).
  for (std::size_t k = 0; k < f.diag.size(); ++k) {
    if (f.diag[k].is_zero()) continue;
    Row row;
    row.reserve(m.dim());
    for (const auto& v : f.inverse[k]) row.push_back(v.conj());
    if (f.diag[k].sign() > 0) {
      dec.plus_rows.push_back(std::move(row));
      dec.plus_scale.push_back(f.diag[k]);
    } else {
      dec.minus_rows.push_back(std::move(row));
      dec.minus_scale.push_back(f.diag[k].abs());
    }
  }
  return dec;
}

HermitianPoly squared_norm_form(std::size_t n, const std::vector<MultiIndex>& basis,
                                const std::vector<Row>& rows, const std::vector<Rational>& scales) {
  HermitianPoly out(n);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& v = rows[k];
    for (std::size_t a = 0; a < basis.size(); ++a) {
      if (v[a].is_zero()) continue;
      for (std::size_t b = a; b < basis.size(); ++b) {
        if (v[b].is_zero()) continue;
        GaussianRational e = v[a] * v[b].conj();
        e.re *= scales[k];
        e.im *= scales[k];
        out.add_entry(basis[a], basis[b], e);
      }
    }
  }
  return out;
}

HermitianPoly reconstruct(const HolomorphicDecomposition& dec, std::size_t n) {
  HermitianPoly r = squared_norm_form(n, dec.basis, dec.plus_rows, dec.plus_scale);
  r -= squared_norm_form(n, dec.basis, dec.minus_rows, dec.minus_scale);
  return r;
}

}  // namespace psi
