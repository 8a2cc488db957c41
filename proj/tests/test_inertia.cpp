#include <doctest.h>

#include <Eigen/Dense>
#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "psi/error.hpp"
#include "psi/hermitian.hpp"
#include "psi/inertia.hpp"

using namespace psi;

namespace {

using Rows = std::vector<std::vector<GaussianRational>>;

Rows multiply(const Rows& a, const Rows& b) {
  const std::size_t n = a.size();
  Rows c(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Rows adjoint(const Rows& a) {
  Rows c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = a[j][i].conj();
  return c;
}

// Counts from floating eigenvalues; only used on small integer matrices.
Inertia eigen_inertia(const Rows& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = {rows[i][j].re.to_double(), rows[i][j].im.to_double()};
  Inertia out;
  if (n == 0) return out;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  for (double ev : es.eigenvalues()) {
    if (ev > 1e-8) ++out.n_plus;
    else if (ev < -1e-8) ++out.n_minus;
    else ++out.n_zero;
  }
  return out;
}

// Unit upper triangular times unit lower triangular: determinant 1.
Rows random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-2, 2);
  Rows u(n, std::vector<GaussianRational>(n)), l = u;
  for (std::size_t i = 0; i < n; ++i) {
    u[i][i] = 1;
    l[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      u[i][j] = GaussianRational(Rational(v(rng), 2), Rational(v(rng)));
      l[j][i] = GaussianRational(Rational(v(rng)), Rational(v(rng), 3));
    }
  }
  return multiply(u, l);
}

}  // namespace

TEST_CASE("2x2 inertia matches the characteristic polynomial") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> v(-3, 3);
  for (int t = 0; t < 400; ++t) {
    const Rational a(v(rng)), c(v(rng));
    const GaussianRational b(Rational(v(rng)), Rational(t % 3 == 0 ? 0 : v(rng)));
    const auto m = HermitianMatrix::from_rows({{a, b}, {b.conj(), c}});
    const Rational det = a * c - b.norm2();
    const Rational tr = a + c;
    Inertia expect;
    if (det.sign() > 0) {
      expect = tr.sign() > 0 ? Inertia{2, 0, 0} : Inertia{0, 2, 0};
    } else if (det.sign() < 0) {
      expect = {1, 1, 0};
    } else {
      expect = tr.sign() > 0 ? Inertia{1, 0, 1} : (tr.sign() < 0 ? Inertia{0, 1, 1} : Inertia{0, 0, 2});
    }
    CHECK(inertia(m) == expect);
  }
}

TEST_CASE("zero-diagonal blocks") {
  CHECK(inertia(HermitianMatrix::from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  const GaussianRational i(0, 1);
  CHECK(inertia(HermitianMatrix::from_rows({{0, i}, {i.conj(), 0}})) == Inertia{1, 1, 0});
  CHECK(inertia(HermitianMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})) == Inertia{1, 1, 1});
  CHECK(inertia(HermitianMatrix::from_rows({})) == Inertia{0, 0, 0});
}

TEST_CASE("factorization identities hold exactly") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 6;
    auto rows = oracle::random_hermitian_rows(rng, n);
    if (t % 4 == 0) {
      for (std::size_t k = 0; k < n; ++k) rows[k][k] = 0;
    }
    const auto m = HermitianMatrix::from_rows(rows);
    const auto f = congruence_factorization(m);
    const Rows d = multiply(multiply(adjoint(f.transform), rows), f.transform);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(d[i][j] == (i == j ? GaussianRational(f.diag[i]) : GaussianRational()));
    const Rows id = multiply(f.transform, f.inverse);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(id[i][j] == GaussianRational(i == j ? 1 : 0));
    CHECK(f.inertia() == eigen_inertia(rows));
  }
}

TEST_CASE("Sylvester invariance under random rational congruence") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto rows = oracle::random_hermitian_rows(rng, n);
    const Rows tr = random_invertible(rng, n);
    const Rows moved = multiply(multiply(adjoint(tr), rows), tr);
    CHECK(inertia(HermitianMatrix::from_rows(rows)) == inertia(HermitianMatrix::from_rows(moved)));
  }
}

TEST_CASE("block diagonal inertia adds up") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    const auto a = oracle::random_hermitian_rows(rng, 1 + t % 4);
    const auto b = oracle::random_hermitian_rows(rng, 1 + t % 3);
    Rows blk(a.size() + b.size(), std::vector<GaussianRational>(a.size() + b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) blk[i][j] = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) blk[a.size() + i][a.size() + j] = b[i][j];
    const Inertia ia = inertia(HermitianMatrix::from_rows(a));
    const Inertia ib = inertia(HermitianMatrix::from_rows(b));
    CHECK(inertia(HermitianMatrix::from_rows(blk)) ==
          Inertia{ia.n_plus + ib.n_plus, ia.n_minus + ib.n_minus, ia.n_zero + ib.n_zero});
  }
}

TEST_CASE("PSD test and its witness") {
  CHECK(is_positive_semidefinite(HermitianMatrix::from_rows({{1, -1}, {-1, 1}})).psd);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto rows = oracle::random_hermitian_rows(rng, 1 + t % 5);
    const auto m = HermitianMatrix::from_rows(rows);
    const PsdResult r = is_positive_semidefinite(m);
    CHECK(r.psd == (eigen_inertia(rows).n_minus == 0));
    if (!r.psd) {
      CHECK(r.witness_value.sign() < 0);
      CHECK(quadratic_form(m, r.witness) == r.witness_value);
    }
  }
}

TEST_CASE("Hermitian polynomial input validation") {
  const MultiIndex a{1, 0}, b{0, 1};
  const auto r = HermitianPoly::from_entries(2, {{a, b, GaussianRational(Rational(1, 2), -1)}});
  CHECK(r.entry(b, a) == GaussianRational(Rational(1, 2), 1));
  CHECK_THROWS_AS(HermitianPoly::from_entries(2, {{a, a, GaussianRational(1, 1)}}), Error);
  CHECK_THROWS_AS(HermitianPoly::from_entries(2, {{a, b, GaussianRational(1, 1)}, {b, a, GaussianRational(1, 1)}}), Error);
  CHECK_NOTHROW(HermitianPoly::from_entries(2, {{a, b, GaussianRational(1, 1)}, {b, a, GaussianRational(1, -1)}}));
  CHECK_THROWS_AS(HermitianPoly::from_entries(2, {{a, b, 1}, {a, b, 1}}), Error);
  try {
    HermitianPoly::from_entries(2, {{a, a, GaussianRational(0, 1)}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(HermitianMatrix::from_rows({{1, 2}, {3, 1}}), Error);
}

TEST_CASE("coefficient matrix round trip and the diagonal bridge") {
  const MultiIndex a{1, 0}, b{0, 1};
  const auto r = HermitianPoly::from_entries(2, {{a, a, 2}, {a, b, GaussianRational(1, 3)}, {b, b, -1}});
  const auto m = coefficient_matrix(r);
  CHECK(m.basis() == std::vector<MultiIndex>{a, b});
  CHECK(m(0, 1) == GaussianRational(1, 3));
  CHECK(to_hermitian_poly(m) == r);
  CHECK_THROWS_AS(diagonal_real_bridge(r), Error);
  const RealSparsePoly p(2, {{{2, 0}, 1}, {{1, 1}, -3}});
  CHECK(diagonal_real_bridge(real_to_diagonal(p)) == p);
}

TEST_CASE("holomorphic decomposition rebuilds the form") {
  std::mt19937_64 rng(37);
  const std::vector<MultiIndex> basis{{2, 0}, {1, 1}, {0, 2}};
  for (int t = 0; t < 25; ++t) {
    const auto rows = oracle::random_hermitian_rows(rng, 3);
    HermitianPoly r(2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j)
        if (!rows[i][j].is_zero()) r.add_entry(basis[i], basis[j], rows[i][j]);
    const auto dec = holomorphic_decomposition(r);
    CHECK(reconstruct(dec, 2) == r);
    CHECK(dec.signature() == inertia(coefficient_matrix(r)).signature());
  }
}

TEST_CASE("dimension cap honours PSI_MAX_DIM downward only") {
  CHECK(max_matrix_dim() == 2048);
  setenv("PSI_MAX_DIM", "3", 1);
  CHECK(max_matrix_dim() == 3);
  CHECK_THROWS_AS(HermitianMatrix(monomials_of_degree(3, 2)), Error);
  setenv("PSI_MAX_DIM", "100000", 1);
  CHECK(max_matrix_dim() == 2048);
  unsetenv("PSI_MAX_DIM");
}
