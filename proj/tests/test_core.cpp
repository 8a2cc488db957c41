#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "psi/error.hpp"
#include "psi/multi_index.hpp"
#include "psi/rational.hpp"
#include "psi/real_poly.hpp"

using namespace psi;

TEST_CASE("rational parsing is canonical") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-6/-4").str() == "3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("-12").str() == "-12");
  CHECK(Rational::parse("3/-9") == Rational(-1, 3));
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1 /2"}) {
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational ordering and arithmetic") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK((Rational(-5, 7)).abs() == Rational(5, 7));
  CHECK(Rational(7, 2).sign() == 1);
}

TEST_CASE("rational approximation") {
  CHECK(rational_approximation(0.5, 10) == Rational(1, 2));
  CHECK(rational_approximation(M_PI, 1000) == Rational(355, 113));
  CHECK(rational_approximation(0.0, 1000000).is_zero());
  const Rational third = rational_approximation(1.0 / 3.0, 1000000);
  CHECK(third == Rational(1, 3));
}

TEST_CASE("multinomial and binomial against factorials") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        const long expect = oracle::factorial(a + b + c) / (oracle::factorial(a) * oracle::factorial(b) * oracle::factorial(c));
        CHECK(multinomial({a, b, c}) == expect);
      }
    }
  }
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("multi-index basics") {
  MultiIndex a{2, 1, 3};
  CHECK(a.degree() == 6);
  CHECK(a.str() == "(2,1,3)");
  CHECK(a + MultiIndex{1, 0, 0} == MultiIndex{3, 1, 3});
  CHECK(a.dominates(MultiIndex{2, 0, 3}));
  CHECK_FALSE(a.dominates(MultiIndex{3, 0, 0}));
  CHECK(MultiIndex{1, 0, 0} > MultiIndex{0, 5, 5});
  CHECK_THROWS_AS(MultiIndex(std::vector<int>{1, -1}), Error);
  CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), Error);
}

TEST_CASE("monomials of a degree come in descending lex order") {
  const auto m = monomials_of_degree(3, 2);
  const std::vector<MultiIndex> expect{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(m == expect);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int deg = 0; deg <= 7; ++deg) {
      const auto all = monomials_of_degree(n, deg);
      CHECK(all.size() == count_monomials(n, deg));
      CHECK(all.size() == binomial(static_cast<long>(deg + n - 1), static_cast<long>(n - 1)).get_ui());
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
    }
  }
}

TEST_CASE("sparse polynomial never stores zeros") {
  RealSparsePoly p(2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 0}, -3);
  CHECK(p.is_zero());
  CHECK_FALSE(p.degree().has_value());
  p.add_term({2, 1}, Rational(1, 2));
  p.add_term({0, 3}, -1);
  CHECK(p.size() == 2);
  CHECK(p.degree() == 3);
  CHECK(p.is_homogeneous());
  p.add_term({0, 0}, 1);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.coeff({5, 5}).is_zero());
  CHECK_THROWS_AS(p.add_term({1, 1, 1}, 1), Error);
}

TEST_CASE("(x1 - x2)(x1 + x2)^3 by hand") {
  const RealSparsePoly p(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const RealSparsePoly q = multiply_by_simplex_power(p, 3);
  const RealSparsePoly expect(2, {{{4, 0}, 1}, {{3, 1}, 2}, {{1, 3}, -2}, {{0, 4}, -1}});
  CHECK(q == expect);
}

TEST_CASE("simplex power paths agree with schoolbook expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const int deg = 1 + trial % 4;
    const int d = trial % 5;
    const RealSparsePoly p = oracle::random_homogeneous(rng, n, deg, 5);
    const RealSparsePoly a = multiply_by_simplex_power(p, d);
    const RealSparsePoly b = multiply_by_simplex_power_direct(p, d);
    CHECK(a == b);
    CHECK(oracle::from(a) == oracle::times_simplex(oracle::from(p), n, d));
  }
}

TEST_CASE("simplex multiplication is linear") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RealSparsePoly p = oracle::random_homogeneous(rng, 3, 3, 4);
    const RealSparsePoly q = oracle::random_homogeneous(rng, 3, 3, 4);
    const Rational c(trial - 7, 3);
    CHECK(multiply_by_simplex_power(p + q.scaled(c), 2) ==
          multiply_by_simplex_power(p, 2) + multiply_by_simplex_power(q, 2).scaled(c));
  }
}

TEST_CASE("diagonal multiplier") {
  const RealSparsePoly p(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const RealSparsePoly q = multiply_by_diagonal_multiplier(p, {{1, 0}, {0, 1}});
  CHECK(q == multiply_by_simplex_power(p, 1));
  CHECK_THROWS_AS(multiply_by_diagonal_multiplier(p, {{1, 0}, {1, 0}}), Error);
  try {
    multiply_by_diagonal_multiplier(p, {{1, 0}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateMultiplierTerm);
  }
}

TEST_CASE("homogeneous components, sign counts, (de)homogenization") {
  const RealSparsePoly p(2, {{{2, 0}, 1}, {{1, 0}, -2}, {{0, 0}, 3}, {{0, 2}, -1}});
  const auto parts = homogeneous_components(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == RealSparsePoly(2, {{{0, 0}, 3}}));
  CHECK(parts[2].size() == 2);
  const SignaturePair s = sign_counts(p);
  CHECK(s.n_plus == 2);
  CHECK(s.n_minus == 2);
  const RealSparsePoly h = homogenize(p, 2);
  CHECK(h.nvars() == 3);
  CHECK(h.is_homogeneous());
  CHECK(h.coeff({1, 0, 1}) == Rational(-2));
  CHECK(dehomogenize(h) == p);
  CHECK_THROWS_AS(homogenize(p, 1), Error);
}
