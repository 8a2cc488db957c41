#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the library's arithmetic beyond reading its data structures.

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "psi/hermitian.hpp"
#include "psi/real_poly.hpp"

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, mpq_class>;

inline Poly from(const psi::RealSparsePoly& p) {
  Poly out;
  for (const auto& [a, c] : p.terms()) out[a.vec()] = c.raw();
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline Poly linear_form(std::size_t n) {
  Poly l;
  for (std::size_t k = 0; k < n; ++k) {
    Exps e(n, 0);
    e[k] = 1;
    l[e] = 1;
  }
  return l;
}

// p * (x1 + ... + xn)^d by repeated schoolbook multiplication.
inline Poly times_simplex(Poly p, std::size_t n, int d) {
  const Poly l = linear_form(n);
  for (int i = 0; i < d; ++i) p = multiply(p, l);
  return p;
}

inline bool all_nonnegative(const Poly& p) {
  for (const auto& [e, c] : p) {
    if (c < 0) return false;
  }
  return true;
}

inline long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Random polynomial with small integer coefficients, homogeneous of degree deg.
inline psi::RealSparsePoly random_homogeneous(std::mt19937_64& rng, std::size_t n, int deg, int terms) {
  std::uniform_int_distribution<int> part(0, deg);
  std::uniform_int_distribution<int> coef(-5, 5);
  psi::RealSparsePoly p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n, 0);
    int left = deg;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::uniform_int_distribution<int> take(0, left);
      e[k] = take(rng);
      left -= e[k];
    }
    e[n - 1] = left;
    p.add_term(psi::MultiIndex(e), coef(rng));
  }
  return p;
}

// Dense Hermitian matrix with small Gaussian-integer entries.
inline std::vector<std::vector<psi::GaussianRational>> random_hermitian_rows(std::mt19937_64& rng, std::size_t dim,
                                                                            int range = 3) {
  std::uniform_int_distribution<int> v(-range, range);
  std::vector<std::vector<psi::GaussianRational>> rows(dim, std::vector<psi::GaussianRational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    rows[i][i] = psi::GaussianRational(v(rng));
    for (std::size_t j = i + 1; j < dim; ++j) {
      rows[i][j] = psi::GaussianRational(v(rng), v(rng));
      rows[j][i] = rows[i][j].conj();
    }
  }
  return rows;
}

}  // namespace oracle
