#pragma once

// Seeded random members of Psi_1 for the reduction suites: a realized
// feasible diagonal pattern plus a small Hermitian perturbation, each one
// re-checked exactly before use.

#include <random>

#include "psi/hermitian.hpp"
#include "psi/pattern_search.hpp"
#include "psi/psi.hpp"

namespace testing_support {

inline psi::HermitianPoly random_psi1_member(std::mt19937_64& rng) {
  using namespace psi;
  for (;;) {
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    const int D = n == 2 ? std::uniform_int_distribution<int>(2, 9)(rng) : std::uniform_int_distribution<int>(2, 3)(rng);
    SignPattern pat(n, D);
    std::uniform_int_distribution<int> roll(0, 9);
    for (const auto& [alpha, s] : pat.signs()) {
      const int r = roll(rng);
      pat.set(alpha, r < 5 ? Sign::Pos : (r < 9 ? Sign::Neg : Sign::Zero));
    }
    for (;;) {
      const auto f = support_feasible(pat, 1);
      if (f.feasible) break;
      for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        const MultiIndex e = MultiIndex::unit(n, k);
        if (f.witness->dominates(e) && pat.sign(*f.witness - e) == Sign::Neg) {
          pat.set(*f.witness - e, Sign::Pos);
          break;
        }
      }
    }
    HermitianPoly r = real_to_diagonal(realize_magnitudes(pat, 1));
    const auto support = pat.support();
    if (support.size() < 2) continue;
    const long den = 8L * static_cast<long>(support.size()) * n;
    std::uniform_int_distribution<int> small(-2, 2);
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = i + 1; j < support.size(); ++j) {
        if (roll(rng) < 6) continue;
        r.add_entry(support[i], support[j], GaussianRational(Rational(small(rng), den), Rational(small(rng), den)));
      }
    }
    if (in_psi_hermitian(r, 1).member) return r;
  }
}

}  // namespace testing_support
