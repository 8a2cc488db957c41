#pragma once

#include <optional>

#include "psi/rational.hpp"

namespace psi {

/// Counts (N+, N-) of positive and negative squares.
struct SignaturePair {
  long n_plus = 0;
  long n_minus = 0;

  long rank() const { return n_plus + n_minus; }
  /// N- / N+, undefined when N+ = 0.
  std::optional<Rational> ratio() const {
    if (n_plus == 0) return std::nullopt;
    return Rational(n_minus, n_plus);
  }

  friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

}  // namespace psi
