#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psi/error.hpp"
#include "psi/multi_index.hpp"
#include "psi/rational.hpp"
#include "psi/real_poly.hpp"
#include "psi/signature.hpp"

namespace psi {

enum class Sign : std::uint8_t { Zero = 0, Pos = 1, Neg = 2 };

/// Sign assignment on every degree-D lattice point in n variables.
class SignPattern {
 public:
  SignPattern(int n, int D);  ///< all ZERO
  /// Signs of a homogeneous polynomial; the degree D must be given for p = 0.
  static SignPattern from_poly(const RealSparsePoly& p, std::optional<int> D = std::nullopt);

  int nvars() const { return n_; }
  int degree() const { return D_; }
  const std::map<MultiIndex, Sign>& signs() const { return signs_; }
  Sign sign(const MultiIndex& alpha) const;
  void set(const MultiIndex& alpha, Sign s);

  SignaturePair counts() const;
  /// Lattice points with a nonzero sign.
  std::vector<MultiIndex> support() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  int n_;
  int D_;
  std::map<MultiIndex, Sign> signs_;
};

struct FeasibilityResult {
  bool feasible = true;
  /// Product monomial whose contributors include a NEG but no POS.
  std::optional<MultiIndex> witness;
};

/// Covering condition: every degree-(D+d) monomial reached by a NEG point is
/// also reached by a POS point.
FeasibilityResult support_feasible(const SignPattern& pattern, int d);

/// NEG -> -1, POS -> 1 + (largest multinomial-weighted negative mass reaching
/// any product monomial). Throws Infeasible when the covering condition fails.
RealSparsePoly realize_magnitudes(const SignPattern& pattern, int d);

enum class Strategy { Exhaustive, Greedy, Local };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct SearchOptions {
  Strategy strategy = Strategy::Local;
  long budget = 200000;
  std::uint64_t seed = 0;
  /// Lattice points allowed to be nonzero; nullopt means the whole lattice.
  std::optional<std::vector<MultiIndex>> support;
  bool allow_zero = true;  ///< ZERO as a choice on support points
  int restarts = 8;        ///< LOCAL only
};

inline constexpr std::size_t kExhaustiveMaxPoints = 24;

struct SearchResult {
  SignPattern best;
  Rational ratio;
  long evaluations = 0;
  Strategy strategy = Strategy::Local;
  RealSparsePoly realized;
  bool complete = false;          ///< EXHAUSTIVE finished the enumeration
  Rational ceiling;               ///< proven upper bound for (n, d)
  std::optional<Rational> knight_reference;  ///< floor((d+2)^2/3) - 1 for n = 3
};

/// Thrown by EXHAUSTIVE when the budget runs out before the space is covered.
class BudgetExhaustedError : public Error {
 public:
  explicit BudgetExhaustedError(SearchResult best)
      : Error(ErrorCode::BudgetExhausted, "search budget exhausted"), best_(std::move(best)) {}
  const SearchResult& best() const { return best_; }

 private:
  SearchResult best_;
};

/// Maximizes N-/N+ over feasible patterns at (n, D, d).
SearchResult search_max_ratio(int n, int D, int d, const SearchOptions& options);

/// The sign pattern of p_D, the seed of LOCAL restarts.
SignPattern pD_pattern(int n, int D);

}  // namespace psi
