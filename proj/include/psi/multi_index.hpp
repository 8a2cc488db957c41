#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace psi {

/// Exponent vector of a monomial x^alpha in n variables.
///
/// The total order used everywhere in the library is lexicographic with x1
/// highest: alpha > beta when the first differing exponent is larger in alpha.
/// The order is multiplicative (alpha < beta implies alpha+gamma < beta+gamma).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(std::size_t n, std::size_t k);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t k) const { return e_[k]; }
  int degree() const;
  std::span<const int> exponents() const { return e_; }
  const std::vector<int>& vec() const { return e_; }

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; the caller guarantees o <= *this componentwise.
  MultiIndex operator-(const MultiIndex& o) const;
  bool dominates(const MultiIndex& o) const;  ///< componentwise >=

  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<int> e_;
};

/// All multi-indices of n variables with total degree exactly `degree`,
/// in descending lex order (x1^degree first).
std::vector<MultiIndex> monomials_of_degree(std::size_t n, int degree);

std::size_t count_monomials(std::size_t n, int degree);

}  // namespace psi
