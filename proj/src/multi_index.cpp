#include "psi/multi_index.hpp"

#include <numeric>

#include "psi/error.hpp"
#include "psi/rational.hpp"

namespace psi {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (e_.empty()) throw Error(ErrorCode::InvalidArgument, "multi-index needs n >= 1 entries");
  for (int v : e_) {
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in multi-index");
  }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  std::vector<int> e(n, 0);
  e.at(k) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw Error(ErrorCode::InvalidArgument, "multi-index length mismatch");
  std::vector<int> r(e_);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += o.e_[k];
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (o.size() != size()) throw Error(ErrorCode::InvalidArgument, "multi-index length mismatch");
  std::vector<int> r(e_);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= o.e_[k];
  return MultiIndex(std::move(r));
}

bool MultiIndex::dominates(const MultiIndex& o) const {
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] < o.e_[k]) return false;
  }
  return true;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

namespace {

void fill_monomials(std::vector<int>& cur, std::size_t pos, int remaining,
                    std::vector<MultiIndex>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    fill_monomials(cur, pos + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t n, int degree) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<MultiIndex> out;
  if (degree < 0) return out;
  out.reserve(count_monomials(n, degree));
  std::vector<int> cur(n, 0);
  fill_monomials(cur, 0, degree, out);
  return out;
}

std::size_t count_monomials(std::size_t n, int degree) {
  if (degree < 0) return 0;
  return binomial(static_cast<long>(degree + n - 1), static_cast<long>(n - 1)).get_ui();
}

}  // namespace psi
