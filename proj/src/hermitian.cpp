#include "psi/hermitian.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "psi/error.hpp"

namespace psi {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational den = o.norm2();
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  *this *= o.conj();
  re /= den;
  im /= den;
  return *this;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + "i";
  return re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "i";
}

HermitianPoly::HermitianPoly(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "polynomial needs n >= 1 variables");
}

HermitianPoly HermitianPoly::from_entries(std::size_t n, const std::vector<RawEntry>& entries) {
  std::map<Key, GaussianRational> given;
  for (const auto& e : entries) {
    if (e.alpha.size() != n || e.beta.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "entry multi-index length differs from n");
    }
    if (!given.emplace(Key{e.alpha, e.beta}, e.value).second) {
      throw Error(ErrorCode::NotHermitian,
                  "entry " + e.alpha.str() + "," + e.beta.str() + " given twice");
    }
  }
  HermitianPoly r(n);
  for (const auto& [key, v] : given) {
    const auto& [alpha, beta] = key;
    if (alpha == beta) {
      if (!v.is_real()) {
        throw Error(ErrorCode::NotHermitian, "diagonal entry " + alpha.str() + " is not real");
      }
      r.add_raw(key, v);
      continue;
    }
    auto mirror = given.find(Key{beta, alpha});
    if (mirror != given.end() && mirror->second != v.conj()) {
      throw Error(ErrorCode::NotHermitian,
                  "entry " + alpha.str() + "," + beta.str() + " is not the conjugate of its mirror");
    }
    r.add_raw(key, v);
    if (mirror == given.end()) r.add_raw(Key{beta, alpha}, v.conj());
  }
  return r;
}

void HermitianPoly::add_raw(const Key& key, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

GaussianRational HermitianPoly::entry(const MultiIndex& alpha, const MultiIndex& beta) const {
  auto it = entries_.find(Key{alpha, beta});
  return it == entries_.end() ? GaussianRational() : it->second;
}

bool HermitianPoly::is_diagonal() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.first.first == kv.first.second; });
}

void HermitianPoly::add_entry(const MultiIndex& alpha, const MultiIndex& beta,
                              const GaussianRational& v) {
  if (alpha.size() != n_ || beta.size() != n_) {
    throw Error(ErrorCode::InvalidArgument, "entry multi-index length differs from n");
  }
  if (alpha == beta) {
    if (!v.is_real()) throw Error(ErrorCode::NotHermitian, "diagonal entry must be real");
    add_raw(Key{alpha, beta}, v);
    return;
  }
  add_raw(Key{alpha, beta}, v);
  add_raw(Key{beta, alpha}, v.conj());
}

std::vector<MultiIndex> HermitianPoly::basis() const {
  std::set<MultiIndex> s;
  for (const auto& [key, v] : entries_) {
    s.insert(key.first);
    s.insert(key.second);
  }
  return {s.rbegin(), s.rend()};
}

HermitianPoly& HermitianPoly::operator+=(const HermitianPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [key, v] : o.entries_) add_raw(key, v);
  return *this;
}

HermitianPoly& HermitianPoly::operator-=(const HermitianPoly& o) {
  if (o.n_ != n_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [key, v] : o.entries_) add_raw(key, -v);
  return *this;
}

HermitianPoly HermitianPoly::scaled(const Rational& c) const {
  HermitianPoly r(n_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : entries_) r.entries_.emplace(key, GaussianRational(v.re * c, v.im * c));
  return r;
}

std::size_t max_matrix_dim() {
  constexpr std::size_t kHardCap = 2048;
  if (const char* env = std::getenv("PSI_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && static_cast<std::size_t>(v) < kHardCap) {
      return static_cast<std::size_t>(v);
    }
  }
  return kHardCap;
}

void check_matrix_dim(std::size_t dim) {
  if (dim > max_matrix_dim()) {
    throw Error(ErrorCode::ExplicitLimit, "matrix dimension " + std::to_string(dim) +
                                              " exceeds cap " + std::to_string(max_matrix_dim()));
  }
}

HermitianMatrix::HermitianMatrix(std::vector<MultiIndex> basis) : basis_(std::move(basis)) {
  check_matrix_dim(basis_.size());
  std::set<MultiIndex> seen(basis_.begin(), basis_.end());
  if (seen.size() != basis_.size()) throw Error(ErrorCode::InvalidArgument, "duplicate basis element");
  a_.assign(basis_.size() * basis_.size(), GaussianRational());
}

HermitianMatrix::HermitianMatrix(std::vector<MultiIndex> basis, std::vector<GaussianRational> row_major)
    : HermitianMatrix(std::move(basis)) {
  const std::size_t n = dim();
  if (row_major.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix data size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (row_major[i * n + j] != row_major[j * n + i].conj()) {
        throw Error(ErrorCode::NotHermitian,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks symmetry");
      }
    }
  }
  a_ = std::move(row_major);
}

HermitianMatrix HermitianMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  std::vector<MultiIndex> basis;
  std::vector<GaussianRational> data;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    basis.push_back(MultiIndex{static_cast<int>(i)});
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return HermitianMatrix(std::move(basis), std::move(data));
}

void HermitianMatrix::set(std::size_t i, std::size_t j, const GaussianRational& v) {
  if (i == j && !v.is_real()) throw Error(ErrorCode::NotHermitian, "diagonal entry must be real");
  a_[i * dim() + j] = v;
  a_[j * dim() + i] = v.conj();
}

void HermitianMatrix::add(std::size_t i, std::size_t j, const GaussianRational& v) {
  if (i == j) {
    if (!v.is_real()) throw Error(ErrorCode::NotHermitian, "diagonal entry must be real");
    a_[i * dim() + i] += v;
    return;
  }
  a_[i * dim() + j] += v;
  a_[j * dim() + i] += v.conj();
}

HermitianMatrix coefficient_matrix(const HermitianPoly& r) {
  auto basis = r.basis();
  std::map<MultiIndex, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
  HermitianMatrix m(std::move(basis));
  for (const auto& [key, v] : r.entries()) {
    const std::size_t i = pos.at(key.first);
    const std::size_t j = pos.at(key.second);
    if (i <= j) m.set(i, j, v);
  }
  return m;
}

HermitianPoly to_hermitian_poly(const HermitianMatrix& m) {
  if (m.dim() == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix has no variable count");
  HermitianPoly r(m.basis().front().size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      if (!m(i, j).is_zero()) r.add_entry(m.basis()[i], m.basis()[j], m(i, j));
    }
  }
  return r;
}

RealSparsePoly diagonal_real_bridge(const HermitianPoly& r) {
  RealSparsePoly p(r.nvars());
  for (const auto& [key, v] : r.entries()) {
    if (key.first != key.second) {
      throw Error(ErrorCode::NotDiagonal,
                  "off-diagonal entry at " + key.first.str() + "," + key.second.str());
    }
    p.add_term(key.first, v.re);
  }
  return p;
}

HermitianPoly real_to_diagonal(const RealSparsePoly& p) {
  HermitianPoly r(p.nvars());
  for (const auto& [alpha, c] : p.terms()) r.add_entry(alpha, alpha, c);
  return r;
}

}  // namespace psi
