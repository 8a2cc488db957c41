#include "psi/pattern_search.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "psi/bounds.hpp"
#include "psi/generators.hpp"

namespace psi {

SignPattern::SignPattern(int n, int D) : n_(n), D_(D) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pattern needs n >= 1");
  if (D < 0) throw Error(ErrorCode::InvalidArgument, "pattern needs D >= 0");
  for (auto& alpha : monomials_of_degree(n, D)) signs_.emplace(std::move(alpha), Sign::Zero);
}

SignPattern SignPattern::from_poly(const RealSparsePoly& p, std::optional<int> D) {
  if (!p.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "sign pattern needs a homogeneous polynomial");
  const auto deg = p.degree();
  if (!deg && !D) throw Error(ErrorCode::InvalidArgument, "degree required for the zero polynomial");
  if (deg && D && *deg != *D) throw Error(ErrorCode::DegreeMismatch, "polynomial degree differs from D");
  SignPattern pat(static_cast<int>(p.nvars()), deg ? *deg : *D);
  for (const auto& [alpha, c] : p.terms()) pat.set(alpha, c.sign() > 0 ? Sign::Pos : Sign::Neg);
  return pat;
}

Sign SignPattern::sign(const MultiIndex& alpha) const {
  auto it = signs_.find(alpha);
  if (it == signs_.end()) throw Error(ErrorCode::InvalidArgument, alpha.str() + " is not a lattice point");
  return it->second;
}

void SignPattern::set(const MultiIndex& alpha, Sign s) {
  auto it = signs_.find(alpha);
  if (it == signs_.end()) throw Error(ErrorCode::InvalidArgument, alpha.str() + " is not a lattice point");
  it->second = s;
}

SignaturePair SignPattern::counts() const {
  SignaturePair sig;
  for (const auto& [alpha, s] : signs_) {
    if (s == Sign::Pos) ++sig.n_plus;
    if (s == Sign::Neg) ++sig.n_minus;
  }
  return sig;
}

std::vector<MultiIndex> SignPattern::support() const {
  std::vector<MultiIndex> out;
  for (const auto& [alpha, s] : signs_) {
    if (s != Sign::Zero) out.push_back(alpha);
  }
  return out;
}

FeasibilityResult support_feasible(const SignPattern& pattern, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "feasibility needs d >= 1");
  const auto deltas = monomials_of_degree(static_cast<std::size_t>(pattern.nvars()), d);
  std::map<MultiIndex, std::pair<bool, bool>> reach;  // (has POS, has NEG)
  for (const auto& [alpha, s] : pattern.signs()) {
    if (s == Sign::Zero) continue;
    for (const auto& delta : deltas) {
      auto& r = reach[alpha + delta];
      (s == Sign::Pos ? r.first : r.second) = true;
    }
  }
  // Ascending iteration makes the witness the lex-least violating monomial.
  for (const auto& [A, r] : reach) {
    if (r.second && !r.first) return {false, A};
  }
  return {true, std::nullopt};
}

RealSparsePoly realize_magnitudes(const SignPattern& pattern, int d) {
  const auto feas = support_feasible(pattern, d);
  if (!feas.feasible) {
    throw Error(ErrorCode::Infeasible, "product monomial " + feas.witness->str() +
                                           " receives only negative contributions");
  }
  const std::size_t n = static_cast<std::size_t>(pattern.nvars());
  RealSparsePoly negatives(n);
  for (const auto& [alpha, s] : pattern.signs()) {
    if (s == Sign::Neg) negatives.add_term(alpha, 1);
  }
  Rational max_mass(0);
  const RealSparsePoly mass_poly = multiply_by_simplex_power(negatives, d);
  for (const auto& [A, mass] : mass_poly.terms()) {
    if (mass > max_mass) max_mass = mass;
  }
  const Rational big = max_mass + 1;
  RealSparsePoly out(n);
  for (const auto& [alpha, s] : pattern.signs()) {
    if (s == Sign::Pos) out.add_term(alpha, big);
    if (s == Sign::Neg) out.add_term(alpha, -1);
  }
  return out;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::Greedy: return "greedy";
    case Strategy::Local: return "local";
  }
  return "local";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "exhaustive" || s == "EXHAUSTIVE") return Strategy::Exhaustive;
  if (s == "greedy" || s == "GREEDY") return Strategy::Greedy;
  if (s == "local" || s == "LOCAL") return Strategy::Local;
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + s + "'");
}

SignPattern pD_pattern(int n, int D) { return SignPattern::from_poly(generate_pD(n, D), D); }

namespace {

// Lattice points (descending lex) with their product-monomial neighbourhoods.
struct Lattice {
  int n = 0;
  int D = 0;
  int d = 0;
  std::vector<MultiIndex> points;
  std::map<MultiIndex, int> index;
  std::vector<std::vector<int>> reaches;       // point -> product monomials
  std::vector<std::vector<int>> contributors;  // product monomial -> points
  std::vector<int> support;                    // points allowed to be nonzero
  std::vector<bool> in_support;

  Lattice(int n_, int D_, int d_, const std::optional<std::vector<MultiIndex>>& restrict)
      : n(n_), D(D_), d(d_), points(monomials_of_degree(n_, D_)) {
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], static_cast<int>(i));
    const auto products = monomials_of_degree(n_, D_ + d_);
    std::map<MultiIndex, int> pindex;
    for (std::size_t q = 0; q < products.size(); ++q) pindex.emplace(products[q], static_cast<int>(q));
    contributors.resize(products.size());
    reaches.resize(points.size());
    const auto deltas = monomials_of_degree(n_, d_);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (const auto& delta : deltas) {
        const int q = pindex.at(points[i] + delta);
        reaches[i].push_back(q);
        contributors[q].push_back(static_cast<int>(i));
      }
    }
    in_support.assign(points.size(), restrict ? false : true);
    if (restrict) {
      for (const auto& alpha : *restrict) {
        auto it = index.find(alpha);
        if (it == index.end()) {
          throw Error(ErrorCode::InvalidArgument, "support point " + alpha.str() + " is not on the lattice");
        }
        in_support[it->second] = true;
      }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (in_support[i]) support.push_back(static_cast<int>(i));
    }
  }
};

struct State {
  const Lattice* lat;
  std::vector<Sign> s;
  std::vector<int> pos, neg;
  int violations = 0;
  long np = 0, nn = 0;

  explicit State(const Lattice& l)
      : lat(&l), s(l.points.size(), Sign::Zero), pos(l.contributors.size(), 0), neg(l.contributors.size(), 0) {}

  bool violated(int q) const { return neg[q] > 0 && pos[q] == 0; }

  void set(int i, Sign v) {
    const Sign old = s[i];
    if (old == v) return;
    for (int q : lat->reaches[i]) {
      const bool before = violated(q);
      if (old == Sign::Pos) --pos[q];
      if (old == Sign::Neg) --neg[q];
      if (v == Sign::Pos) ++pos[q];
      if (v == Sign::Neg) ++neg[q];
      violations += static_cast<int>(violated(q)) - static_cast<int>(before);
    }
    if (old == Sign::Pos) --np;
    if (old == Sign::Neg) --nn;
    if (v == Sign::Pos) ++np;
    if (v == Sign::Neg) ++nn;
    s[i] = v;
  }

  bool feasible() const { return violations == 0; }
};

// Ratio nn/np of a feasible pattern; np = 0 forces nn = 0 and ratio 0.
struct Score {
  long nn = 0;
  long np = 0;
};

int compare_ratio(const Score& a, const Score& b) {
  // a.nn/a.np vs b.nn/b.np, with x/0 read as 0 (only 0/0 occurs).
  const __int128 lhs = static_cast<__int128>(a.nn) * (b.np == 0 ? 1 : b.np) * (a.np == 0 ? 0 : 1);
  const __int128 rhs = static_cast<__int128>(b.nn) * (a.np == 0 ? 1 : a.np) * (b.np == 0 ? 0 : 1);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Strictly better ratio, then having any POS at all, then lex-smaller sign vector.
bool better(const Score& a, const std::vector<Sign>& sa, const Score& b, const std::vector<Sign>& sb) {
  const int c = compare_ratio(a, b);
  if (c != 0) return c > 0;
  if ((a.np > 0) != (b.np > 0)) return a.np > 0;
  return sa < sb;
}

Rational to_rational(const Score& s) { return s.np == 0 ? Rational(0) : Rational(s.nn, s.np); }

SearchResult finish(const Lattice& lat, const std::vector<Sign>& best, long evaluations,
                    Strategy strategy, bool complete) {
  SignPattern pat(lat.n, lat.D);
  Score sc;
  for (std::size_t i = 0; i < best.size(); ++i) {
    pat.set(lat.points[i], best[i]);
    if (best[i] == Sign::Pos) ++sc.np;
    if (best[i] == Sign::Neg) ++sc.nn;
  }
  SearchResult res{pat, to_rational(sc), evaluations, strategy, realize_magnitudes(pat, lat.d),
                   complete, ratio_ceiling(lat.n, lat.d), std::nullopt};
  if (lat.n == 3) res.knight_reference = Rational((lat.d + 2) * (lat.d + 2) / 3 - 1);
  return res;
}

class Exhaustive {
 public:
  Exhaustive(const Lattice& lat, const SearchOptions& opt) : lat_(lat), opt_(opt), state_(lat) {
    if (lat.support.size() > kExhaustiveMaxPoints) {
      throw Error(ErrorCode::ExplicitLimit,
                  "exhaustive search needs a support of at most " + std::to_string(kExhaustiveMaxPoints) +
                      " points (got " + std::to_string(lat.support.size()) + "); restrict the support");
    }
    // A product monomial is decided once its last support contributor is assigned.
    closing_.resize(lat.support.size());
    std::vector<int> depth_of(lat.points.size(), -1);
    for (std::size_t k = 0; k < lat.support.size(); ++k) depth_of[lat.support[k]] = static_cast<int>(k);
    for (std::size_t q = 0; q < lat.contributors.size(); ++q) {
      int last = -1;
      for (int i : lat.contributors[q]) last = std::max(last, depth_of[i]);
      if (last >= 0) closing_[last].push_back(static_cast<int>(q));
    }
    best_ = state_.s;  // all ZERO is always feasible
  }

  SearchResult run() {
    if (!opt_.allow_zero) best_valid_ = false;
    dfs(0);
    if (!best_valid_) {
      throw Error(ErrorCode::Infeasible, "no feasible pattern on this support without ZERO entries");
    }
    return finish(lat_, best_, evaluations_, Strategy::Exhaustive, true);
  }

 private:
  void dfs(std::size_t depth) {
    if (depth == lat_.support.size()) {
      Score sc{state_.nn, state_.np};
      const int c = best_valid_ ? compare_ratio(sc, best_score_) : 1;
      if (c > 0 || (c == 0 && best_score_.np == 0 && sc.np > 0)) {
        best_ = state_.s;
        best_score_ = sc;
        best_valid_ = true;
      }
      return;
    }
    const int i = lat_.support[depth];
    static constexpr Sign kOrder[] = {Sign::Zero, Sign::Pos, Sign::Neg};
    for (Sign v : kOrder) {
      if (v == Sign::Zero && !opt_.allow_zero) continue;
      if (++evaluations_ > opt_.budget) {
        state_.set(i, Sign::Zero);
        if (!best_valid_) throw Error(ErrorCode::BudgetExhausted, "budget exhausted before any feasible pattern");
        throw BudgetExhaustedError(finish(lat_, best_, opt_.budget, Strategy::Exhaustive, false));
      }
      state_.set(i, v);
      bool ok = true;
      for (int q : closing_[depth]) {
        if (state_.violated(q)) {
          ok = false;
          break;
        }
      }
      if (ok && best_valid_ && best_score_.np > 0 && state_.np > 0) {
        const long remaining = static_cast<long>(lat_.support.size() - depth - 1);
        // Even if every remaining point were NEG the ratio could not improve.
        if (compare_ratio({state_.nn + remaining, state_.np}, best_score_) <= 0) ok = false;
      }
      if (ok) dfs(depth + 1);
    }
    state_.set(i, Sign::Zero);
  }

  const Lattice& lat_;
  const SearchOptions& opt_;
  State state_;
  std::vector<std::vector<int>> closing_;
  std::vector<Sign> best_;
  Score best_score_;
  bool best_valid_ = true;
  long evaluations_ = 0;
};

class Ascent {
 public:
  Ascent(const Lattice& lat, const SearchOptions& opt) : lat_(lat), opt_(opt) {}

  long evaluations() const { return evaluations_; }
  bool out_of_budget() const { return evaluations_ >= opt_.budget; }

  // Steepest ascent from a feasible state; returns the local optimum.
  State climb(State cur, bool with_shifts) {
    while (!out_of_budget()) {
      std::optional<std::vector<Sign>> best_move;
      const Score base{cur.nn, cur.np};
      Score best_score = base;
      std::vector<Sign> best_signs = cur.s;
      auto consider = [&](const State& cand) {
        Score sc{cand.nn, cand.np};
        if (compare_ratio(sc, base) <= 0) return;
        if (!best_move || better(sc, cand.s, best_score, best_signs)) {
          best_move = cand.s;
          best_score = sc;
          best_signs = cand.s;
        }
      };
      for (int i : lat_.support) {
        const Sign old = cur.s[i];
        for (Sign v : {Sign::Zero, Sign::Pos, Sign::Neg}) {
          if (v == old || (v == Sign::Zero && !opt_.allow_zero)) continue;
          if (out_of_budget()) break;
          ++evaluations_;
          cur.set(i, v);
          if (cur.feasible()) consider(cur);
          cur.set(i, old);
        }
      }
      if (with_shifts) {
        for (int a = 0; a < lat_.n && !out_of_budget(); ++a) {
          for (int b = 0; b < lat_.n && !out_of_budget(); ++b) {
            if (a == b) continue;
            ++evaluations_;
            State shifted = shift(cur, a, b);
            if (shifted.feasible()) consider(shifted);
          }
        }
      }
      if (!best_move) break;
      apply(cur, *best_move);
    }
    return cur;
  }

  State from_signs(const std::vector<Sign>& s) const {
    State st(lat_);
    apply(st, s);
    return st;
  }

  // Makes every violated product monomial feasible by turning one of its
  // support contributors (the first in lattice order) POS.
  void repair(State& st) const {
    for (std::size_t q = 0; q < lat_.contributors.size(); ++q) {
      if (!st.violated(static_cast<int>(q))) continue;
      for (int i : lat_.contributors[q]) {
        if (lat_.in_support[i]) {
          st.set(i, Sign::Pos);
          break;
        }
      }
    }
  }

 private:
  void apply(State& st, const std::vector<Sign>& target) const {
    for (std::size_t i = 0; i < target.size(); ++i) st.set(static_cast<int>(i), target[i]);
  }

  // Translates the pattern by e_a - e_b; points leaving the lattice or the
  // support are dropped.
  State shift(const State& cur, int a, int b) const {
    State out(lat_);
    for (std::size_t i = 0; i < lat_.points.size(); ++i) {
      if (cur.s[i] == Sign::Zero) continue;
      const MultiIndex& p = lat_.points[i];
      if (p[b] == 0) continue;
      std::vector<int> e = p.vec();
      ++e[a];
      --e[b];
      const int j = lat_.index.at(MultiIndex(std::move(e)));
      if (lat_.in_support[j]) out.set(j, cur.s[i]);
    }
    return out;
  }

  const Lattice& lat_;
  const SearchOptions& opt_;
  long evaluations_ = 0;
};

SearchResult run_greedy(const Lattice& lat, const SearchOptions& opt) {
  Ascent ascent(lat, opt);
  State st(lat);
  for (int i : lat.support) st.set(i, Sign::Pos);
  State top = ascent.climb(std::move(st), false);
  return finish(lat, top.s, ascent.evaluations(), Strategy::Greedy, false);
}

SearchResult run_local(const Lattice& lat, const SearchOptions& opt) {
  Ascent ascent(lat, opt);
  std::mt19937_64 rng(opt.seed);

  std::vector<Sign> seed_signs(lat.points.size(), Sign::Zero);
  const SignPattern seed = pD_pattern(lat.n, lat.D);
  for (int i : lat.support) seed_signs[i] = seed.sign(lat.points[i]);
  State start = ascent.from_signs(seed_signs);
  ascent.repair(start);

  State best = ascent.climb(std::move(start), true);
  for (int r = 0; r < opt.restarts && !ascent.out_of_budget(); ++r) {
    State cand = best;
    const std::size_t flips = std::max<std::size_t>(1, lat.support.size() / 10);
    std::uniform_int_distribution<std::size_t> pick(0, lat.support.size() - 1);
    std::uniform_int_distribution<int> sign_pick(opt.allow_zero ? 0 : 1, 2);
    for (std::size_t f = 0; f < flips; ++f) {
      cand.set(lat.support[pick(rng)], static_cast<Sign>(sign_pick(rng)));
    }
    ascent.repair(cand);
    State top = ascent.climb(std::move(cand), true);
    if (better({top.nn, top.np}, top.s, {best.nn, best.np}, best.s)) best = std::move(top);
  }
  return finish(lat, best.s, ascent.evaluations(), Strategy::Local, false);
}

}  // namespace

SearchResult search_max_ratio(int n, int D, int d, const SearchOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "search needs n >= 2");
  if (D < 1) throw Error(ErrorCode::InvalidArgument, "search needs D >= 1");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "search needs d >= 1");
  if (options.budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be positive");
  const Lattice lat(n, D, d, options.support);
  if (lat.support.empty()) throw Error(ErrorCode::InvalidArgument, "empty search support");
  switch (options.strategy) {
    case Strategy::Exhaustive: return Exhaustive(lat, options).run();
    case Strategy::Greedy: return run_greedy(lat, options);
    case Strategy::Local: return run_local(lat, options);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown strategy");
}

}  // namespace psi
