#include "cqopt/geometry.hpp"

#include "cqopt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cqopt {

void PointSet::add(VecR p) {
  if (points.empty() && d == 0) d = static_cast<int>(p.size());
  if (static_cast<int>(p.size()) != d) throw DimensionMismatch("point dimension mismatch");
  points.push_back(std::move(p));
}

PointSet PointSet::from_boolean_masks(const std::vector<uint64_t>& masks, int d) {
  PointSet ps;
  ps.d = d;
  for (uint64_t m : masks) {
    VecR p(d);
    for (int i = 0; i < d; ++i) p[i] = Rational((m >> i) & 1);
    ps.points.push_back(std::move(p));
  }
  return ps;
}

namespace {

// ---------------------------------------------------------------------------
// Phase-1 simplex over an arbitrary field type. Solves: does there exist
// alpha >= 0 with G * alpha = x?  Rows are pre-negated so the RHS is
// nonnegative and artificials start as the basis.
// ---------------------------------------------------------------------------

template <typename F>
struct SimplexOutcome {
  bool feasible = false;
  bool decided = false;           // false: iteration cap hit (float run only)
  std::vector<F> alpha;           // feasible case
  std::vector<F> duals;           // infeasible case: y with h = -D y separating
  std::vector<int> basis_columns; // generator columns in the final basis
};

template <typename F>
bool is_negative(const F& v, const F& eps) {
  return v < -eps;
}

template <typename F>
SimplexOutcome<F> phase1_simplex(const std::vector<std::vector<F>>& cols, const std::vector<F>& rhs,
                                 const std::vector<int>& row_sign, F eps, long max_iters,
                                 bool bland_always) {
  const int d = static_cast<int>(rhs.size());
  const int m = static_cast<int>(cols.size());
  const int total = m + d;
  // Tableau rows: d constraint rows + cost row; columns: total vars + RHS.
  std::vector<std::vector<F>> t(d + 1, std::vector<F>(total + 1, F(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = row_sign[i] > 0 ? cols[j][i] : -cols[j][i];
    t[i][m + i] = F(1);
    t[i][total] = row_sign[i] > 0 ? rhs[i] : -rhs[i];
  }
  // Cost row: reduced costs with artificial basis (cost 1 each).
  for (int j = 0; j <= total; ++j) {
    F acc(0);
    for (int i = 0; i < d; ++i) acc += t[i][j];
    t[d][j] = (j >= m && j < total) ? F(0) : -acc;
  }
  // t[d][total] currently holds -(sum rhs) = -objective.
  std::vector<int> basis(d);
  for (int i = 0; i < d; ++i) basis[i] = m + i;

  long iter = 0;
  for (;;) {
    if (++iter > max_iters) return {};  // undecided
    int enter = -1;
    if (bland_always) {
      for (int j = 0; j < total; ++j)
        if (is_negative(t[d][j], eps)) { enter = j; break; }
    } else {
      F best(0);
      for (int j = 0; j < total; ++j)
        if (t[d][j] < best) { best = t[d][j]; enter = j; }
      if (enter >= 0 && !is_negative(t[d][enter], eps)) enter = -1;
    }
    if (enter < 0) break;
    int leave = -1;
    F best_ratio(0);
    for (int i = 0; i < d; ++i) {
      if (t[i][enter] > eps) {
        F ratio = t[i][total] / t[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) return {};  // unbounded: cannot happen in exact phase 1
    // Pivot on (leave, enter).
    F piv = t[leave][enter];
    for (int j = 0; j <= total; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= d; ++i) {
      if (i == leave) continue;
      F f = t[i][enter];
      if (f == F(0)) continue;
      for (int j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  SimplexOutcome<F> out;
  out.decided = true;
  F objective = -t[d][total];
  if (objective <= eps && objective >= -eps) {
    out.feasible = true;
    out.alpha.assign(m, F(0));
    for (int i = 0; i < d; ++i)
      if (basis[i] < m) {
        out.alpha[basis[i]] = t[i][total];
        out.basis_columns.push_back(basis[i]);
      }
  } else {
    out.feasible = false;
    out.duals.resize(d);
    for (int i = 0; i < d; ++i) out.duals[i] = F(1) - t[d][m + i];
  }
  return out;
}

// Solves A * alpha = b exactly for a (possibly non-square, consistent-or-not)
// system; returns nullopt on inconsistency.
std::optional<VecR> solve_consistent(const std::vector<VecR>& cols, const VecR& b) {
  size_t d = b.size(), m = cols.size();
  MatR a(d, VecR(m + 1));
  for (size_t r = 0; r < d; ++r) {
    for (size_t c = 0; c < m; ++c) a[r][c] = cols[c][r];
    a[r][m] = b[r];
  }
  size_t pr = 0;
  std::vector<int> pivot_row_of(m, -1);
  for (size_t c = 0; c < m && pr < d; ++c) {
    size_t piv = pr;
    while (piv < d && a[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(a[pr], a[piv]);
    for (size_t r = 0; r < d; ++r) {
      if (r != pr && a[r][c] != 0) {
        Rational f = a[r][c] / a[pr][c];
        for (size_t k = c; k <= m; ++k) a[r][k] -= f * a[pr][k];
      }
    }
    pivot_row_of[c] = static_cast<int>(pr);
    ++pr;
  }
  for (size_t r = pr; r < d; ++r)
    if (a[r][m] != 0) return std::nullopt;
  VecR alpha(m, Rational(0));
  for (size_t c = 0; c < m; ++c)
    if (pivot_row_of[c] >= 0) alpha[c] = a[pivot_row_of[c]][m] / a[pivot_row_of[c]][c];
  return alpha;
}

ConeCheck exact_cone_lp(const VecR& x, const std::vector<VecR>& gens) {
  const int d = static_cast<int>(x.size());
  std::vector<int> row_sign(d, 1);
  for (int i = 0; i < d; ++i)
    if (x[i] < 0) row_sign[i] = -1;
  auto out = phase1_simplex<Rational>(gens, x, row_sign, Rational(0),
                                      1000000L + 200L * (gens.size() + d) * (gens.size() + d),
                                      /*bland_always=*/true);
  if (!out.decided) throw std::runtime_error("exact simplex failed to terminate");
  ConeCheck res;
  if (out.feasible) {
    res.member = true;
    res.coefficients = std::move(out.alpha);
  } else {
    res.member = false;
    res.witness.resize(d);
    for (int i = 0; i < d; ++i) res.witness[i] = -Rational(row_sign[i]) * out.duals[i];
  }
  return res;
}

bool verify_witness_int(const VecZ& h, const std::vector<VecZ>& int_gens, const VecZ& int_x) {
  BigInt hx = 0;
  for (size_t i = 0; i < h.size(); ++i) hx += h[i] * int_x[i];
  if (hx >= 0) return false;
  for (const auto& g : int_gens) {
    BigInt hg = 0;
    for (size_t i = 0; i < h.size(); ++i) hg += h[i] * g[i];
    if (hg < 0) return false;
  }
  return true;
}

VecZ integerize(const VecR& v) {
  BigInt lcm = 1;
  for (const auto& r : v) {
    BigInt den = boost::multiprecision::denominator(r);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  VecZ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = boost::multiprecision::numerator(v[i]) *
             (lcm / boost::multiprecision::denominator(v[i]));
  }
  return out;
}

}  // namespace

ConeSolver::ConeSolver(std::vector<VecR> generators) {
  orig_count_ = static_cast<int>(generators.size());
  if (!generators.empty()) d_ = static_cast<int>(generators[0].size());
  // Drop zero generators; they add nothing to the cone.
  for (int i = 0; i < orig_count_; ++i) {
    if (is_zero(generators[i])) continue;
    orig_index_.push_back(i);
    gens_.push_back(std::move(generators[i]));
  }
  gens_dbl_.reserve(gens_.size());
  for (const auto& g : gens_) {
    std::vector<double> gd(g.size());
    for (size_t i = 0; i < g.size(); ++i) gd[i] = static_cast<double>(g[i]);
    gens_dbl_.push_back(std::move(gd));
  }
}

ConeCheck ConeSolver::member(const VecR& x) const {
  ConeCheck inner = member_filtered(x);
  if (!inner.member) return inner;
  ConeCheck res;
  res.member = true;
  res.coefficients.assign(orig_count_, Rational(0));
  for (size_t i = 0; i < gens_.size(); ++i) res.coefficients[orig_index_[i]] = inner.coefficients[i];
  return res;
}

ConeCheck ConeSolver::member_filtered(const VecR& x) const {
  for (const auto& g : gens_)
    if (g.size() != x.size()) throw DimensionMismatch("cone generator dimension mismatch");
  ConeCheck res;
  if (is_zero(x)) {
    res.member = true;
    res.coefficients.assign(gens_.size(), Rational(0));
    return res;
  }
  if (gens_.empty()) {
    res.member = false;
    res.witness.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) res.witness[i] = -x[i];
    return res;
  }

  const int d = static_cast<int>(x.size());
  // Floating-point presolve.
  std::vector<double> xd(d);
  for (int i = 0; i < d; ++i) xd[i] = static_cast<double>(x[i]);
  std::vector<int> row_sign(d, 1);
  for (int i = 0; i < d; ++i)
    if (xd[i] < 0) row_sign[i] = -1;
  auto fl = phase1_simplex<double>(gens_dbl_, xd, row_sign, 1e-9,
                                   400 + 20L * (gens_.size() + d), /*bland_always=*/false);
  if (fl.decided) {
    if (fl.feasible) {
      // Exact check of the proposed basis.
      std::vector<VecR> basis_cols;
      for (int j : fl.basis_columns) basis_cols.push_back(gens_[j]);
      auto alpha = solve_consistent(basis_cols, x);
      if (alpha) {
        bool nonneg = true;
        for (const auto& a : *alpha)
          if (a < 0) { nonneg = false; break; }
        if (nonneg) {
          res.member = true;
          res.coefficients.assign(gens_.size(), Rational(0));
          for (size_t i = 0; i < fl.basis_columns.size(); ++i)
            res.coefficients[fl.basis_columns[i]] = (*alpha)[i];
          return res;
        }
      }
    } else {
      // Exact check of the proposed separating functional (scaled integer).
      VecZ h(d);
      bool in_range = true;
      for (int i = 0; i < d; ++i) {
        double v = -row_sign[i] * fl.duals[i] * 4294967296.0;  // 2^32
        if (!std::isfinite(v) || std::abs(v) > 9e15) { in_range = false; break; }
        h[i] = BigInt(static_cast<long long>(std::llround(v)));
      }
      if (in_range) {
        std::vector<VecZ> int_gens;
        int_gens.reserve(gens_.size());
        for (const auto& g : gens_) int_gens.push_back(integerize(g));
        if (verify_witness_int(h, int_gens, integerize(x))) {
          res.member = false;
          res.witness.resize(d);
          for (int i = 0; i < d; ++i) res.witness[i] = Rational(h[i]);
          return res;
        }
      }
    }
  }
  // Presolve inconclusive or certificate failed verification.
  return exact_cone_lp(x, gens_);
}

ConeCheck cone_member(const VecR& x, const std::vector<VecR>& generators) {
  return ConeSolver(generators).member(x);
}

ConeCheck cone_member_exact(const VecR& x, const std::vector<VecR>& generators) {
  ConeCheck res;
  if (is_zero(x)) {
    res.member = true;
    res.coefficients.assign(generators.size(), Rational(0));
    return res;
  }
  std::vector<VecR> gens;
  std::vector<int> orig_index;
  for (size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != x.size())
      throw DimensionMismatch("cone generator dimension mismatch");
    if (!is_zero(generators[i])) {
      gens.push_back(generators[i]);
      orig_index.push_back(static_cast<int>(i));
    }
  }
  if (gens.empty()) {
    res.member = false;
    res.witness.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) res.witness[i] = -x[i];
    return res;
  }
  ConeCheck inner = exact_cone_lp(x, gens);
  if (!inner.member) return inner;
  res.member = true;
  res.coefficients.assign(generators.size(), Rational(0));
  for (size_t i = 0; i < gens.size(); ++i) res.coefficients[orig_index[i]] = inner.coefficients[i];
  return res;
}

std::vector<VecR> envelope_generators(const PointSet& ps, const std::vector<int>& sequence) {
  std::vector<VecR> gens;
  for (size_t i = 0; i + 1 < sequence.size(); ++i)
    gens.push_back(sub(ps.points[sequence[i + 1]], ps.points[sequence[i]]));
  return gens;
}

bool envelope_member(const PointSet& ps, const std::vector<int>& sequence, const VecR& x) {
  if (sequence.empty()) throw std::invalid_argument("envelope of an empty sequence");
  return cone_member(x, envelope_generators(ps, sequence)).member;
}

std::vector<int> basic_subsequence(const PointSet& ps, const std::vector<int>& sequence) {
  if (sequence.empty()) throw std::invalid_argument("basic subsequence of an empty sequence");
  std::vector<int> kept{sequence[0]};
  std::vector<VecR> gens;  // consecutive differences of kept
  const VecR& first = ps.points[sequence[0]];
  for (size_t t = 1; t < sequence.size(); ++t) {
    VecR diff = sub(ps.points[sequence[t]], first);
    if (!cone_member(diff, gens).member) {
      gens.push_back(sub(ps.points[sequence[t]], ps.points[kept.back()]));
      kept.push_back(sequence[t]);
    }
  }
  return kept;
}

bool conically_independent(const PointSet& ps, const std::vector<int>& sequence) {
  return basic_subsequence(ps, sequence) == sequence;
}

int boolean_conic_dim_bound(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  for (int k = 1;; ++k) {
    BigInt lhs = bigint_pow(BigInt(2), k);
    BigInt rhs = bigint_pow(BigInt(2 * k + 1), d);
    if (lhs > rhs) return k;
  }
}

SieveResult sieve_optimize(const PointSet& ps, const PointComparator& compare, int k,
                           uint64_t seed) {
  if (ps.size() == 0) throw EmptyPointSet("sieve on empty point set");
  if (k < 1) throw std::invalid_argument("sample parameter k must be >= 1");
  SieveResult result;
  Prng prng(seed);
  auto counted = [&](int a, int b) {
    ++result.comparisons;
    return compare(a, b);
  };

  std::vector<int> alive(ps.size());
  for (int i = 0; i < ps.size(); ++i) alive[i] = i;

  // Safety valve only: expected iteration count is O(log N).
  const int max_outer = 64 + 4 * static_cast<int>(std::ceil(std::log2(ps.size() + 1)));
  while (static_cast<int>(alive.size()) > 4 * k && result.outer_iterations < max_outer) {
    ++result.outer_iterations;
    const size_t n_before = alive.size();
    double p = std::min(2.0 * k / static_cast<double>(n_before), 1.0);
    std::vector<int> sample;
    for (int idx : alive)
      if (prng.bernoulli(p)) sample.push_back(idx);
    if (sample.empty()) {
      result.eliminated_fraction.push_back(0.0);
      continue;
    }
    stable_merge_sort(sample, counted);
    int y = sample[0];
    ConeSolver solver(envelope_generators(ps, sample));
    std::vector<int> next;
    next.reserve(alive.size());
    for (int idx : alive) {
      if (idx == y) {
        next.push_back(idx);
        continue;
      }
      VecR diff = sub(ps.points[idx], ps.points[y]);
      if (!solver.member(diff).member) next.push_back(idx);
    }
    result.eliminated_fraction.push_back(
        static_cast<double>(n_before - next.size()) / static_cast<double>(n_before));
    alive = std::move(next);
  }

  stable_merge_sort(alive, counted);
  // Gather the tie class of the minimum, then break ties by lexicographically
  // smallest point.
  int best = alive[0];
  for (size_t i = 1; i < alive.size(); ++i) {
    if (counted(alive[0], alive[i]) != 0) break;
    if (ps.points[alive[i]] < ps.points[best]) best = alive[i];
  }
  result.argmin = best;
  return result;
}

Certificate extract_certificate(const PointSet& ps, const std::vector<int>& sorted_order,
                                const PointComparator& compare, uint64_t seed) {
  if (sorted_order.empty()) throw EmptyPointSet("certificate of empty order");
  Prng prng(seed);
  size_t adjacent = sorted_order.size() - 1;
  size_t checks = std::min<size_t>(adjacent, 32);
  for (size_t c = 0; c < checks; ++c) {
    size_t i = (adjacent <= 32) ? c : prng.below(adjacent);
    if (compare(sorted_order[i], sorted_order[i + 1]) > 0)
      throw UnsortedInput("order fails oracle spot-check");
  }
  auto basis = basic_subsequence(ps, sorted_order);
  Certificate cert;
  // Pair (i, j) asserts point i costs at least point j; consecutive basis
  // points ascend in weight, so the later one goes first.
  for (size_t t = 0; t + 1 < basis.size(); ++t) cert.pairs.emplace_back(basis[t + 1], basis[t]);
  return cert;
}

bool verify_certificate(const PointSet& ps, int y_index, const Certificate& cert) {
  std::vector<VecR> gens;
  for (auto [i, j] : cert.pairs) gens.push_back(sub(ps.points[i], ps.points[j]));
  ConeSolver solver(gens);
  for (int idx = 0; idx < ps.size(); ++idx) {
    VecR diff = sub(ps.points[idx], ps.points[y_index]);
    if (!solver.member(diff).member) return false;
  }
  return true;
}

}  // namespace cqopt
