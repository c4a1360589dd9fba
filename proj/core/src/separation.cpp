#include "cqopt/separation.hpp"

#include <algorithm>
#include <cmath>

namespace cqopt {

MatZ integer_nullspace(const MatZ& a_rows, int n_cols) {
  return integer_kernel(a_rows, n_cols);
}

BigInt scalar_encode(const VecZ& v, const BigInt& n, const BigInt& m_bound, int s) {
  if (static_cast<int>(v.size()) != s) throw std::invalid_argument("encoding dimension mismatch");
  for (const auto& x : v)
    if (x > m_bound || x < -m_bound) throw OutOfRange("vector entry exceeds bound M");
  BigInt base = 3 * n * m_bound;
  BigInt acc = 1;  // base^{j-1}
  BigInt out = 0;
  for (int j = 0; j < s; ++j) {
    out += acc * v[j];
    acc *= base;
  }
  out += acc;  // + (3nM)^s
  return out;
}

std::optional<Set> separate_powerset(const std::vector<VecZ>& columns,
                                     const std::vector<VecZ>& z_values) {
  const int n = static_cast<int>(columns.size());
  const size_t ell = z_values.size();
  std::set<VecZ> zset(z_values.begin(), z_values.end());

  struct Prov {
    int step;  // 0 for the empty set; otherwise the 1-based column added
    VecZ prev;
  };
  std::map<VecZ, Prov> vals;
  const int s = columns.empty() ? 0 : static_cast<int>(columns[0].size());
  vals[VecZ(s, 0)] = {0, {}};

  for (int i = 1; i <= n && vals.size() <= ell; ++i) {
    std::vector<VecZ> snapshot;
    snapshot.reserve(vals.size());
    for (const auto& [v, _] : vals) snapshot.push_back(v);
    for (const auto& v : snapshot) {
      VecZ u(v.size());
      for (int j = 0; j < s; ++j) u[j] = v[j] + columns[i - 1][j];
      if (!vals.count(u)) vals[u] = {i, v};
    }
  }

  // Lexicographically smallest achievable value outside Z.
  for (const auto& [v, _] : vals) {
    if (zset.count(v)) continue;
    Set out;
    VecZ cur = v;
    while (true) {
      const Prov& p = vals.at(cur);
      if (p.step == 0) break;
      out.push_back(p.step - 1);
      cur = p.prev;
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Linear matroids and their determinant generating polynomial
// ---------------------------------------------------------------------------

bool LinearMatroid::is_independent(const Set& s) const {
  if (static_cast<int>(s.size()) > k()) return false;
  MatR cols(k(), VecR(s.size()));
  for (int r = 0; r < k(); ++r)
    for (size_t c = 0; c < s.size(); ++c) cols[r][c] = v[r][s[c]];
  return rational_rank(cols) == static_cast<int>(s.size());
}

bool LinearMatroid::is_basis(const Set& s) const {
  return static_cast<int>(s.size()) == k() && basis_det(s) != 0;
}

Rational LinearMatroid::basis_det(const Set& s) const {
  MatR sq(k(), VecR(k()));
  for (int r = 0; r < k(); ++r)
    for (int c = 0; c < k(); ++c) sq[r][c] = v[r][s[c]];
  return determinant(sq);
}

std::vector<Set> LinearMatroid::enumerate_bases() const {
  std::vector<Set> out;
  Set cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k()) {
      if (is_basis(cur)) out.push_back(cur);
      return;
    }
    for (int i = start; i < n(); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

LinearMatroid uniform_matroid_rep(int n, int k) {
  LinearMatroid lm;
  lm.v.assign(k, VecR(n));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) lm.v[j][i] = Rational(bigint_pow(BigInt(i + 1), j));
  return lm;
}

LinearMatroid partition_matroid_rep(int a, int b) {
  LinearMatroid lm;
  lm.v.assign(2, VecR(a + b, Rational(0)));
  for (int i = 0; i < a; ++i) lm.v[0][i] = 1;
  for (int i = a; i < a + b; ++i) lm.v[1][i] = 1;
  return lm;
}

namespace {

long degree_bound(const LinearMatroid& lm, const std::vector<BigInt>& costs, long cap) {
  std::vector<BigInt> sorted = costs;
  std::sort(sorted.begin(), sorted.end(), std::greater<BigInt>());
  BigInt d = 0;
  for (int i = 0; i < lm.k() && i < static_cast<int>(sorted.size()); ++i) d += sorted[i];
  if (d > cap) throw DegreeOverflow("basis cost polynomial degree exceeds cap");
  return d.convert_to<long>();
}

Rational eval_poly_matrix(const LinearMatroid& lm, const std::vector<BigInt>& costs,
                          const Rational& x) {
  const int k = lm.k(), n = lm.n();
  // Powers x^{c_i}.
  VecR xp(n);
  for (int i = 0; i < n; ++i)
    xp[i] = Rational(bigint_pow(boost::multiprecision::numerator(x), costs[i].convert_to<unsigned long>()),
                     bigint_pow(boost::multiprecision::denominator(x), costs[i].convert_to<unsigned long>()));
  MatR m(k, VecR(k, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < k; ++r) {
      if (lm.v[r][i] == 0) continue;
      Rational t = xp[i] * lm.v[r][i];
      for (int c = 0; c < k; ++c) m[r][c] += t * lm.v[c][i];
    }
  return determinant(std::move(m));
}

}  // namespace

std::map<BigInt, Rational> basis_cost_polynomial(const LinearMatroid& lm,
                                                 const std::vector<BigInt>& costs,
                                                 long degree_cap) {
  for (const auto& c : costs)
    if (c < 0) throw std::invalid_argument("basis cost polynomial needs nonnegative costs");
  const long d = degree_bound(lm, costs, degree_cap);
  // Evaluate at x = 1..d+1 and interpolate by Newton divided differences.
  std::vector<Rational> xs(d + 1), ys(d + 1);
  for (long t = 0; t <= d; ++t) {
    xs[t] = Rational(t + 1);
    ys[t] = eval_poly_matrix(lm, costs, xs[t]);
  }
  std::vector<Rational> dd = ys;  // dd[j] becomes f[x_0..x_j]
  for (long j = 1; j <= d; ++j)
    for (long i = d; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coeff(d + 1, Rational(0));
  std::vector<Rational> basis(d + 1, Rational(0));
  basis[0] = 1;
  long basis_deg = 0;
  for (long j = 0; j <= d; ++j) {
    if (dd[j] != 0)
      for (long i = 0; i <= basis_deg; ++i) coeff[i] += dd[j] * basis[i];
    if (j < d) {
      // basis *= (x - x_j)
      for (long i = basis_deg + 1; i >= 1; --i) basis[i] = basis[i - 1] - xs[j] * basis[i];
      basis[0] = -xs[j] * basis[0];
      ++basis_deg;
    }
  }
  std::map<BigInt, Rational> out;
  for (long i = 0; i <= d; ++i)
    if (coeff[i] != 0) out[BigInt(i)] = coeff[i];
  return out;
}

std::optional<BigInt> matroid_separate_plain(const LinearMatroid& lm,
                                             const std::vector<BigInt>& costs,
                                             const std::set<BigInt>& z, long degree_cap) {
  auto poly = basis_cost_polynomial(lm, costs, degree_cap);
  for (const auto& [exp, coeff] : poly)
    if (!z.count(exp)) return exp;
  return std::nullopt;
}

namespace {

struct Contracted {
  MatR cols;                 // current representation, k' x (alive columns)
  std::vector<int> elements; // original element ids per column
};

bool support_contains(const LinearMatroid& lm, const std::vector<BigInt>& costs, const BigInt& t,
                      long degree_cap) {
  if (lm.k() == 0) return t == 0;
  if (lm.n() < lm.k()) return false;  // no bases at all
  auto poly = basis_cost_polynomial(lm, costs, degree_cap);
  return poly.count(t) > 0;
}

LinearMatroid drop_column(const LinearMatroid& lm, int col) {
  LinearMatroid out;
  out.v.assign(lm.k(), VecR());
  for (int r = 0; r < lm.k(); ++r)
    for (int c = 0; c < lm.n(); ++c)
      if (c != col) out.v[r].push_back(lm.v[r][c]);
  return out;
}

LinearMatroid contract_column(const LinearMatroid& lm, int col) {
  int pivot = -1;
  for (int r = 0; r < lm.k(); ++r)
    if (lm.v[r][col] != 0) { pivot = r; break; }
  if (pivot < 0) throw WitnessNotFound("contraction of a loop element");
  LinearMatroid out;
  for (int r = 0; r < lm.k(); ++r) {
    if (r == pivot) continue;
    VecR row;
    Rational f = lm.v[r][col] / lm.v[pivot][col];
    for (int c = 0; c < lm.n(); ++c) {
      if (c == col) continue;
      row.push_back(lm.v[r][c] - f * lm.v[pivot][c]);
    }
    out.v.push_back(std::move(row));
  }
  if (out.v.empty()) out.v.assign(0, VecR());
  return out;
}

}  // namespace

Set witness_basis(const LinearMatroid& lm, const std::vector<BigInt>& costs, const BigInt& t,
                  long degree_cap) {
  if (!support_contains(lm, costs, t, degree_cap))
    throw WitnessNotFound("target cost is not a basis cost");
  LinearMatroid cur = lm;
  std::vector<BigInt> cur_costs = costs;
  std::vector<int> ids(lm.n());
  for (int i = 0; i < lm.n(); ++i) ids[i] = i;
  BigInt target = t;
  Set selected;

  while (!ids.empty()) {
    // Decide element at column 0 of the current representation.
    LinearMatroid del = drop_column(cur, 0);
    std::vector<BigInt> del_costs(cur_costs.begin() + 1, cur_costs.end());
    if (support_contains(del, del_costs, target, degree_cap)) {
      cur = std::move(del);
      cur_costs = std::move(del_costs);
      ids.erase(ids.begin());
    } else {
      selected.push_back(ids[0]);
      target -= cur_costs[0];
      if (target < 0) throw WitnessNotFound("target went negative during self-reduction");
      cur = contract_column(cur, 0);
      cur_costs.erase(cur_costs.begin());
      ids.erase(ids.begin());
    }
  }
  std::sort(selected.begin(), selected.end());
  if (static_cast<int>(selected.size()) != lm.k() || target != 0 || !lm.is_basis(selected))
    throw WitnessNotFound("self-reduction produced an invalid basis");
  BigInt actual = 0;
  for (int e : selected) actual += costs[e];
  if (actual != t) throw WitnessNotFound("self-reduction produced the wrong cost");
  return selected;
}

// ---------------------------------------------------------------------------
// Mod-p separation over a random 62-bit prime field
// ---------------------------------------------------------------------------

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t q) {
  uint64_t r = 1;
  b %= q;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, q);
    b = mulmod_u64(b, b, q);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Grows a shared prime table on demand (single-threaded use).
const std::vector<long>& first_primes(long count) {
  static std::vector<long> primes{2, 3};
  static long candidate = 5;
  while (static_cast<long>(primes.size()) < count) {
    bool ok = true;
    for (long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) { ok = false; break; }
    }
    if (ok) primes.push_back(candidate);
    candidate += 2;
  }
  return primes;
}

struct ModpRetry {};

struct FieldContext {
  long p;
  uint64_t q;
  std::vector<uint64_t> omega_pow;  // omega^j for j in [0, p)
  uint64_t inv_p;

  uint64_t root_power(long j) const { return omega_pow[((j % p) + p) % p]; }
};

FieldContext make_field(long p, Prng& prng) {
  const uint64_t lo = 1ull << 60, hi = 1ull << 62;
  for (int tries = 0; tries < 40000; ++tries) {
    uint64_t m = lo / p + prng.below(hi / p - lo / p);
    uint64_t q = m * static_cast<uint64_t>(p) + 1;
    if (q < lo || q >= hi || !is_prime_u64(q)) continue;
    for (int rtry = 0; rtry < 64; ++rtry) {
      uint64_t r = 2 + prng.below(q - 3);
      uint64_t w = powmod_u64(r, (q - 1) / p, q);
      if (w == 1) continue;
      FieldContext ctx;
      ctx.p = p;
      ctx.q = q;
      ctx.omega_pow.resize(p);
      uint64_t acc = 1;
      for (long j = 0; j < p; ++j) {
        ctx.omega_pow[j] = acc;
        acc = mulmod_u64(acc, w, q);
      }
      ctx.inv_p = powmod_u64(static_cast<uint64_t>(p % q), q - 2, q);
      return ctx;
    }
  }
  throw ModpFailure("could not construct a prime field with a p-th root of unity");
}

uint64_t det_mod(std::vector<std::vector<uint64_t>> m, uint64_t q) {
  const size_t k = m.size();
  uint64_t det = 1;
  for (size_t c = 0; c < k; ++c) {
    size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = q - det;
      if (det == q) det = 0;
    }
    det = mulmod_u64(det, m[c][c], q);
    uint64_t inv = powmod_u64(m[c][c], q - 2, q);
    for (size_t r = c + 1; r < k; ++r) {
      if (m[r][c] == 0) continue;
      uint64_t f = mulmod_u64(m[r][c], inv, q);
      for (size_t j = c; j < k; ++j) {
        uint64_t sub = mulmod_u64(f, m[c][j], q);
        m[r][j] = m[r][j] >= sub ? m[r][j] - sub : m[r][j] + q - sub;
      }
    }
  }
  return det;
}

struct ModpMatroid {
  std::vector<std::vector<uint64_t>> cols;  // k' x alive, mod q
  std::vector<long> exps;                   // cost residues mod p
  std::vector<int> ids;                     // original element ids
  int k() const { return static_cast<int>(cols.size()); }
  int n() const { return static_cast<int>(ids.size()); }
};

// Values P(omega^t) for t in [0, p); columns may be excluded via skip.
std::vector<uint64_t> eval_at_roots(const ModpMatroid& m, const FieldContext& ctx, int skip_col) {
  const int k = m.k();
  std::vector<uint64_t> vals(ctx.p);
  std::vector<std::vector<uint64_t>> a(k, std::vector<uint64_t>(k));
  for (long t = 0; t < ctx.p; ++t) {
    for (auto& row : a) std::fill(row.begin(), row.end(), 0);
    for (int i = 0; i < m.n(); ++i) {
      if (i == skip_col) continue;
      uint64_t xe = ctx.omega_pow[(t * m.exps[i]) % ctx.p];
      for (int r = 0; r < k; ++r) {
        if (m.cols[r][i] == 0) continue;
        uint64_t f = mulmod_u64(xe, m.cols[r][i], ctx.q);
        for (int c = 0; c < k; ++c) {
          if (m.cols[c][i] == 0) continue;
          a[r][c] = (a[r][c] + static_cast<unsigned __int128>(f) * m.cols[c][i]) % ctx.q;
        }
      }
    }
    vals[t] = (k == 0) ? 1 : det_mod(a, ctx.q);
  }
  return vals;
}

// Single coefficient of Q(x) = P(x) mod (x^p - 1).
uint64_t coefficient_at(const std::vector<uint64_t>& vals, long c, const FieldContext& ctx) {
  uint64_t acc = 0;
  for (long t = 0; t < ctx.p; ++t) {
    uint64_t w = ctx.root_power(-(t * c) % ctx.p);
    acc = (acc + static_cast<unsigned __int128>(vals[t]) * w) % ctx.q;
  }
  return mulmod_u64(acc, ctx.inv_p, ctx.q);
}

std::set<long> support_of(const std::vector<uint64_t>& vals, const FieldContext& ctx) {
  std::set<long> supp;
  for (long c = 0; c < ctx.p; ++c)
    if (coefficient_at(vals, c, ctx) != 0) supp.insert(c);
  return supp;
}

// Does the support of Q escape the residue set zr? Reconstructs the
// evaluations of the zr-supported part and compares; O(|zr| p) instead of the
// O(p^2) full support scan.
bool support_escapes(const std::vector<uint64_t>& vals, const std::set<long>& zr,
                     const FieldContext& ctx) {
  std::vector<std::pair<long, uint64_t>> z_coeffs;
  for (long r : zr) z_coeffs.push_back({r, coefficient_at(vals, r, ctx)});
  for (long t = 0; t < ctx.p; ++t) {
    uint64_t acc = 0;
    for (auto [r, q] : z_coeffs) {
      uint64_t w = ctx.omega_pow[(t * r) % ctx.p];
      acc = (acc + static_cast<unsigned __int128>(q) * w) % ctx.q;
    }
    if (acc != vals[t]) return true;
  }
  return false;
}

void contract_mod_q(ModpMatroid& m, int col, const FieldContext& ctx) {
  int pivot = -1;
  for (int r = 0; r < m.k(); ++r)
    if (m.cols[r][col] != 0) { pivot = r; break; }
  if (pivot < 0) throw ModpRetry{};
  uint64_t inv = powmod_u64(m.cols[pivot][col], ctx.q - 2, ctx.q);
  std::vector<std::vector<uint64_t>> next;
  for (int r = 0; r < m.k(); ++r) {
    if (r == pivot) continue;
    uint64_t f = mulmod_u64(m.cols[r][col], inv, ctx.q);
    std::vector<uint64_t> row;
    row.reserve(m.n() - 1);
    for (int c = 0; c < m.n(); ++c) {
      if (c == col) continue;
      uint64_t sub = mulmod_u64(f, m.cols[pivot][c], ctx.q);
      uint64_t v = m.cols[r][c];
      row.push_back(v >= sub ? v - sub : v + ctx.q - sub);
    }
    next.push_back(std::move(row));
  }
  m.cols = std::move(next);
  m.exps.erase(m.exps.begin() + col);
  m.ids.erase(m.ids.begin() + col);
}

void delete_col(ModpMatroid& m, int col) {
  for (auto& row : m.cols) row.erase(row.begin() + col);
  m.exps.erase(m.exps.begin() + col);
  m.ids.erase(m.ids.begin() + col);
}

// Residue self-reduction: returns a set S with sum of cost residues == cand
// and det(V_S) nonzero mod q.
Set witness_modp(ModpMatroid m, long cand, const FieldContext& ctx) {
  Set selected;
  const int k_orig = m.k();
  long target = cand;
  while (m.n() > 0) {
    auto vals = eval_at_roots(m, ctx, /*skip_col=*/0);
    if (coefficient_at(vals, target, ctx) != 0) {
      delete_col(m, 0);
    } else {
      selected.push_back(m.ids[0]);
      target = ((target - m.exps[0]) % ctx.p + ctx.p) % ctx.p;
      contract_mod_q(m, 0, ctx);
    }
  }
  if (static_cast<int>(selected.size()) != k_orig || target != 0) throw ModpRetry{};
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::vector<VecZ> integerized_columns(const LinearMatroid& lm) {
  std::vector<VecZ> cols(lm.n(), VecZ(lm.k()));
  for (int c = 0; c < lm.n(); ++c) {
    BigInt lcm = 1;
    for (int r = 0; r < lm.k(); ++r) {
      BigInt den = boost::multiprecision::denominator(lm.v[r][c]);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    for (int r = 0; r < lm.k(); ++r)
      cols[c][r] = boost::multiprecision::numerator(lm.v[r][c]) *
                   (lcm / boost::multiprecision::denominator(lm.v[r][c]));
  }
  return cols;
}

}  // namespace

std::optional<std::pair<BigInt, Set>> matroid_separate_modp(const LinearMatroid& lm,
                                                            const std::vector<BigInt>& costs,
                                                            const std::set<BigInt>& z, Prng& prng,
                                                            int retry_budget) {
  for (const auto& c : costs)
    if (c < 0) throw std::invalid_argument("mod-p separation needs nonnegative costs");
  const int n = lm.n();
  const long ell = static_cast<long>(z.size());
  auto int_cols = integerized_columns(lm);

  BigInt m_bound = 2;
  for (const auto& c : costs) m_bound = std::max(m_bound, c);
  for (const auto& zz : z) m_bound = std::max(m_bound, zz);
  if (boost::multiprecision::msb(m_bound) > 4096)
    throw std::invalid_argument("cost magnitude exceeds configured mod-p bit cap");
  long log_nm = static_cast<long>(boost::multiprecision::msb(BigInt(n) * m_bound + 2)) + 1;
  long scan_bound = 4 * ell * ell * log_nm + 16;

  // Stop rule: any escaping basis cost c would make the polynomial's support
  // escape the Z-residues at every distinct-residue prime not dividing some
  // c - z_j; the product of those differences has at most
  // ell * log2(2M) prime factors, so seeing more consistent primes than that
  // proves exhaustion.
  const long consistent_needed =
      ell * (static_cast<long>(boost::multiprecision::msb(2 * m_bound + 2)) + 2) + 1;
  long consistent_seen = 0;

  const auto& primes = first_primes(scan_bound);
  bool distinct_seen = false;
  for (long pi = 0; pi < scan_bound; ++pi) {
    const long p = primes[pi];
    // All Z-residues must be pairwise distinct modulo p.
    std::set<long> zr;
    bool dup = false;
    for (const auto& zz : z) {
      long r = ((zz % p).convert_to<long>() + p) % p;
      if (!zr.insert(r).second) { dup = true; break; }
    }
    if (dup) continue;
    distinct_seen = true;
    if (consistent_seen > consistent_needed) break;

    std::vector<long> exps(n);
    for (int i = 0; i < n; ++i) exps[i] = ((costs[i] % p).convert_to<long>() + p) % p;

    int failures = 0;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
      FieldContext ctx = make_field(p, prng);
      ModpMatroid mm;
      mm.cols.assign(lm.k(), std::vector<uint64_t>(n));
      bool degenerate = false;
      for (int c = 0; c < n && !degenerate; ++c) {
        bool nonzero_seen = false, nonzero_lost = false;
        for (int r = 0; r < lm.k(); ++r) {
          BigInt m = int_cols[c][r] % ctx.q;
          if (m < 0) m += ctx.q;
          mm.cols[r][c] = m.convert_to<uint64_t>();
          if (int_cols[c][r] != 0) {
            nonzero_seen = true;
            if (mm.cols[r][c] == 0) nonzero_lost = true;
          }
        }
        if (nonzero_seen && nonzero_lost) degenerate = true;
      }
      if (degenerate) { ++failures; continue; }
      mm.exps = exps;
      mm.ids.resize(n);
      for (int i = 0; i < n; ++i) mm.ids[i] = i;

      auto vals = eval_at_roots(mm, ctx, -1);
      if (!support_escapes(vals, zr, ctx)) {
        ++consistent_seen;
        break;  // nothing outside Z at this prime
      }
      auto supp = support_of(vals, ctx);
      std::vector<long> cands;
      for (long c : supp)
        if (!zr.count(c)) cands.push_back(c);
      if (cands.empty()) break;  // no escaping residue at this prime

      bool retry_field = false;
      for (long cand : cands) {
        try {
          Set s = witness_modp(mm, cand, ctx);
          BigInt cost = 0;
          for (int e : s) cost += costs[e];
          if (lm.is_basis(s) && !z.count(cost)) return std::make_pair(cost, s);
          retry_field = true;  // certification failed
          break;
        } catch (const ModpRetry&) {
          retry_field = true;
          break;
        }
      }
      if (!retry_field) break;
      ++failures;
    }
    if (failures >= retry_budget)
      throw ModpFailure("mod-p certification kept failing across field retries");
  }
  if (!distinct_seen) throw NoSuitablePrime("no prime in the pigeonhole range separates Z");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GSL separators
// ---------------------------------------------------------------------------

namespace {

// Lexicographically smallest basis indicator prefers high element indices.
Set lex_min_basis(const LinearMatroid& lm) {
  Set chosen;
  for (int i = lm.n() - 1; i >= 0; --i) {
    Set cand = chosen;
    cand.insert(cand.begin(), i);
    std::sort(cand.begin(), cand.end());
    if (lm.is_independent(cand)) chosen = cand;
    if (static_cast<int>(chosen.size()) == lm.k()) break;
  }
  if (static_cast<int>(chosen.size()) != lm.k())
    throw std::invalid_argument("matroid representation has rank below k");
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct LatticeData {
  int s = 0;
  std::vector<VecZ> columns;  // n columns in Z^s
};

LatticeData lattice_columns(const GslState& state) {
  MatZ w = integer_nullspace(state.subspace.raw_rows(), state.n);
  LatticeData out;
  out.s = static_cast<int>(w.size());
  out.columns.assign(state.n, VecZ(out.s));
  for (int i = 0; i < state.n; ++i)
    for (int j = 0; j < out.s; ++j) out.columns[i][j] = w[j][i];
  return out;
}

}  // namespace

std::optional<Set> LinearMatroidSeparator::next(const GslState& state) {
  if (state.buckets.empty()) return lex_min_basis(lm_);
  auto lattice = lattice_columns(state);
  if (lattice.s == 0) return std::nullopt;  // subspace is everything: all classified

  BigInt m_bound = 1;
  for (const auto& col : lattice.columns)
    for (const auto& e : col) m_bound = std::max(m_bound, BigInt(boost::multiprecision::abs(e)));
  BigInt nn(state.n);
  std::vector<BigInt> enc(state.n);
  for (int i = 0; i < state.n; ++i)
    enc[i] = scalar_encode(lattice.columns[i], nn, m_bound, lattice.s);

  std::set<BigInt> z;
  for (const auto& bucket : state.buckets) {
    BigInt val = 0;
    for (int e : bucket.representative()) val += enc[e];
    if (!z.insert(val).second)
      throw SeparatorInconsistent("two representatives share a lattice image");
  }

  BigInt deg = 0;
  {
    std::vector<BigInt> sorted = enc;
    std::sort(sorted.begin(), sorted.end(), std::greater<BigInt>());
    for (int i = 0; i < lm_.k() && i < static_cast<int>(sorted.size()); ++i) deg += sorted[i];
  }
  if (deg <= plain_cap_) {
    ++plain_calls;
    auto cost = matroid_separate_plain(lm_, enc, z, plain_cap_);
    if (!cost) return std::nullopt;
    return witness_basis(lm_, enc, *cost, plain_cap_);
  }
  ++modp_calls;
  auto found = matroid_separate_modp(lm_, enc, z, prng_);
  if (!found) return std::nullopt;
  return found->second;
}

std::optional<Set> PowersetSeparator::next(const GslState& state) {
  if (state.buckets.empty()) return Set{};
  auto lattice = lattice_columns(state);
  if (lattice.s == 0) return std::nullopt;
  std::vector<VecZ> z;
  for (const auto& bucket : state.buckets) {
    VecZ img(lattice.s, 0);
    for (int e : bucket.representative())
      for (int j = 0; j < lattice.s; ++j) img[j] += lattice.columns[e][j];
    z.push_back(std::move(img));
  }
  return separate_powerset(lattice.columns, z);
}

}  // namespace cqopt
