#include "cqopt/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace cqopt {

int rational_rank(MatR m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    for (size_t r = 0; r < rows; ++r) {
      if (r != pr && m[r][c] != 0) {
        Rational f = m[r][c] / m[pr][c];
        for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[pr][k];
      }
    }
    ++pr;
    ++rank;
  }
  return rank;
}

std::optional<VecR> solve_square(MatR a, VecR b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r != c && a[r][c] != 0) {
        Rational f = a[r][c] / a[c][c];
        for (size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
      }
    }
  }
  VecR x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

Rational determinant(MatR a) {
  size_t n = a.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] != 0) {
        Rational f = a[r][c] / a[c][c];
        for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      }
    }
  }
  return det;
}

namespace {

// Reduces v against the echelon rows by cross-multiplication; the result is
// an integer vector that is zero iff v lies in the rational row span.
VecZ reduce_against(const MatZ& rows, const std::vector<int>& pivots, VecZ v) {
  for (size_t i = 0; i < rows.size(); ++i) {
    int p = pivots[i];
    if (v[p] == 0) continue;
    BigInt g = boost::multiprecision::gcd(v[p], rows[i][p]);
    BigInt mul_v = rows[i][p] / g;
    BigInt mul_r = v[p] / g;
    for (size_t k = 0; k < v.size(); ++k) v[k] = v[k] * mul_v - rows[i][k] * mul_r;
  }
  return v;
}

void normalize_row(VecZ& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
  }
}

}  // namespace

bool IntRowSpan::member(const VecZ& v) const {
  return is_zero(reduce_against(rows_, pivots_, v));
}

bool IntRowSpan::add(const VecZ& v) {
  VecZ red = reduce_against(rows_, pivots_, v);
  if (is_zero(red)) return false;
  normalize_row(red);
  int pivot = 0;
  while (red[pivot] == 0) ++pivot;
  size_t pos = 0;
  while (pos < rows_.size() && pivots_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(red));
  pivots_.insert(pivots_.begin() + pos, pivot);
  return true;
}

MatZ integer_kernel(const MatZ& a, int n_cols) {
  // Column-style Hermite reduction: work = A, u = I; gcd column operations
  // (unimodular) clear each pivot row. Columns of u over zero columns of the
  // reduced work matrix form a saturated basis of ker_Z(A).
  size_t m = a.size();
  MatZ work(m, VecZ(n_cols, 0));
  for (size_t r = 0; r < m; ++r)
    for (int c = 0; c < n_cols; ++c) work[r][c] = a[r][c];
  MatZ u(n_cols, VecZ(n_cols, 0));
  for (int i = 0; i < n_cols; ++i) u[i][i] = 1;  // u stored column-major: u[c] is column c

  int pivot_col = 0;
  std::vector<bool> is_pivot_col(n_cols, false);
  for (size_t r = 0; r < m && pivot_col < n_cols; ++r) {
    // Make columns pivot_col..n-1 of row r into (g, 0, ..., 0) via gcd ops.
    int nz = -1;
    for (int c = pivot_col; c < n_cols; ++c)
      if (work[r][c] != 0) { nz = c; break; }
    if (nz == -1) continue;
    if (nz != pivot_col) {
      for (size_t rr = 0; rr < m; ++rr) std::swap(work[rr][nz], work[rr][pivot_col]);
      std::swap(u[nz], u[pivot_col]);
    }
    for (int c = pivot_col + 1; c < n_cols; ++c) {
      while (work[r][c] != 0) {
        BigInt q = work[r][pivot_col] / work[r][c];
        for (size_t rr = 0; rr < m; ++rr) work[rr][pivot_col] -= q * work[rr][c];
        for (int k = 0; k < n_cols; ++k) u[pivot_col][k] -= q * u[c][k];
        for (size_t rr = 0; rr < m; ++rr) std::swap(work[rr][pivot_col], work[rr][c]);
        std::swap(u[pivot_col], u[c]);
      }
    }
    is_pivot_col[pivot_col] = true;
    ++pivot_col;
  }

  MatZ kernel;
  for (int c = 0; c < n_cols; ++c) {
    bool zero_col = true;
    for (size_t r = 0; r < m; ++r)
      if (work[r][c] != 0) { zero_col = false; break; }
    if (zero_col) {
      VecZ v = u[c];
      normalize_row(v);
      kernel.push_back(std::move(v));
    }
  }
  return kernel;
}

std::optional<VecR> in_rational_rowspan(const MatZ& basis, const VecZ& v) {
  // Solve x * basis = v by Gaussian elimination on the transposed system.
  size_t s = basis.size();
  if (s == 0) return is_zero(v) ? std::optional<VecR>(VecR{}) : std::nullopt;
  size_t n = basis[0].size();
  // Augmented system: columns are basis vectors, rhs is v (n equations, s unknowns).
  MatR a(n, VecR(s + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < s; ++c) a[r][c] = Rational(basis[c][r]);
    a[r][s] = Rational(v[r]);
  }
  size_t pr = 0;
  std::vector<int> pivot_of_col(s, -1);
  for (size_t c = 0; c < s && pr < n; ++c) {
    size_t piv = pr;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[pr], a[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r != pr && a[r][c] != 0) {
        Rational f = a[r][c] / a[pr][c];
        for (size_t k = c; k <= s; ++k) a[r][k] -= f * a[pr][k];
      }
    }
    pivot_of_col[c] = static_cast<int>(pr);
    ++pr;
  }
  // Inconsistent if a zero row has nonzero rhs.
  for (size_t r = pr; r < n; ++r)
    if (a[r][s] != 0) return std::nullopt;
  VecR x(s, Rational(0));
  for (size_t c = 0; c < s; ++c)
    if (pivot_of_col[c] >= 0) x[c] = a[pivot_of_col[c]][s] / a[pivot_of_col[c]][c];
  return x;
}

}  // namespace cqopt
