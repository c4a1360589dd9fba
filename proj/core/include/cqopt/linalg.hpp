#pragma once

#include <optional>
#include <vector>

#include "cqopt/numeric.hpp"

namespace cqopt {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using MatR = std::vector<VecR>;  // row-major
using MatZ = std::vector<VecZ>;

int rational_rank(MatR m);

// Solves A x = b for square A. Returns nullopt when A is singular.
std::optional<VecR> solve_square(MatR a, VecR b);

Rational determinant(MatR a);

// Integer row-echelon basis for the rational row span of integer vectors.
// Supports exact membership tests without leaving integer arithmetic.
class IntRowSpan {
 public:
  int dim() const { return static_cast<int>(rows_.size()); }
  bool member(const VecZ& v) const;
  // Adds v to the span. Returns false (and leaves the span unchanged) when v
  // is already a member.
  bool add(const VecZ& v);
  const MatZ& echelon_rows() const { return rows_; }

 private:
  MatZ rows_;                 // echelon form, one pivot per row
  std::vector<int> pivots_;   // pivot column per row, strictly increasing
};

// Basis of the saturated integer kernel {x in Z^n : A x = 0}, computed by
// unimodular column reduction (Hermite-style). Basis size is n - rank(A).
MatZ integer_kernel(const MatZ& a, int n_cols);

// Expresses v as a rational combination of the given basis rows, if possible.
std::optional<VecR> in_rational_rowspan(const MatZ& basis, const VecZ& v);

}  // namespace cqopt
