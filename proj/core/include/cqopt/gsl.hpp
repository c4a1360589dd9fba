#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqopt/linalg.hpp"
#include "cqopt/oracle.hpp"

namespace cqopt {

struct SeparatorInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Difference of indicator vectors, entries in {-1, 0, 1}.
VecZ indicator_diff(const Set& a, const Set& b, int n);

// Weight class of feasible sets. The representative is the first member.
struct GslBucket {
  std::vector<Set> members;
  const Set& representative() const { return members.front(); }
};

// Subspace spanned by same-weight indicator differences. Every basis vector
// is orthogonal to the hidden weight vector.
class LearnedSubspace {
 public:
  int dim() const { return span_.dim(); }
  bool member(const VecZ& v) const { return span_.member(v); }
  void add(const VecZ& v) {
    raw_.push_back(v);
    if (!span_.add(v)) throw SeparatorInconsistent("new direction already in subspace");
  }
  // Raw difference vectors 1_S - 1_T; rows of the matrix fed to the integer
  // nullspace computation.
  const MatZ& raw_rows() const { return raw_; }
  const MatZ& echelon_rows() const { return span_.echelon_rows(); }

 private:
  IntRowSpan span_;
  MatZ raw_;
};

struct GslState {
  int n = 0;
  bool ordered = true;  // false for the equality-only variant
  std::vector<GslBucket> buckets;
  LearnedSubspace subspace;
  long separation_steps = 0;

  int potential() const { return subspace.dim() + static_cast<int>(buckets.size()); }

  // Bucket rank of x: the unique i with x - r_i in the learned subspace, or
  // nullopt while still unknown.
  std::optional<int> classify(const Set& x) const;

  std::string to_json() const;
  static GslState from_json(const std::string& text);
};

// Supplies points outside every affine subspace A_i, or reports exhaustion.
class GslSeparator {
 public:
  virtual ~GslSeparator() = default;
  virtual std::optional<Set> next(const GslState& state) = 0;
};

// Fallback separator: scans an enumerable family in lexicographic indicator
// order and returns the first unclassified set.
class EnumerationSeparator : public GslSeparator {
 public:
  explicit EnumerationSeparator(const FeasibleFamily& family);
  std::optional<Set> next(const GslState& state) override;

 private:
  std::vector<Set> all_;
};

struct GslOptions {
  // Iteration guard 2nB + n for integer mode; 0 disables the check.
  long max_steps = 0;
};

// Global subspace learning: repeatedly separate a point whose weight class is
// not yet inferable, binary-search its weight among bucket representatives,
// and either extend the subspace (equal weight found) or open a new bucket.
GslState gsl_run(WeightOracle& oracle, GslSeparator& separator, const GslOptions& opts = {});

// Equality-query variant: buckets stay unordered; each new point is tested
// against representatives in insertion order.
GslState gsl_run_equality_only(WeightOracle& oracle, GslSeparator& separator,
                               const GslOptions& opts = {});

}  // namespace cqopt
