#pragma once

#include <memory>
#include <optional>

#include "cqopt/gsl.hpp"
#include "cqopt/separation.hpp"

namespace cqopt {

enum class QueryMode { Comparison, EqualityOnly };

struct DecisionOutcome {
  bool answer = false;
  std::optional<Set> witness;
  GslState state;
  long compares = 0;
  long equalities = 0;
  long constants = 0;
  long separation_steps = 0;
};

// k-SUM: do k distinct elements sum to zero? Sorts all k-sets via GSL over
// the rank-k uniform matroid (Vandermonde representation), then searches the
// bucket representatives against the constant 0.
DecisionOutcome ksum_decide(const std::vector<int64_t>& values, int64_t bound, int k,
                            QueryMode mode, uint64_t seed);

// SUBSET-SUM against target t, GSL over the full powerset with the dynamic
// programming separator.
DecisionOutcome subsetsum_decide(const std::vector<int64_t>& values, int64_t bound,
                                 const Rational& target, QueryMode mode, uint64_t seed);

struct ApbOutcome {
  GslState state;
  // order[i][j] = rank of a_i + b_j among the distinct sums (comparison mode)
  // or an arbitrary-but-consistent class id (equality mode).
  std::vector<std::vector<int>> order;
  long compares = 0;
  long equalities = 0;
  long separation_steps = 0;
};

// Sorting A+B where only pairs {a, b} may be compared: GSL over the bases of
// the two-part partition matroid with unit capacities. a_values and b_values
// must have equal length.
ApbOutcome apb_sort(const std::vector<int64_t>& a_values, const std::vector<int64_t>& b_values,
                    int64_t bound, QueryMode mode, uint64_t seed);

}  // namespace cqopt
