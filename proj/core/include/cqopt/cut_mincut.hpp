#pragma once

#include <optional>

#include "cqopt/cut_sampling.hpp"

namespace cqopt {

struct MinCutOutcome {
  uint64_t side = 0;           // one side of the chosen cut (nontrivial)
  long candidate_comparisons = 0;  // oracle comparisons spent ranking candidates
};

// Randomized min-cut pipeline: singleton tournament, sparsifier (eps = 1/10),
// near-minimum-cut enumeration of H by repeated recursive contraction,
// contraction of all edges outside every near-minimum cut, exact min cut of
// the learned contracted graph, and a final comparison tournament.
MinCutOutcome min_cut(CutOracle& oracle, uint64_t seed);

// Exact min cut for arbitrary nonnegative weights under the stronger oracle
// that compares cut marginals: maximum-adjacency orderings driven entirely by
// marginal comparisons, pendant cuts ranked by plain cut comparisons.
MinCutOutcome ni_mincut_marginal(CutOracle& oracle);

struct FewClassConfig {
  int max_n = 12;
  int64_t max_b = 4;
  int max_degree_classes = 2;
  long max_guesses = 2000000;
};

// Weighted min cut when vertices fall into r distinct weighted-degree
// classes: sorts edge-pair cuts within class pairs, enumerates monotone
// placements of the dyadic weight boundaries, collects 2-approximate cuts of
// every guess, and returns the comparison-minimal candidate.
MinCutOutcome weighted_mincut_fewclasses(CutOracle& oracle, int64_t b,
                                         const FewClassConfig& cfg = {});

}  // namespace cqopt
