#include "cqopt/apps.hpp"

#include <algorithm>

namespace cqopt {

namespace {

GslState run_gsl(WeightOracle& oracle, GslSeparator& sep, QueryMode mode, long max_steps) {
  GslOptions opts;
  opts.max_steps = max_steps;
  return mode == QueryMode::Comparison ? gsl_run(oracle, sep, opts)
                                       : gsl_run_equality_only(oracle, sep, opts);
}

// Locates a representative with weight exactly t. Ordered states use binary
// search; unordered (equality-mode) states scan. Constant comparisons only.
std::optional<int> find_target_bucket(GslState& state, WeightOracle& oracle, const Rational& t) {
  if (state.ordered) {
    int lo = 0, hi = static_cast<int>(state.buckets.size()) - 1;
    while (lo <= hi) {
      int mid = lo + (hi - lo) / 2;
      Sign s = oracle.compare_constant(state.buckets[mid].representative(), t);
      if (s == 0) return mid;
      if (s < 0)
        lo = mid + 1;
      else
        hi = mid - 1;
    }
    return std::nullopt;
  }
  for (size_t i = 0; i < state.buckets.size(); ++i) {
    if (oracle.compare_constant(state.buckets[i].representative(), t) == 0)
      return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

DecisionOutcome ksum_decide(const std::vector<int64_t>& values, int64_t bound, int k,
                            QueryMode mode, uint64_t seed) {
  const int n = static_cast<int>(values.size());
  KSubsetFamily family(n, k);
  WeightOracle oracle(HiddenWeights::integers(values, bound), family);
  LinearMatroid rep = uniform_matroid_rep(n, k);
  LinearMatroidSeparator sep(rep, seed);
  DecisionOutcome out;
  out.state = run_gsl(oracle, sep, mode, 2L * n * bound + n);
  out.separation_steps = out.state.separation_steps;
  auto hit = find_target_bucket(out.state, oracle, Rational(0));
  out.answer = hit.has_value();
  if (hit) out.witness = out.state.buckets[*hit].representative();
  out.compares = oracle.ledger().count_compare;
  out.equalities = oracle.ledger().count_equality;
  out.constants = oracle.ledger().count_constant;
  return out;
}

DecisionOutcome subsetsum_decide(const std::vector<int64_t>& values, int64_t bound,
                                 const Rational& target, QueryMode mode, uint64_t seed) {
  (void)seed;
  const int n = static_cast<int>(values.size());
  PowersetFamily family(n);
  WeightOracle oracle(HiddenWeights::integers(values, bound), family);
  PowersetSeparator sep;
  DecisionOutcome out;
  out.state = run_gsl(oracle, sep, mode, 2L * n * bound + n);
  out.separation_steps = out.state.separation_steps;
  auto hit = find_target_bucket(out.state, oracle, target);
  out.answer = hit.has_value();
  if (hit) out.witness = out.state.buckets[*hit].representative();
  out.compares = oracle.ledger().count_compare;
  out.equalities = oracle.ledger().count_equality;
  out.constants = oracle.ledger().count_constant;
  return out;
}

ApbOutcome apb_sort(const std::vector<int64_t>& a_values, const std::vector<int64_t>& b_values,
                    int64_t bound, QueryMode mode, uint64_t seed) {
  if (a_values.size() != b_values.size())
    throw std::invalid_argument("A and B must have equal cardinality");
  const int half = static_cast<int>(a_values.size());
  const int n = 2 * half;
  std::vector<int64_t> all(a_values);
  all.insert(all.end(), b_values.begin(), b_values.end());

  // Feasible sets are exactly the partition-matroid bases {a, b}.
  PredicateFamily family(n, [half](const Set& s) {
    return s.size() == 2 && s[0] < half && s[1] >= half;
  });
  WeightOracle oracle(HiddenWeights::integers(all, bound), family);
  LinearMatroid rep = partition_matroid_rep(half, half);
  LinearMatroidSeparator sep(rep, seed);

  ApbOutcome out;
  out.state = run_gsl(oracle, sep, mode, 2L * n * bound + n);
  out.separation_steps = out.state.separation_steps;
  out.order.assign(half, std::vector<int>(half, -1));
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) {
      auto cls = out.state.classify({i, half + j});
      if (!cls) throw std::runtime_error("A+B state failed to classify a pair");
      out.order[i][j] = *cls;
    }
  out.compares = oracle.ledger().count_compare;
  out.equalities = oracle.ledger().count_equality;
  return out;
}

}  // namespace cqopt
