#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqopt/cut_oracle.hpp"
#include "cqopt/numeric.hpp"
#include "cqopt/prng.hpp"

namespace cqopt {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  std::string solver;
  int n = 8;
  int64_t b = 3;
  int k = 3;
  double eps = 0.1;
  double p = 0.35;
  uint64_t seed = 1;
  int reps = 10;
  std::string out_json;  // empty: do not write
  std::string out_csv;
};

struct RunRecord {
  int run = 0;
  bool correct = false;
  long compares = 0;
  long equalities = 0;
  long constants = 0;
  long marginals = 0;
  double budget_ratio = 0;  // measured / formula
  double wall_ms = 0;
};

struct RunReport {
  std::string solver;
  std::string budget_formula;
  int reps = 0;
  double pass_rate = 0;
  long max_queries = 0;
  double mean_queries = 0;
  double max_budget_ratio = 0;
  std::vector<RunRecord> runs;

  std::string to_json(bool include_wall = false) const;
  std::string to_csv() const;
};

// Runs the named solver suite: deterministic instance stream from the seed,
// every run cross-checked against its brute-force oracle, budget ratios
// against the stated query-complexity formulas.
RunReport run_suite(const ExperimentConfig& config);

// The two 4-vertex weighted universes whose full cut order is identical even
// though the heaviest edge at vertex a differs. Returns true when both
// orders match the expected chain.
bool table_fixture_heavy_edge();

// Same fixture with an overridden w_cd: detects perturbations that break the
// listed order.
bool heavy_edge_fixture_with(const Rational& w_cd);

// Verification oracles, independent of the solver paths they check.
// Global min cut by repeated max flow against a fixed source.
Rational reference_mincut_value(const HiddenGraph& g);
// Standard Bellman-Ford on hidden lengths; nullopt when t is unreachable or a
// negative cycle influences the s-t distance.
std::optional<Rational> reference_shortest_path(int n,
                                                const std::vector<std::pair<int, int>>& edges,
                                                const VecR& lengths, int s, int t);

// Instance generators shared by the suites and the test corpus.
namespace gen {

std::vector<uint64_t> random_subsets(int n, int count, Prng& prng);
std::vector<int64_t> int_weights(int n, int64_t b, Prng& prng);
VecR rational_weights(int n, Prng& prng);
std::vector<Edge> gnp_edges(int n, double p, Prng& prng);
// Rank-k rational matrix with small integer entries and full row rank.
std::vector<std::vector<Rational>> linear_matroid_matrix(int k, int n, int max_entry, Prng& prng);

}  // namespace gen

}  // namespace cqopt
