#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cqopt/numeric.hpp"
#include "cqopt/oracle.hpp"

namespace cqopt {

struct Unreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidWalk : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Directed graph with public structure and hidden rational edge lengths.
// Walks are vertex sequences; only s-t walks may be compared.
class WalkOracle {
 public:
  WalkOracle(int n, std::vector<std::pair<int, int>> edges, VecR lengths, int s, int t);

  int n() const { return n_; }
  int s() const { return s_; }
  int t() const { return t_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return edge_id_[u][v] >= 0; }

  // sign(len(w1) - len(w2)); both operands must be genuine s-t walks.
  Sign compare_walks(const std::vector<int>& w1, const std::vector<int>& w2);

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }
  const VecR& hidden_lengths_for_testing() const { return lengths_; }

 private:
  Rational walk_length(const std::vector<int>& walk) const;

  int n_, s_, t_;
  std::vector<std::pair<int, int>> edges_;
  VecR lengths_;
  std::vector<std::vector<int>> edge_id_;
  QueryLedger ledger_;
};

struct NegativeCycle {
  std::vector<int> cycle;  // vertex sequence, cycle[0] == cycle.back()
  bool certified = false;  // one walk comparison confirmed the negative sign
};

using WalkSearchResult = std::variant<std::vector<int>, NegativeCycle>;

// Bellman-Ford over s-t walk comparisons: relaxations compare candidate
// prefixes extended by a fixed v-to-t walk; returns the shortest path or a
// certified negative cycle.
WalkSearchResult shortest_path_walk_comparisons(WalkOracle& oracle);

}  // namespace cqopt
