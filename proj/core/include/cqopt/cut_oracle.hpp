#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cqopt/numeric.hpp"
#include "cqopt/oracle.hpp"

namespace cqopt {

struct TrivialCut : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooFewVertices : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IsolatedVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEnoughEdges : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Unidentifiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ScaleExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;  // u < v

// A simple undirected graph, hidden behind the cut oracle. Unweighted graphs
// have unit edge weights; weighted modes carry nonnegative rational weights.
class HiddenGraph {
 public:
  static HiddenGraph simple(int n, const std::vector<Edge>& edges);
  static HiddenGraph weighted(int n, const std::vector<std::pair<Edge, Rational>>& edges);

  int n() const { return n_; }
  bool weighted_mode() const { return weighted_; }
  uint64_t full_mask() const { return (n_ == 64) ? ~0ull : (1ull << n_) - 1; }

  Rational cut_weight(uint64_t side) const;
  bool has_edge(int u, int v) const { return adj_[u][v]; }
  const Rational& edge_weight(int u, int v) const { return w_[u][v]; }
  std::vector<Edge> edges() const;
  int degree(int u) const;

 private:
  HiddenGraph(int n, bool weighted);
  int n_ = 0;
  bool weighted_ = false;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<Rational>> w_;
};

// Comparison oracle over cuts of the hidden graph. Operands are vertex sides
// encoded as bitmasks; the trivial sides 0 and V are rejected.
class CutOracle {
 public:
  explicit CutOracle(HiddenGraph g) : g_(std::move(g)) {}

  int n() const { return g_.n(); }

  // sign(w(cut S) - w(cut T)).
  Sign compare_cuts(uint64_t s, uint64_t t);

  // Stronger oracle kind: sign((w(cut S) - w(cut S2)) - (w(cut T) - w(cut T2))).
  Sign compare_cut_marginals(uint64_t s, uint64_t s2, uint64_t t, uint64_t t2);

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

  const HiddenGraph& hidden_graph_for_testing() const { return g_; }

 private:
  void require_nontrivial(uint64_t side) const {
    if (side == 0 || side == g_.full_mask()) throw TrivialCut("trivial cut operand");
  }
  static std::vector<int> to_list(uint64_t mask, int n);

  HiddenGraph g_;
  QueryLedger ledger_;
};

// Blocks of a contracted graph, each block a mask of original vertices.
struct VertexPartition {
  std::vector<int> block_of;  // per original vertex
  int n_blocks = 0;

  static VertexPartition singletons(int n) {
    VertexPartition p;
    p.block_of.resize(n);
    for (int i = 0; i < n; ++i) p.block_of[i] = i;
    p.n_blocks = n;
    return p;
  }
};

}  // namespace cqopt
