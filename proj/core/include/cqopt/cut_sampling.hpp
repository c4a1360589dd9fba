#pragma once

#include <map>
#include <optional>

#include "cqopt/cut_structure.hpp"
#include "cqopt/known_graph.hpp"
#include "cqopt/prng.hpp"

namespace cqopt {

// Cache of pair knowledge accumulated across sampling rounds; entries are
// facts already paid for with queries, so later rounds may reuse them.
class EdgeKnowledge {
 public:
  explicit EdgeKnowledge(int n) : n_(n), known_(n, std::vector<char>(n, 0)) {}
  bool known(int u, int v) const { return known_[u][v] != 0; }
  bool edge(int u, int v) const { return known_[u][v] == 2; }
  void learn(int u, int v, bool present) {
    known_[u][v] = known_[v][u] = present ? 2 : 1;
  }

 private:
  int n_;
  std::vector<std::vector<char>> known_;
};

// Percolation sample of the contracted graph G'(p): per-vertex star samples
// with q = 1 - sqrt(1-p), unioned, so every inter-block edge appears
// independently with probability p. With block_subset set, samples the
// induced subgraph G'[S](p). A knowledge cache, when supplied, answers
// membership for already-learned pairs without queries and records newly
// extracted edges.
std::vector<Edge> sample_percolation(CutStructure& cs, const VertexPartition& partition, double p,
                                     Prng& prng,
                                     const std::vector<int>* block_subset = nullptr,
                                     EdgeKnowledge* cache = nullptr);

// k edges uniform without replacement, by doubling percolation probabilities
// p_t = 2^t / n^2 until at least k edges appear, then subsampling.
std::vector<Edge> sample_uniform_edges(CutStructure& cs, long k, Prng& prng);

struct SparsifierResult {
  DenseGraph<double> h;                       // the weighted sparsifier
  std::vector<std::vector<double>> strength;  // per-pair strength estimate
  long levels = 0;
};

// Edge-strength estimation and sparsifier sampling: for each level j with
// kappa_j = n 2^-j and q_j = min(4000 ln n / kappa_j, 1), percolate, strip
// cuts of size <= q_j (4/5) kappa_j inside components, assign strength
// kappa_j / 2 to surviving component pairs, sample those pairs into H with
// expected unit weight, and contract.
SparsifierResult build_sparsifier(CutStructure& cs, double eps, Prng& prng,
                                  EdgeKnowledge* cache = nullptr);

}  // namespace cqopt
