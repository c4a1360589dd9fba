#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "cqopt/prng.hpp"

namespace cqopt {

// Dense undirected weighted graph on at most 64 vertices, used for graphs the
// algorithms hold explicitly (sparsifiers, sampled subgraphs, contractions).
// Vertex subsets are uint64_t masks.
template <typename W>
struct DenseGraph {
  int n = 0;
  std::vector<std::vector<W>> w;  // symmetric, zero diagonal

  explicit DenseGraph(int n_ = 0) : n(n_), w(n_, std::vector<W>(n_, W(0))) {}

  void add_edge(int u, int v, W weight) {
    w[u][v] += weight;
    w[v][u] += weight;
  }

  W cut_value(uint64_t side) const {
    W total(0);
    for (int u = 0; u < n; ++u) {
      if (!(side >> u & 1)) continue;
      for (int v = 0; v < n; ++v)
        if (!(side >> v & 1)) total += w[u][v];
    }
    return total;
  }

  long edge_count() const {
    long m = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (w[u][v] != W(0)) ++m;
    return m;
  }
};

// Connected components over nonzero-weight edges; returns block id per vertex.
template <typename W>
std::vector<int> dense_components(const DenseGraph<W>& g) {
  std::vector<int> comp(g.n, -1);
  int next = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < g.n; ++v)
        if (g.w[u][v] != W(0) && comp[v] < 0) {
          comp[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

struct MinCutResult {
  double value = 0;
  uint64_t side = 0;  // canonical: lowest vertex excluded
};

// Stoer-Wagner global minimum cut on an explicit graph. Requires n >= 2 and a
// connected graph for a positive answer; disconnected graphs yield value 0
// with one component as the side.
template <typename W>
MinCutResult stoer_wagner(const DenseGraph<W>& g);

// Repeated Karger-Stein recursive contraction collecting every distinct cut
// encountered at a recursion leaf whose weight is at most `threshold`.
// Cut masks are canonicalized (bit 0 cleared side).
void karger_stein_collect(const DenseGraph<double>& g, double threshold, long runs, Prng& prng,
                          std::set<uint64_t>& out_cuts);

extern template MinCutResult stoer_wagner<double>(const DenseGraph<double>&);
extern template MinCutResult stoer_wagner<long long>(const DenseGraph<long long>&);

}  // namespace cqopt
