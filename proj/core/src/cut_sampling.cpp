#include "cqopt/cut_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cqopt {

std::vector<Edge> sample_percolation(CutStructure& cs, const VertexPartition& partition, double p,
                                     Prng& prng, const std::vector<int>* block_subset,
                                     EdgeKnowledge* cache) {
  const int n = cs.n();
  if (n < 4) throw TooFewVertices("percolation sampling needs n >= 4");
  if (p < 0 || p > 1) throw std::invalid_argument("sampling probability outside [0, 1]");
  std::vector<char> block_in(partition.n_blocks, 1);
  if (block_subset) {
    std::fill(block_in.begin(), block_in.end(), 0);
    for (int b : *block_subset) block_in[b] = 1;
  }
  if (p == 0) return {};
  const double q = 1.0 - std::sqrt(1.0 - p);

  std::set<Edge> sampled;
  for (int u = 0; u < n; ++u) {
    if (!block_in[partition.block_of[u]]) continue;
    // Star sample: candidate targets outside u's block, each kept with
    // probability q.
    std::vector<int> t;
    std::vector<int> t_known_edges;
    for (int v = 0; v < n; ++v) {
      if (v == u || partition.block_of[v] == partition.block_of[u]) continue;
      if (!block_in[partition.block_of[v]]) continue;
      if (!prng.bernoulli(q)) continue;
      if (cache && cache->known(u, v)) {
        if (cache->edge(u, v)) t_known_edges.push_back(v);
      } else {
        t.push_back(v);
      }
    }
    for (int v : t_known_edges) sampled.insert({std::min(u, v), std::max(u, v)});
    if (!t.empty()) {
      auto found = cs.extract_edges(u, t, static_cast<long>(t.size()));
      std::set<int> hit;
      for (auto e : found) {
        sampled.insert(e);
        hit.insert(e.first == u ? e.second : e.first);
        if (cache) cache->learn(e.first, e.second, true);
      }
      if (cache)
        for (int v : t)
          if (!hit.count(v)) cache->learn(u, v, false);
    }
  }
  return {sampled.begin(), sampled.end()};
}

std::vector<Edge> sample_uniform_edges(CutStructure& cs, long k, Prng& prng) {
  const int n = cs.n();
  if (n < 4) throw TooFewVertices("uniform edge sampling needs n >= 4");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  auto partition = VertexPartition::singletons(n);
  const double n2 = static_cast<double>(n) * n;
  std::vector<Edge> pool;
  for (int t = 0;; ++t) {
    double p = std::min(std::pow(2.0, t) / n2, 1.0);
    pool = sample_percolation(cs, partition, p, prng);
    if (static_cast<long>(pool.size()) >= k) break;
    if (p >= 1.0) throw NotEnoughEdges("graph has fewer than k edges");
  }
  // Uniform subsample of k edges from the percolation pool.
  for (size_t i = 0; i < pool.size(); ++i) {
    size_t j = i + prng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {

// Repeatedly removes cuts of size <= threshold inside components of the
// sampled block graph; returns the final component id per block.
std::vector<int> strip_small_cuts(DenseGraph<long long> g, double threshold) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto comp = dense_components(g);
    int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < nc && !changed; ++c) {
      std::vector<int> members;
      for (int v = 0; v < g.n; ++v)
        if (comp[v] == c) members.push_back(v);
      if (members.size() < 2) continue;
      DenseGraph<long long> sub(static_cast<int>(members.size()));
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (g.w[members[i]][members[j]] > 0)
            sub.add_edge(static_cast<int>(i), static_cast<int>(j), g.w[members[i]][members[j]]);
      auto mc = stoer_wagner(sub);
      if (mc.value <= threshold) {
        for (size_t i = 0; i < members.size(); ++i) {
          bool side_i = (mc.side >> i) & 1;
          for (size_t j = 0; j < members.size(); ++j) {
            bool side_j = (mc.side >> j) & 1;
            if (side_i != side_j) g.w[members[i]][members[j]] = 0;
          }
        }
        changed = true;
      }
    }
  }
  return dense_components(g);
}

}  // namespace

SparsifierResult build_sparsifier(CutStructure& cs, double eps, Prng& prng, EdgeKnowledge* cache) {
  const int n = cs.n();
  if (n < 4) throw TooFewVertices("sparsifier needs n >= 4");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0, 1)");

  SparsifierResult out;
  out.h = DenseGraph<double>(n);
  out.strength.assign(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<char>> assigned(n, std::vector<char>(n, 0));

  auto partition = VertexPartition::singletons(n);
  const int max_level = static_cast<int>(std::ceil(std::log2(std::max(2, n)))) + 1;
  for (int j = 0; j <= max_level && partition.n_blocks > 1; ++j) {
    ++out.levels;
    const double kappa = static_cast<double>(n) * std::pow(2.0, -j);
    const double qj = std::min(100.0 * 40.0 * std::log(n) / kappa, 1.0);

    auto sample = sample_percolation(cs, partition, qj, prng, nullptr, cache);

    // Work over the contracted graph: nodes are partition blocks.
    DenseGraph<long long> block_graph(partition.n_blocks);
    for (auto [u, v] : sample)
      block_graph.add_edge(partition.block_of[u], partition.block_of[v], 1);
    auto comp_of_block = strip_small_cuts(block_graph, qj * 0.8 * kappa);
    int nc = *std::max_element(comp_of_block.begin(), comp_of_block.end()) + 1;

    std::vector<std::vector<int>> comp_blocks(nc);
    for (int b = 0; b < partition.n_blocks; ++b) comp_blocks[comp_of_block[b]].push_back(b);

    for (int c = 0; c < nc; ++c) {
      const auto& blocks = comp_blocks[c];
      if (blocks.size() < 2) continue;
      std::vector<int> members;
      std::vector<char> in_comp(partition.n_blocks, 0);
      for (int b : blocks) in_comp[b] = 1;
      for (int v = 0; v < n; ++v)
        if (in_comp[partition.block_of[v]]) members.push_back(v);
      // Strength for every vertex pair first co-located here.
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b2 = a + 1; b2 < members.size(); ++b2) {
          int x = members[a], y = members[b2];
          if (!assigned[x][y]) {
            assigned[x][y] = assigned[y][x] = 1;
            out.strength[x][y] = out.strength[y][x] = kappa / 2.0;
          }
        }
      // Sparsifier sampling over the induced contracted subgraph.
      double p_h = std::min(2.0 * qj / (eps * eps), 1.0);
      double weight = (p_h >= 1.0) ? 1.0 : (eps * eps) / (2.0 * qj);
      auto h_edges = sample_percolation(cs, partition, p_h, prng, &blocks, cache);
      for (auto [x, y] : h_edges) out.h.add_edge(x, y, weight);
    }

    // Contract each component's blocks.
    VertexPartition next;
    next.block_of.assign(n, -1);
    for (int v = 0; v < n; ++v) next.block_of[v] = comp_of_block[partition.block_of[v]];
    next.n_blocks = nc;
    partition = std::move(next);
  }
  return out;
}

}  // namespace cqopt
