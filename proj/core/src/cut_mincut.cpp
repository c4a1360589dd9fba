#include "cqopt/cut_mincut.hpp"

#include "cqopt/sort.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace cqopt {

namespace {

uint64_t bit(int v) { return 1ull << v; }

uint64_t full_mask(int n) { return (n == 64) ? ~0ull : (1ull << n) - 1; }

// Tournament over candidate sides; returns the comparison-minimal cut.
uint64_t best_cut_of(CutOracle& oracle, const std::vector<uint64_t>& candidates, long& used) {
  uint64_t best = candidates.front();
  for (size_t i = 1; i < candidates.size(); ++i) {
    ++used;
    if (oracle.compare_cuts(candidates[i], best) < 0) best = candidates[i];
  }
  return best;
}

MinCutOutcome brute_force_mincut(CutOracle& oracle) {
  const int n = oracle.n();
  std::vector<uint64_t> candidates;
  for (uint64_t side = 1; side < full_mask(n); ++side)
    if (side & 1) candidates.push_back(side);  // one representative per bipartition
  MinCutOutcome out;
  out.side = best_cut_of(oracle, candidates, out.candidate_comparisons);
  return out;
}

}  // namespace

MinCutOutcome min_cut(CutOracle& oracle, uint64_t seed) {
  const int n = oracle.n();
  if (n < 2) throw TooFewVertices("min cut needs n >= 2");
  if (n <= 4) return brute_force_mincut(oracle);

  Prng prng(seed);
  CutStructure cs(oracle);
  EdgeKnowledge cache(n);
  MinCutOutcome out;

  // Step 1: singleton cuts.
  std::vector<uint64_t> singletons;
  for (int v = 0; v < n; ++v) singletons.push_back(bit(v));
  uint64_t best_singleton = best_cut_of(oracle, singletons, out.candidate_comparisons);

  // Step 2: sparsifier with a small constant accuracy.
  const double eps = 0.1;
  auto sp = build_sparsifier(cs, eps, prng, &cache);

  // Step 3: all cuts of H within (1+3eps) of its minimum, by repeated
  // recursive contraction; contract everything outside them.
  std::set<uint64_t> near_cuts;
  auto h_components = dense_components(sp.h);
  int h_comp_count = *std::max_element(h_components.begin(), h_components.end()) + 1;
  if (h_comp_count > 1) {
    // Disconnected: a zero cut exists; take one H-component directly.
    uint64_t side = 0;
    for (int v = 0; v < n; ++v)
      if (h_components[v] == h_components[0]) side |= bit(v);
    near_cuts.insert((side & 1) ? ~side & full_mask(n) : side);
  } else {
    auto sw = stoer_wagner(sp.h);
    near_cuts.insert(sw.side);
    double threshold = (1.0 + 3.0 * eps) * sw.value + 1e-9;
    long runs = 2L * n * n * static_cast<long>(std::ceil(std::log(n)));
    karger_stein_collect(sp.h, threshold, runs, prng, near_cuts);
  }

  // Blocks: vertices on the same side of every collected cut.
  {
    std::vector<std::vector<char>> sig(n);
    for (uint64_t cut : near_cuts)
      for (int v = 0; v < n; ++v) sig[v].push_back((cut >> v) & 1);
    std::map<std::vector<char>, int> ids;
    VertexPartition partition;
    partition.block_of.resize(n);
    for (int v = 0; v < n; ++v) {
      auto it = ids.find(sig[v]);
      if (it == ids.end()) it = ids.emplace(sig[v], static_cast<int>(ids.size())).first;
      partition.block_of[v] = it->second;
    }
    partition.n_blocks = static_cast<int>(ids.size());

    // Step 4: learn every inter-block edge and take the exact minimum cut of
    // the contracted multigraph.
    std::vector<uint64_t> candidates{best_singleton};
    if (partition.n_blocks >= 2) {
      auto edges = sample_percolation(cs, partition, 1.0, prng, nullptr, &cache);
      DenseGraph<long long> contracted(partition.n_blocks);
      for (auto [u, v] : edges)
        contracted.add_edge(partition.block_of[u], partition.block_of[v], 1);
      auto mc = stoer_wagner(contracted);
      uint64_t side = 0;
      for (int v = 0; v < n; ++v)
        if (mc.side >> partition.block_of[v] & 1) side |= bit(v);
      if (side != 0 && side != full_mask(n)) candidates.push_back(side);
    }
    out.side = best_cut_of(oracle, candidates, out.candidate_comparisons);
  }
  return out;
}

MinCutOutcome ni_mincut_marginal(CutOracle& oracle) {
  const int n = oracle.n();
  if (n < 2) throw TooFewVertices("min cut needs n >= 2");
  MinCutOutcome out;
  if (n == 2) {
    out.side = 1;
    return out;
  }

  // Blocks of contracted vertices, as masks.
  std::vector<uint64_t> blocks(n);
  for (int v = 0; v < n; ++v) blocks[v] = bit(v);
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  std::vector<uint64_t> candidates;
  while (active.size() > 1) {
    // Maximum-adjacency order via marginal comparisons:
    // argmin_u w(cut(S+u)) - w(cut(u)) equals argmax_u w(S, u).
    std::vector<int> rest(active.begin() + 1, active.end());
    uint64_t s_mask = blocks[active[0]];
    int last = active[0], prev = active[0];
    while (!rest.empty()) {
      // With two or more candidates outside S, no union S+u is trivial.
      int chosen = rest[0];
      for (size_t i = 1; i < rest.size(); ++i) {
        int u = rest[i];
        uint64_t su = s_mask | blocks[u];
        uint64_t sc = s_mask | blocks[chosen];
        if (oracle.compare_cut_marginals(su, blocks[u], sc, blocks[chosen]) < 0) chosen = u;
      }
      prev = last;
      last = chosen;
      s_mask |= blocks[chosen];
      rest.erase(std::find(rest.begin(), rest.end(), chosen));
    }
    candidates.push_back(blocks[last]);
    // Contract the two last-added supervertices.
    blocks[prev] |= blocks[last];
    active.erase(std::find(active.begin(), active.end(), last));
  }
  out.side = best_cut_of(oracle, candidates, out.candidate_comparisons);
  return out;
}

namespace {

// Monotone assignments of sorted buckets to dyadic classes: choose boundary
// positions b_1 <= ... <= b_{c-1} in [0, n_buckets].
void enumerate_boundaries(int n_buckets, int n_classes, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& emit, long& budget) {
  if (budget <= 0) return;
  if (static_cast<int>(cur.size()) == n_classes - 1) {
    --budget;
    emit(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int b = lo; b <= n_buckets && budget > 0; ++b) {
    cur.push_back(b);
    enumerate_boundaries(n_buckets, n_classes, cur, emit, budget);
    cur.pop_back();
  }
}

}  // namespace

MinCutOutcome weighted_mincut_fewclasses(CutOracle& oracle, int64_t b, const FewClassConfig& cfg) {
  const int n = oracle.n();
  if (n < 4) throw TooFewVertices("few-class weighted min cut needs n >= 4");
  if (n > cfg.max_n || b > cfg.max_b) throw ScaleExceeded("instance beyond configured caps");

  // Classify vertices by their degree cuts.
  std::vector<int> degree_class(n, -1);
  std::vector<int> reps;  // representative vertex per class
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (size_t c = 0; c < reps.size() && !placed; ++c) {
      if (oracle.compare_cuts(bit(v), bit(reps[c])) == 0) {
        degree_class[v] = static_cast<int>(c);
        placed = true;
      }
    }
    if (!placed) {
      degree_class[v] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  const int r = static_cast<int>(reps.size());
  if (r > cfg.max_degree_classes) throw ScaleExceeded("too many distinct weighted degrees");

  // Dyadic weight classes 0, [1,2), [2,4), ..., guessed value = lower end.
  std::vector<int64_t> dyadic{0};
  for (int64_t w = 1; w <= b; w *= 2) dyadic.push_back(w);
  const int n_classes = static_cast<int>(dyadic.size());

  // For each unordered class pair, sort all vertex pairs by their pair-cut
  // value; descending cut order is ascending edge-weight order.
  struct ClassPairInfo {
    std::vector<std::vector<std::pair<int, int>>> buckets;  // descending cut value
  };
  std::map<std::pair<int, int>, ClassPairInfo> class_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int ci = std::min(degree_class[u], degree_class[v]);
      int cj = std::max(degree_class[u], degree_class[v]);
      class_pairs[{ci, cj}].buckets.push_back({});
      class_pairs[{ci, cj}].buckets.back().push_back({u, v});
    }
  for (auto& [key, info] : class_pairs) {
    std::vector<std::pair<int, int>> pairs;
    for (auto& bucket : info.buckets) pairs.push_back(bucket[0]);
    // Oracle-driven stable merge sort by pair-cut value, descending.
    stable_merge_sort(pairs, [&](const std::pair<int, int>& x, const std::pair<int, int>& y) {
      return -oracle.compare_cuts(bit(x.first) | bit(x.second), bit(y.first) | bit(y.second));
    });
    // Group ties into buckets.
    info.buckets.clear();
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0 && oracle.compare_cuts(bit(pairs[i].first) | bit(pairs[i].second),
                                       bit(pairs[i - 1].first) | bit(pairs[i - 1].second)) == 0)
        info.buckets.back().push_back(pairs[i]);
      else
        info.buckets.push_back({pairs[i]});
    }
  }

  // Enumerate monotone boundary placements per class pair (cross product),
  // collect 2-approximate cuts under each guessed weight assignment.
  std::vector<std::pair<int, int>> keys;
  for (auto& [key, info] : class_pairs) keys.push_back(key);
  std::set<uint64_t> candidate_cuts;
  long budget = cfg.max_guesses;

  std::vector<std::vector<int>> chosen_boundaries(keys.size());
  std::function<void(size_t)> recurse = [&](size_t ki) {
    if (budget <= 0) return;
    if (ki == keys.size()) {
      --budget;
      // Build guessed weights: buckets are in ascending weight order, so
      // boundary positions split them into the dyadic classes.
      std::vector<std::vector<int64_t>> guess(n, std::vector<int64_t>(n, 0));
      for (size_t kk = 0; kk < keys.size(); ++kk) {
        const auto& info = class_pairs[keys[kk]];
        const auto& bounds = chosen_boundaries[kk];
        int nb = static_cast<int>(info.buckets.size());
        for (int bi = 0; bi < nb; ++bi) {
          // Buckets are stored in descending cut order, which is ascending
          // weight order.
          int rank = bi;
          int cls = 0;
          while (cls < n_classes - 1 && bounds[cls] <= rank) ++cls;
          for (auto [u, v] : info.buckets[bi]) guess[u][v] = guess[v][u] = dyadic[cls];
        }
      }
      // All cuts within factor 2 of the guessed minimum.
      uint64_t full = full_mask(n);
      int64_t best = -1;
      std::vector<std::pair<int64_t, uint64_t>> values;
      for (uint64_t side = 1; side < full; ++side) {
        if (!(side & 1)) continue;
        int64_t val = 0;
        for (int u = 0; u < n; ++u)
          if (side >> u & 1)
            for (int v = 0; v < n; ++v)
              if (!(side >> v & 1)) val += guess[u][v];
        values.push_back({val, side});
        if (best < 0 || val < best) best = val;
      }
      for (auto [val, side] : values)
        if (val <= 2 * best) candidate_cuts.insert(side);
      return;
    }
    int nb = static_cast<int>(class_pairs[keys[ki]].buckets.size());
    std::vector<int> cur;
    enumerate_boundaries(nb, n_classes, cur,
                         [&](const std::vector<int>& bounds) {
                           chosen_boundaries[ki] = bounds;
                           recurse(ki + 1);
                         },
                         budget);
  };
  recurse(0);
  if (budget <= 0) throw ScaleExceeded("guess enumeration exceeded its budget");

  std::vector<uint64_t> candidates(candidate_cuts.begin(), candidate_cuts.end());
  MinCutOutcome out;
  out.side = best_cut_of(oracle, candidates, out.candidate_comparisons);
  return out;
}

}  // namespace cqopt
