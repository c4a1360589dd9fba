#include "cqopt/known_graph.hpp"

#include <algorithm>
#include <cmath>

namespace cqopt {

template <typename W>
MinCutResult stoer_wagner(const DenseGraph<W>& g) {
  const int n = g.n;
  MinCutResult best;
  if (n < 2) return best;
  uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;

  auto comp = dense_components(g);
  int n_comp = *std::max_element(comp.begin(), comp.end()) + 1;
  if (n_comp > 1) {
    uint64_t side = 0;
    for (int v = 0; v < n; ++v)
      if (comp[v] == comp[0]) side |= 1ull << v;
    best.value = 0;
    best.side = (side & 1) ? ~side & full : side;
    return best;
  }

  std::vector<std::vector<W>> w = g.w;
  std::vector<uint64_t> group(n);
  for (int v = 0; v < n; ++v) group[v] = 1ull << v;
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  bool first = true;
  double best_val = 0;
  while (active.size() > 1) {
    // One maximum-adjacency phase.
    std::vector<char> added(n, 0);
    std::vector<W> conn(n, W(0));
    int cur = active[0];
    added[cur] = 1;
    int last = cur, prev = cur;
    for (size_t step = 1; step < active.size(); ++step) {
      for (int v : active)
        if (!added[v]) conn[v] += w[cur][v];
      int next = -1;
      for (int v : active)
        if (!added[v] && (next < 0 || conn[v] > conn[next])) next = v;
      prev = cur;
      cur = next;
      added[next] = 1;
    }
    last = cur;
    double phase_val = 0;
    for (int v : active)
      if (v != last) phase_val += static_cast<double>(w[last][v]);
    if (first || phase_val < best_val) {
      first = false;
      best_val = phase_val;
      best.value = phase_val;
      best.side = group[last];
    }
    // Merge last into prev.
    group[prev] |= group[last];
    for (int v : active) {
      if (v == last || v == prev) continue;
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    active.erase(std::find(active.begin(), active.end(), last));
  }
  if (best.side & 1) best.side = ~best.side & full;
  return best;
}

template MinCutResult stoer_wagner<double>(const DenseGraph<double>&);
template MinCutResult stoer_wagner<long long>(const DenseGraph<long long>&);

namespace {

// Contraction state over the first `a` slots of a fixed-stride adjacency;
// contraction swaps the last live slot in, so a merge costs O(a). States are
// compacted to their live size only when a recursion branch copies them.
struct KsState {
  int a = 0;       // live supervertex count
  int stride = 0;  // row stride of w
  std::vector<double> w;
  std::vector<double> degree;
  std::vector<uint64_t> group;

  double at(int i, int j) const { return w[static_cast<size_t>(i) * stride + j]; }

  KsState compacted() const {
    KsState out;
    out.a = out.stride = a;
    out.w.resize(static_cast<size_t>(a) * a);
    out.degree.assign(degree.begin(), degree.begin() + a);
    out.group.assign(group.begin(), group.begin() + a);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) out.w[static_cast<size_t>(i) * a + j] = at(i, j);
    return out;
  }
};

// Contracts a random edge chosen with probability proportional to weight.
bool contract_once(KsState& st, Prng& prng) {
  double total = 0;
  for (int v = 0; v < st.a; ++v) total += st.degree[v];
  if (total <= 0) return false;
  double pick = prng.uniform() * total;
  int u = st.a - 1;
  for (int v = 0; v < st.a; ++v) {
    if (pick < st.degree[v]) { u = v; break; }
    pick -= st.degree[v];
  }
  double pick2 = prng.uniform() * st.degree[u];
  int other = -1;
  for (int v = 0; v < st.a; ++v) {
    if (v == u) continue;
    double wv = st.at(u, v);
    if (wv <= 0) continue;
    if (pick2 < wv) { other = v; break; }
    pick2 -= wv;
  }
  if (other < 0) {
    for (int v = 0; v < st.a; ++v)
      if (v != u && st.at(u, v) > 0) { other = v; break; }
    if (other < 0) return false;
  }
  const int s = st.stride;
  int keep = std::min(u, other), gone = std::max(u, other);
  st.group[keep] |= st.group[gone];
  st.degree[keep] += st.degree[gone] - 2 * st.at(keep, gone);
  for (int v = 0; v < st.a; ++v) {
    if (v == keep || v == gone) continue;
    double add = st.at(gone, v);
    if (add != 0) {
      st.w[static_cast<size_t>(keep) * s + v] += add;
      st.w[static_cast<size_t>(v) * s + keep] += add;
    }
  }
  st.w[static_cast<size_t>(keep) * s + gone] = 0;
  st.w[static_cast<size_t>(gone) * s + keep] = 0;
  // Swap the last live slot into `gone`.
  int last = st.a - 1;
  if (gone != last) {
    st.group[gone] = st.group[last];
    st.degree[gone] = st.degree[last];
    for (int v = 0; v < st.a; ++v) {
      st.w[static_cast<size_t>(gone) * s + v] = st.w[static_cast<size_t>(last) * s + v];
      st.w[static_cast<size_t>(v) * s + gone] = st.w[static_cast<size_t>(v) * s + last];
    }
    st.w[static_cast<size_t>(gone) * s + gone] = 0;
  }
  --st.a;
  return true;
}

void collect_leaf(const KsState& st, double threshold, std::set<uint64_t>& out, uint64_t full) {
  if (st.a != 2) return;
  if (st.at(0, 1) <= threshold) {
    uint64_t side = st.group[0];
    if (side & 1) side = ~side & full;
    if (side != 0 && side != full) out.insert(side);
  }
}

void ks_recurse(KsState st, double threshold, Prng& prng, std::set<uint64_t>& out, uint64_t full) {
  // Below this size a single contraction path finishes the run; the heavy
  // repetition count supplies the failure-probability slack instead of
  // deeper branching.
  if (st.a <= 16) {
    while (st.a > 2)
      if (!contract_once(st, prng)) return;
    collect_leaf(st, threshold, out, full);
    return;
  }
  int target = static_cast<int>(std::ceil(1.0 + st.a / std::sqrt(2.0)));
  for (int branch = 0; branch < 2; ++branch) {
    KsState next = (branch == 0) ? st.compacted() : std::move(st);
    while (next.a > target)
      if (!contract_once(next, prng)) break;
    if (next.a <= 2)
      collect_leaf(next, threshold, out, full);
    else
      ks_recurse(std::move(next), threshold, prng, out, full);
  }
}

}  // namespace

void karger_stein_collect(const DenseGraph<double>& g, double threshold, long runs, Prng& prng,
                          std::set<uint64_t>& out_cuts) {
  const int n = g.n;
  if (n < 2) return;
  uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  KsState base;
  base.a = base.stride = n;
  base.w.assign(static_cast<size_t>(n) * n, 0.0);
  base.group.resize(n);
  base.degree.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    base.group[v] = 1ull << v;
    for (int u = 0; u < n; ++u) {
      base.w[static_cast<size_t>(v) * n + u] = g.w[v][u];
      base.degree[v] += g.w[v][u];
    }
  }
  for (long r = 0; r < runs; ++r) {
    KsState run = base;
    ks_recurse(std::move(run), threshold, prng, out_cuts, full);
  }
}

}  // namespace cqopt
