#include "cqopt/matroid_intersect.hpp"

#include <algorithm>

namespace cqopt {

std::vector<Set> CommonIndependentFamily::enumerate() const {
  std::vector<Set> out;
  const int n = m1_.n();
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Set s = set_from_mask(mask, n);
    if (contains(s)) out.push_back(std::move(s));
  }
  return out;
}

IntersectionExchangeGraph build_intersection_graph(const MatroidOracle& m1,
                                                   const MatroidOracle& m2, const Set& y) {
  if (!m1.is_independent(y) || !m2.is_independent(y))
    throw NotCommonIndependent("Y is not common independent");
  const int n = m1.n();
  IntersectionExchangeGraph h;
  h.y = y;
  h.arc.assign(n, std::vector<char>(n, 0));
  h.x1.assign(n, 0);
  h.x2.assign(n, 0);
  std::vector<char> in_y(n, 0);
  for (int e : y) in_y[e] = 1;

  for (int x = 0; x < n; ++x) {
    if (in_y[x]) continue;
    Set plus = y;
    plus.push_back(x);
    std::sort(plus.begin(), plus.end());
    if (m1.is_independent(plus)) h.x1[x] = 1;
    if (m2.is_independent(plus)) h.x2[x] = 1;
    for (int yy : y) {
      Set swapped;
      swapped.reserve(y.size());
      for (int e : y)
        if (e != yy) swapped.push_back(e);
      swapped.push_back(x);
      std::sort(swapped.begin(), swapped.end());
      if (m1.is_independent(swapped)) h.arc[yy][x] = 1;  // (y, x): M1 exchange
      if (m2.is_independent(swapped)) h.arc[x][yy] = 1;  // (x, y): M2 exchange
    }
  }
  return h;
}

namespace {

struct PathEntry {
  std::vector<int> vertices;  // x0, y1, x1, ..., ending at a Y element
  Set diff_set;               // Y triangle P
};

Set apply_path(const Set& y, const std::vector<int>& path, int n) {
  std::vector<char> mark(n, 0);
  for (int e : y) mark[e] = 1;
  for (int v : path) mark[v] ^= 1;
  Set out;
  for (int e = 0; e < n; ++e)
    if (mark[e]) out.push_back(e);
  return out;
}

bool on_path(const std::vector<int>& path, int v) {
  return std::find(path.begin(), path.end(), v) != path.end();
}

}  // namespace

std::optional<std::vector<int>> modified_bellman_ford(const MatroidOracle& m1,
                                                      const MatroidOracle& m2, const Set& y,
                                                      WeightOracle& oracle) {
  const int n = m1.n();
  auto h = build_intersection_graph(m1, m2, y);
  std::vector<char> in_y(n, 0);
  for (int e : y) in_y[e] = 1;
  CommonIndependentFamily family(m1, m2);

  // Keep `cand` if it improves on `best` lexicographically by
  // (oracle length, arc count); first-seen wins ties.
  auto better = [&](const std::optional<PathEntry>& best, const PathEntry& cand) {
    if (!best) return true;
    Sign s = oracle.compare(cand.diff_set, best->diff_set);
    if (s != 0) return s < 0;
    return cand.vertices.size() < best->vertices.size();
  };

  // p[y]: minimal path from X1 ending at y using at most 2t-1 arcs.
  std::vector<std::optional<PathEntry>> p(n);
  for (int yy : y) {
    std::optional<PathEntry> best;
    for (int x = 0; x < n; ++x) {
      if (in_y[x] || !h.x1[x] || !h.arc[x][yy]) continue;
      PathEntry cand;
      cand.vertices = {x, yy};
      cand.diff_set = apply_path(y, cand.vertices, n);
      if (!family.contains(cand.diff_set)) continue;
      if (better(best, cand)) best = std::move(cand);
    }
    p[yy] = std::move(best);
  }

  const int rounds = static_cast<int>(y.size());
  for (int t = 1; t < rounds; ++t) {
    auto next = p;
    for (int yy : y) {
      std::optional<PathEntry>& best = next[yy];
      for (int z : y) {
        if (z == yy || !p[z]) continue;
        for (int x = 0; x < n; ++x) {
          if (in_y[x] || !h.arc[z][x] || !h.arc[x][yy]) continue;
          if (on_path(p[z]->vertices, x) || on_path(p[z]->vertices, yy)) continue;
          PathEntry cand;
          cand.vertices = p[z]->vertices;
          cand.vertices.push_back(x);
          cand.vertices.push_back(yy);
          cand.diff_set = apply_path(y, cand.vertices, n);
          if (!family.contains(cand.diff_set)) continue;
          if (better(best, cand)) best = std::move(cand);
        }
      }
    }
    p = std::move(next);
  }

  // Terminal step into X2.
  std::optional<PathEntry> best;
  for (int x = 0; x < n; ++x) {
    if (in_y[x] || !h.x1[x] || !h.x2[x]) continue;
    PathEntry cand;
    cand.vertices = {x};
    cand.diff_set = apply_path(y, cand.vertices, n);
    if (!family.contains(cand.diff_set)) continue;
    if (better(best, cand)) best = std::move(cand);
  }
  for (int yy : y) {
    if (!p[yy]) continue;
    for (int x = 0; x < n; ++x) {
      if (in_y[x] || !h.x2[x] || !h.arc[yy][x]) continue;
      if (on_path(p[yy]->vertices, x)) continue;
      PathEntry cand;
      cand.vertices = p[yy]->vertices;
      cand.vertices.push_back(x);
      cand.diff_set = apply_path(y, cand.vertices, n);
      if (!family.contains(cand.diff_set)) continue;
      if (better(best, cand)) best = std::move(cand);
    }
  }
  if (!best) return std::nullopt;
  return best->vertices;
}

IntersectionOutcome min_weight_common_independent(const MatroidOracle& m1,
                                                  const MatroidOracle& m2,
                                                  WeightOracle& oracle) {
  const int n = m1.n();
  IntersectionOutcome out;
  Set y;  // Y_0 = empty set, extreme of size 0
  out.extremes.push_back(y);
  for (;;) {
    auto path = modified_bellman_ford(m1, m2, y, oracle);
    if (!path) break;
    y = apply_path(y, *path, n);
    out.extremes.push_back(y);
  }
  // Comparison-minimal extreme set; earlier (smaller) sets win ties.
  out.best = out.extremes.front();
  for (size_t i = 1; i < out.extremes.size(); ++i)
    if (oracle.compare(out.extremes[i], out.best) < 0) out.best = out.extremes[i];
  return out;
}

}  // namespace cqopt
