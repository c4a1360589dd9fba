#include "cqopt/cut_structure.hpp"

#include <algorithm>
#include <cmath>

namespace cqopt {

namespace {
uint64_t bit(int v) { return 1ull << v; }
}  // namespace

Sign CutStructure::majority_test(int u, uint64_t s) {
  if (s == 0) throw TrivialCut("majority test against the empty set");
  if (s >> u & 1) throw std::invalid_argument("u must not lie in S");
  return oracle_.compare_cuts(s, s | bit(u));
}

std::pair<int, int> CutStructure::tipping_point(int u, uint64_t s0,
                                                const std::vector<int>& additions) {
  if (additions.empty()) throw NoSignChange("empty chain");
  uint64_t end = s0;
  for (int v : additions) end |= bit(v);
  Sign lo_sign = majority_test(u, s0);
  Sign hi_sign = majority_test(u, end);
  if (lo_sign >= hi_sign) throw NoSignChange("chain endpoints have equal majority signs");
  int i = first_tip(u, s0, additions, static_cast<int>(additions.size()), lo_sign);
  return {i, additions[i - 1]};
}

int CutStructure::first_tip(int u, uint64_t base, const std::vector<int>& chain, int limit,
                            Sign base_sign) {
  // Invariant: the sign at prefix length `limit` exceeds base_sign, the sign
  // at length 0 equals base_sign, and signs are monotone along the chain.
  int lo = 1, hi = limit;
  std::vector<uint64_t> prefix(limit + 1);
  prefix[0] = base;
  for (int i = 1; i <= limit; ++i) prefix[i] = prefix[i - 1] | bit(chain[i - 1]);
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (majority_test(u, prefix[mid]) > base_sign)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

bool CutStructure::is_isolated(int u) {
  if (n_ < 4) throw TooFewVertices("isolation test needs n >= 4");
  int v = -1, w = -1;
  for (int x = 0; x < n_ && w < 0; ++x) {
    if (x == u) continue;
    (v < 0 ? v : w) = x;
  }
  // No short-circuit: the primitive always issues exactly three queries.
  bool a = oracle_.compare_cuts(bit(v), bit(v) | bit(u)) == 0;
  bool b = oracle_.compare_cuts(bit(w), bit(w) | bit(u)) == 0;
  bool c = oracle_.compare_cuts(bit(v) | bit(w), bit(v) | bit(w) | bit(u)) == 0;
  return a && b && c;
}

std::vector<int> CutStructure::default_order(int u) const {
  std::vector<int> order;
  order.reserve(n_ - 1);
  for (int v = 0; v < n_; ++v)
    if (v != u) order.push_back(v);
  return order;
}

MedianResult CutStructure::prefix_median(int u, const std::vector<int>& order) {
  if (n_ < 4) throw TooFewVertices("median computation needs n >= 4");
  if (static_cast<int>(order.size()) != n_ - 1)
    throw std::invalid_argument("ordering must cover V - u");
  MedianResult out;
  Sign s1 = majority_test(u, bit(order[0]));
  if (s1 > 0) {
    // More than half of u's edges meet one vertex: deg(u) = 1.
    out.known_degree = 1;
    out.known_neighbor = order[0];
    return out;
  }
  if (s1 == 0) {
    // Exactly half meet one vertex: deg(u) = 2 with order[0] a neighbor.
    out.known_degree = 2;
    out.known_neighbor = order[0];
    return out;
  }
  uint64_t l_end = 0;
  for (int i = 0; i + 1 < static_cast<int>(order.size()); ++i) l_end |= bit(order[i]);
  Sign s_end = majority_test(u, l_end);
  if (s_end < 0) {
    // Fewer than half of u's edges inside everything but the last vertex:
    // deg(u) = 1 with the last vertex as the only neighbor.
    out.known_degree = 1;
    out.known_neighbor = order.back();
    out.set = l_end;
    return out;
  }
  // sign(L_1) = -1 and sign(L_{n-2}) >= 0: the first prefix L_j with
  // sign >= 0 leaves L_{j-1} holding exactly ceil(deg(u)/2) - 1 neighbors.
  std::vector<int> chain(order.begin() + 1, order.end() - 1);
  int i = first_tip(u, bit(order[0]), chain, static_cast<int>(chain.size()));
  uint64_t median = bit(order[0]);
  for (int t = 0; t + 1 < i; ++t) median |= bit(chain[t]);
  out.set = median;
  return out;
}

std::pair<MedianResult, MedianResult> CutStructure::median_sets(int u,
                                                                const std::vector<int>& order) {
  if (is_isolated(u)) throw IsolatedVertex("median sets need a non-isolated vertex");
  MedianResult pre = prefix_median(u, order);
  std::vector<int> rev(order.rbegin(), order.rend());
  MedianResult suf = prefix_median(u, rev);
  return {pre, suf};
}

std::vector<int> CutStructure::neighbors_in_set(int u, const std::vector<int>& a) {
  if (n_ < 4) throw TooFewVertices("structural primitives need n >= 4");
  if (is_isolated(u)) return {};
  if (a.empty()) return {};
  auto order = default_order(u);
  MedianResult pre = prefix_median(u, order);
  if (pre.known_degree == 1) {
    std::vector<int> out;
    for (int v : a)
      if (v == pre.known_neighbor) out.push_back(v);
    return out;
  }
  std::vector<int> rev(order.rbegin(), order.rend());
  MedianResult suf = prefix_median(u, rev);
  if (suf.known_degree == 1) {
    std::vector<int> out;
    for (int v : a)
      if (v == suf.known_neighbor) out.push_back(v);
    return out;
  }
  std::vector<int> out;
  for (int v : a) {
    if (v == u) throw std::invalid_argument("u cannot be its own neighbor candidate");
    uint64_t s = (pre.set >> v & 1) ? suf.set : pre.set;
    if (s >> v & 1) throw std::runtime_error("median sets are not disjoint");
    if (majority_test(u, s | bit(v)) > -1) out.push_back(v);
  }
  return out;
}

std::optional<int> CutStructure::first_neighbor(int u, const std::vector<int>& t) {
  if (n_ < 4) throw TooFewVertices("structural primitives need n >= 4");
  if (is_isolated(u)) return std::nullopt;
  return first_neighbor_unchecked(u, t);
}

std::optional<int> CutStructure::first_neighbor_unchecked(int u, const std::vector<int>& t) {
  if (t.empty()) return std::nullopt;
  // Extend T to a full ordering pi of V - u with T in front.
  std::vector<int> pi(t);
  {
    uint64_t in_t = 0;
    for (int v : t) in_t |= bit(v);
    for (int v = 0; v < n_; ++v)
      if (v != u && !(in_t >> v & 1)) pi.push_back(v);
  }
  std::vector<int> rev(pi.rbegin(), pi.rend());
  MedianResult suf = prefix_median(u, rev);
  if (suf.known_degree == 1) {
    for (int v : t)
      if (v == suf.known_neighbor) return v;
    return std::nullopt;
  }
  const uint64_t s = suf.set;
  int s_size = __builtin_popcountll(s);
  // S occupies pi positions k_pos..n-1 (1-based); the chain may add positions
  // 1..k_pos-2 without creating a trivial cut.
  int k_pos = n_ - s_size;
  int t_len = static_cast<int>(t.size());
  int c = std::min(t_len, k_pos - 2);

  if (c >= 1) {
    uint64_t end = s;
    for (int i = 0; i < c; ++i) end |= bit(pi[i]);
    if (majority_test(u, end) > -1) {
      std::vector<int> chain(pi.begin(), pi.begin() + c);
      int i = first_tip(u, s, chain, c);
      return chain[i - 1];
    }
    // The endpoint sign stayed -1: positions 1..c hold no neighbor of u.
  }
  if (t_len <= k_pos - 2) return std::nullopt;
  // All of u's neighbors outside S sit at position k_pos-1, which is in T.
  return pi[k_pos - 2];
}

std::vector<Edge> CutStructure::extract_edges(int u, const std::vector<int>& t, long cap) {
  if (n_ < 4) throw TooFewVertices("structural primitives need n >= 4");
  std::vector<Edge> out;
  if (cap <= 0 || t.empty()) return out;
  if (is_isolated(u)) return out;
  std::vector<int> cur = t;
  while (static_cast<long>(out.size()) < cap) {
    auto fn = first_neighbor_unchecked(u, cur);
    if (!fn) break;
    out.emplace_back(std::min(u, *fn), std::max(u, *fn));
    auto it = std::find(cur.begin(), cur.end(), *fn);
    cur.erase(cur.begin(), it + 1);
    if (cur.empty()) break;
  }
  return out;
}

std::vector<Edge> CutStructure::reconstruct() {
  if (n_ < 2) throw std::invalid_argument("reconstruction needs n >= 2");
  if (n_ == 2) throw Unidentifiable("K2 and its complement share the one nontrivial cut");
  if (n_ == 3) {
    Sign ab = oracle_.compare_cuts(bit(0), bit(1));
    Sign ac = oracle_.compare_cuts(bit(0), bit(2));
    Sign bc = oracle_.compare_cuts(bit(1), bit(2));
    if (ab == 0 && ac == 0 && bc == 0)
      throw Unidentifiable("K3 and its complement have identical cut tables");
    // Degree-cut multiset is (1,1,0) for a single edge or (1,2,1) for a path.
    for (int center = 0; center < 3; ++center) {
      int x = (center + 1) % 3, y = (center + 2) % 3;
      auto cmp = [&](int i, int j) {
        if (i == 0 && j == 1) return ab;
        if (i == 0 && j == 2) return ac;
        if (i == 1 && j == 2) return bc;
        if (i == 1 && j == 0) return static_cast<Sign>(-ab);
        if (i == 2 && j == 0) return static_cast<Sign>(-ac);
        return static_cast<Sign>(-bc);
      };
      if (cmp(x, y) == 0 && cmp(center, x) > 0)
        return {{std::min(center, x), std::max(center, x)},
                {std::min(center, y), std::max(center, y)}};
      if (cmp(x, y) == 0 && cmp(center, x) < 0)
        return {{std::min(x, y), std::max(x, y)}};
    }
    throw std::runtime_error("impossible 3-vertex cut pattern");
  }

  std::vector<Edge> edges;
  const double switch_at = static_cast<double>(n_) * n_ / std::log2(n_);
  int u = 0;
  for (; u < n_; ++u) {
    if (static_cast<double>(edges.size()) >= switch_at) break;
    std::vector<int> t;
    for (int v = u + 1; v < n_; ++v) t.push_back(v);
    if (t.empty()) continue;
    auto found = extract_edges(u, t, n_);
    edges.insert(edges.end(), found.begin(), found.end());
  }
  // Dense remainder: direct neighbor sweeps cost O(n) queries per vertex.
  for (; u < n_; ++u) {
    std::vector<int> t;
    for (int v = u + 1; v < n_; ++v) t.push_back(v);
    if (t.empty()) continue;
    for (int v : neighbors_in_set(u, t))
      edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace cqopt
