#include "cqopt/paths.hpp"

#include <algorithm>
#include <queue>

namespace cqopt {

WalkOracle::WalkOracle(int n, std::vector<std::pair<int, int>> edges, VecR lengths, int s, int t)
    : n_(n), s_(s), t_(t), edges_(std::move(edges)), lengths_(std::move(lengths)) {
  if (edges_.size() != lengths_.size())
    throw std::invalid_argument("edge/length count mismatch");
  edge_id_.assign(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (u == v) throw std::invalid_argument("self-loop");
    edge_id_[u][v] = static_cast<int>(i);
  }
}

Rational WalkOracle::walk_length(const std::vector<int>& walk) const {
  if (walk.size() < 1 || walk.front() != s_ || walk.back() != t_)
    throw InvalidWalk("operand is not an s-t walk");
  Rational total = 0;
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    int id = edge_id_[walk[i]][walk[i + 1]];
    if (id < 0) throw InvalidWalk("walk uses a missing edge");
    total += lengths_[id];
  }
  return total;
}

Sign WalkOracle::compare_walks(const std::vector<int>& w1, const std::vector<int>& w2) {
  Sign ans = sign_of(walk_length(w1) - walk_length(w2));
  ledger_.record({QueryKind::WalkCompare, w1, w2, "", ans});
  return ans;
}

namespace {

// Fixed v-to-t walks from a reverse BFS tree.
std::vector<std::vector<int>> tail_walks(const WalkOracle& o, const std::vector<char>& alive) {
  const int n = o.n();
  std::vector<int> next(n, -1);
  std::vector<std::vector<int>> tails(n);
  std::queue<int> q;
  q.push(o.t());
  std::vector<char> seen(n, 0);
  seen[o.t()] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < n; ++u) {
      if (!alive[u] || seen[u] || !o.has_edge(u, v)) continue;
      seen[u] = 1;
      next[u] = v;
      q.push(u);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!alive[v] || !seen[v]) continue;
    std::vector<int> w{v};
    for (int c = v; c != o.t(); c = next[c]) w.push_back(next[c]);
    tails[v] = std::move(w);
  }
  return tails;
}

std::vector<int> concat_walk(const std::vector<int>& head, const std::vector<int>& tail) {
  std::vector<int> out = head;
  out.insert(out.end(), tail.begin() + 1, tail.end());
  return out;
}

}  // namespace

WalkSearchResult shortest_path_walk_comparisons(WalkOracle& oracle) {
  const int n = oracle.n();
  const int s = oracle.s(), t = oracle.t();

  // Prune to vertices on some s->v and v->t walk.
  std::vector<char> from_s(n, 0), to_t(n, 0);
  {
    std::queue<int> q;
    q.push(s);
    from_s[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (!from_s[v] && oracle.has_edge(u, v)) {
          from_s[v] = 1;
          q.push(v);
        }
    }
    q.push(t);
    to_t[t] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u)
        if (!to_t[u] && oracle.has_edge(u, v)) {
          to_t[u] = 1;
          q.push(u);
        }
    }
  }
  if (!from_s[t]) throw Unreachable("t is unreachable from s");
  std::vector<char> alive(n, 0);
  for (int v = 0; v < n; ++v) alive[v] = from_s[v] && to_t[v];

  auto tails = tail_walks(oracle, alive);

  // Table of shortest s->v walks with at most k edges, one layer at a time.
  // entry[v] holds the current best walk; updates compare candidates after
  // appending the shared tail t_v.
  std::vector<std::optional<std::vector<int>>> cur(n), prev(n);
  if (s == t) return std::vector<int>{s};
  prev[s] = std::vector<int>{s};

  std::vector<std::optional<std::vector<int>>> last_layer(n);
  std::vector<int> improved_pred(n, -1);
  bool improved_at_n = false;
  int improved_vertex = -1;

  for (int k = 1; k <= n; ++k) {
    cur = prev;
    std::vector<int> pred(n, -1);
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (int u = 0; u < n; ++u) {
        if (!alive[u] || !prev[u] || !oracle.has_edge(u, v)) continue;
        std::vector<int> cand = *prev[u];
        cand.push_back(v);
        if (!cur[v]) {
          cur[v] = std::move(cand);
          pred[v] = u;
        } else if (oracle.compare_walks(concat_walk(cand, tails[v]),
                                        concat_walk(*cur[v], tails[v])) < 0) {
          cur[v] = std::move(cand);
          pred[v] = u;
        }
      }
    }
    if (k == n) {
      for (int v = 0; v < n && !improved_at_n; ++v)
        if (pred[v] >= 0) {
          improved_at_n = true;
          improved_vertex = v;
          improved_pred = pred;
        }
    }
    prev = cur;
    if (k == n - 1) last_layer = cur;
  }

  if (!improved_at_n) {
    if (!last_layer[t]) throw Unreachable("no s-t walk survived relaxation");
    return *last_layer[t];
  }

  // A vertex improved in round n: its round-n walk has n edges and so
  // contains at least one cycle, and the cycle weights sum to a negative
  // total. Peel cycles off the walk and certify each with one comparison
  // until a negative one appears.
  std::vector<int> walk = *cur[improved_vertex];
  for (;;) {
    std::vector<int> first_pos(n, -1);
    int cycle_start = -1, repeat_at = -1;
    for (size_t i = 0; i < walk.size(); ++i) {
      if (first_pos[walk[i]] >= 0) {
        cycle_start = first_pos[walk[i]];
        repeat_at = static_cast<int>(i);
        break;
      }
      first_pos[walk[i]] = static_cast<int>(i);
    }
    if (cycle_start < 0) throw std::runtime_error("no negative cycle found on the walk");
    NegativeCycle out;
    out.cycle.assign(walk.begin() + cycle_start, walk.begin() + repeat_at + 1);
    int c = out.cycle.front();
    std::vector<int> head(walk.begin(), walk.begin() + cycle_start + 1);  // s -> c
    std::vector<int> once = concat_walk(head, tails[c]);
    std::vector<int> with_cycle = head;
    with_cycle.insert(with_cycle.end(), out.cycle.begin() + 1, out.cycle.end());
    with_cycle = concat_walk(with_cycle, tails[c]);
    if (oracle.compare_walks(with_cycle, once) < 0) {
      out.certified = true;
      return out;
    }
    // Not negative: splice this cycle out and keep looking.
    walk.erase(walk.begin() + cycle_start, walk.begin() + repeat_at);
  }
}

}  // namespace cqopt
