#include "cqopt/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cqopt {

int MatroidOracle::rank() const {
  Set s;
  for (int e = 0; e < n(); ++e) {
    s.push_back(e);
    if (!is_independent(s)) s.pop_back();
  }
  return static_cast<int>(s.size());
}

bool GraphicMatroid::is_independent(const Set& s) const {
  std::vector<int> parent(n_vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : s) {
    auto [u, v] = edges_[e];
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool PartitionMatroid::is_independent(const Set& s) const {
  std::vector<int> used(capacity_.size(), 0);
  for (int e : s)
    if (++used[block_of_[e]] > capacity_[block_of_[e]]) return false;
  return true;
}

Set greedy_basis(const MatroidOracle& m) {
  Set s;
  for (int e = 0; e < m.n(); ++e) {
    s.push_back(e);
    if (!m.is_independent(s)) s.pop_back();
  }
  return s;
}

BasisExchangeGraph build_exchange_graph(const MatroidOracle& m, const Set& basis) {
  const int n = m.n();
  BasisExchangeGraph h;
  h.basis = basis;
  h.exchange.assign(n, std::vector<char>(n, 0));
  std::vector<char> in_basis(n, 0);
  for (int e : basis) in_basis[e] = 1;
  for (int x = 0; x < n; ++x) {
    if (in_basis[x]) continue;
    for (int y : basis) {
      Set cand;
      cand.reserve(basis.size());
      for (int e : basis)
        if (e != y) cand.push_back(e);
      cand.push_back(x);
      std::sort(cand.begin(), cand.end());
      if (m.is_independent(cand)) {
        if (cand.size() != basis.size()) throw NotAMatroid("exchange changed the basis size");
        h.exchange[x][y] = h.exchange[y][x] = 1;
      }
    }
  }
  // Components of the exchange graph are the matroid's components.
  h.component_of.assign(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (h.component_of[s] >= 0) continue;
    h.component_of[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (h.exchange[u][v] && h.component_of[v] < 0) {
          h.component_of[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  h.n_components = next;
  return h;
}

BasisExchangeGraph matroid_components(const MatroidOracle& m) {
  return build_exchange_graph(m, greedy_basis(m));
}

namespace {

std::vector<char> in_set(const Set& s, int n) {
  std::vector<char> mark(n, 0);
  for (int e : s) mark[e] = 1;
  return mark;
}

// Shortest alternating path from `from` (outside B) to `to` (inside B) in the
// exchange graph of `basis`; returns the vertex sequence.
std::vector<int> exchange_path(const MatroidOracle& m, const Set& basis, int from, int to) {
  auto h = build_exchange_graph(m, basis);
  const int n = m.n();
  std::vector<int> prev(n, -2);
  std::queue<int> q;
  q.push(from);
  prev[from] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == to) break;
    for (int v = 0; v < n; ++v)
      if (h.exchange[u][v] && prev[v] == -2) {
        prev[v] = u;
        q.push(v);
      }
  }
  if (prev[to] == -2) throw DifferentComponents("no exchange path between the elements");
  std::vector<int> path;
  for (int v = to; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

Set symmetric_difference(const Set& basis, const std::vector<int>& path, int n) {
  auto mark = in_set(basis, n);
  for (int v : path) mark[v] ^= 1;
  Set out;
  for (int e = 0; e < n; ++e)
    if (mark[e]) out.push_back(e);
  return out;
}

}  // namespace

Sign compare_elements(const MatroidOracle& m, WeightOracle& oracle, int e, int f,
                      const BasisExchangeGraph& h) {
  if (e == f) return 0;
  if (h.component_of[e] != h.component_of[f])
    throw DifferentComponents("elements lie in different matroid components");
  const int n = m.n();
  Set base = h.basis;
  auto mark = in_set(base, n);

  // Arrange a reference basis containing exactly one of {e, f}.
  if (mark[e] && mark[f]) {
    // Swap f out: any exchange partner of f works.
    int z = -1;
    for (int x = 0; x < n && z < 0; ++x)
      if (!mark[x] && x != e && h.exchange[x][f]) z = x;
    if (z < 0) throw NotAMatroid("basis element in a nontrivial component has no exchange");
    mark[f] = 0;
    mark[z] = 1;
  } else if (!mark[e] && !mark[f]) {
    // Swap e in.
    int z = -1;
    for (int y : base)
      if (h.exchange[e][y] && y != f) { z = y; break; }
    if (z < 0) throw NotAMatroid("element in a nontrivial component has no exchange");
    mark[z] = 0;
    mark[e] = 1;
  }
  Set ref;
  for (int x = 0; x < n; ++x)
    if (mark[x]) ref.push_back(x);

  int inside = mark[e] ? e : f;
  int outside = mark[e] ? f : e;
  // Exchange path from the outside element to the inside one; the symmetric
  // difference is a basis B' excluding `inside`, and B' + inside - outside is
  // a basis as well, so one comparison separates w_e and w_f.
  auto path = exchange_path(m, ref, outside, inside);
  Set b_prime = symmetric_difference(ref, path, n);
  Set b_second = b_prime;
  b_second.erase(std::find(b_second.begin(), b_second.end(), outside));
  b_second.push_back(inside);
  std::sort(b_second.begin(), b_second.end());
  if (!m.is_independent(b_prime) || !m.is_independent(b_second) ||
      b_prime.size() != ref.size() || b_second.size() != ref.size())
    throw NotAMatroid("exchange path produced a non-basis");
  Sign s = oracle.compare(b_second, b_prime);  // sign(w_inside - w_outside)
  return inside == e ? s : static_cast<Sign>(-s);
}

Set min_weight_basis(const MatroidOracle& m, WeightOracle& oracle) {
  auto h = matroid_components(m);
  const int n = m.n();
  Set selection;
  for (int c = 0; c < h.n_components; ++c) {
    std::vector<int> elems;
    for (int e = 0; e < n; ++e)
      if (h.component_of[e] == c) elems.push_back(e);
    stable_merge_sort(elems, [&](int a, int b) { return compare_elements(m, oracle, a, b, h); });
    for (int e : elems) {
      selection.push_back(e);
      std::sort(selection.begin(), selection.end());
      if (!m.is_independent(selection))
        selection.erase(std::find(selection.begin(), selection.end(), e));
    }
  }
  std::sort(selection.begin(), selection.end());
  return selection;
}

std::vector<Set> MatroidBasesFamily::enumerate() const {
  std::vector<Set> out;
  Set cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == rank_) {
      out.push_back(cur);
      return;
    }
    if (start >= m_.n()) return;
    for (int e = start; e < m_.n(); ++e) {
      cur.push_back(e);
      if (m_.is_independent(cur)) rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace cqopt
