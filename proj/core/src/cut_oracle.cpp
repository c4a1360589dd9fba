#include "cqopt/cut_oracle.hpp"

namespace cqopt {

HiddenGraph::HiddenGraph(int n, bool weighted)
    : n_(n),
      weighted_(weighted),
      adj_(n, std::vector<char>(n, 0)),
      w_(n, std::vector<Rational>(n, Rational(0))) {
  if (n < 1 || n > 64) throw std::invalid_argument("hidden graph size must be in [1, 64]");
}

HiddenGraph HiddenGraph::simple(int n, const std::vector<Edge>& edges) {
  HiddenGraph g(n, false);
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    if (g.adj_[u][v]) throw std::invalid_argument("multi-edge in simple graph");
    g.adj_[u][v] = g.adj_[v][u] = 1;
    g.w_[u][v] = g.w_[v][u] = 1;
  }
  return g;
}

HiddenGraph HiddenGraph::weighted(int n, const std::vector<std::pair<Edge, Rational>>& edges) {
  HiddenGraph g(n, true);
  for (const auto& [e, weight] : edges) {
    auto [u, v] = e;
    if (u == v) throw std::invalid_argument("self-loop in graph");
    if (g.adj_[u][v]) throw std::invalid_argument("multi-edge in graph");
    if (weight < 0) throw std::invalid_argument("negative edge weight");
    g.adj_[u][v] = g.adj_[v][u] = 1;
    g.w_[u][v] = g.w_[v][u] = weight;
  }
  return g;
}

Rational HiddenGraph::cut_weight(uint64_t side) const {
  Rational total = 0;
  for (int u = 0; u < n_; ++u) {
    if (!(side >> u & 1)) continue;
    for (int v = 0; v < n_; ++v)
      if (!(side >> v & 1) && adj_[u][v]) total += w_[u][v];
  }
  return total;
}

std::vector<Edge> HiddenGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

int HiddenGraph::degree(int u) const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d += adj_[u][v];
  return d;
}

std::vector<int> CutOracle::to_list(uint64_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

Sign CutOracle::compare_cuts(uint64_t s, uint64_t t) {
  require_nontrivial(s);
  require_nontrivial(t);
  Sign ans = sign_of(g_.cut_weight(s) - g_.cut_weight(t));
  ledger_.record({QueryKind::CutCompare, to_list(s, g_.n()), to_list(t, g_.n()), "", ans});
  return ans;
}

Sign CutOracle::compare_cut_marginals(uint64_t s, uint64_t s2, uint64_t t, uint64_t t2) {
  require_nontrivial(s);
  require_nontrivial(s2);
  require_nontrivial(t);
  require_nontrivial(t2);
  Rational lhs = g_.cut_weight(s) - g_.cut_weight(s2);
  Rational rhs = g_.cut_weight(t) - g_.cut_weight(t2);
  Sign ans = sign_of(lhs - rhs);
  std::vector<int> lhs_ops = to_list(s, g_.n());
  lhs_ops.push_back(-1);  // separator between the two operand sets
  for (int v : to_list(s2, g_.n())) lhs_ops.push_back(v);
  std::vector<int> rhs_ops = to_list(t, g_.n());
  rhs_ops.push_back(-1);
  for (int v : to_list(t2, g_.n())) rhs_ops.push_back(v);
  ledger_.record({QueryKind::CutMarginal, lhs_ops, rhs_ops, "", ans});
  return ans;
}

}  // namespace cqopt
