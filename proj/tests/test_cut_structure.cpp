#include <doctest.h>

#include "cqopt/cut_structure.hpp"
#include "cqopt/experiment.hpp"

#include <set>

using namespace cqopt;

namespace {

uint64_t bit(int v) { return 1ull << v; }

std::vector<Edge> all_edges(uint64_t edge_mask, int n) {
  std::vector<Edge> edges;
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if (edge_mask >> idx & 1) edges.push_back({u, v});
  return edges;
}

int pair_count(int n) { return n * (n - 1) / 2; }

int deg_in(const HiddenGraph& g, int u, uint64_t s) {
  int c = 0;
  for (int v = 0; v < g.n(); ++v)
    if ((s >> v & 1) && g.has_edge(u, v)) ++c;
  return c;
}

}  // namespace

TEST_CASE("majority test on a star") {
  // Star center 0 with leaves 1, 2, 3.
  auto g = HiddenGraph::simple(4, {{0, 1}, {0, 2}, {0, 3}});
  CutOracle oracle(g);
  CutStructure cs(oracle);
  CHECK(cs.majority_test(0, bit(1)) == -1);           // 1 of 3
  CHECK(cs.majority_test(0, bit(1) | bit(2)) == +1);  // 2 of 3
  // Isolated vertex: both counts zero.
  auto g2 = HiddenGraph::simple(4, {{1, 2}, {2, 3}});
  CutOracle o2(g2);
  CutStructure cs2(o2);
  CHECK(cs2.majority_test(0, bit(1)) == 0);
}

TEST_CASE("observation identity on random graphs") {
  Prng prng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + static_cast<int>(prng.below(8));
    auto g = HiddenGraph::simple(n, gen::gnp_edges(n, 0.4, prng));
    CutOracle oracle(g);
    CutStructure cs(oracle);
    for (int probe = 0; probe < 10; ++probe) {
      int u = static_cast<int>(prng.below(n));
      uint64_t s = 0;
      for (int v = 0; v < n; ++v)
        if (v != u && prng.bernoulli(0.5)) s |= bit(v);
      if (s == 0 || (s | bit(u)) == g.full_mask()) continue;
      int lhs = static_cast<int>(g.cut_weight(s).convert_to<long long>()) -
                static_cast<int>(g.cut_weight(s | bit(u)).convert_to<long long>());
      int rhs = 2 * deg_in(g, u, s) - g.degree(u);
      CHECK(lhs == rhs);
      CHECK(cs.majority_test(u, s) == sign_of(Rational(rhs)));
    }
  }
}

TEST_CASE("tipping point finds a neighbor with logarithmic queries") {
  // Path 1-0-2 inside a larger graph: chain from {1} adds 3, 4, then 2; the
  // start sign is 0 (one of two edges) and tips to +1 at vertex 2.
  auto g = HiddenGraph::simple(6, {{0, 1}, {0, 2}, {3, 4}});
  CutOracle oracle(g);
  CutStructure cs(oracle);
  std::vector<int> chain{3, 4, 2};
  long before = oracle.ledger().count_compare;
  auto [idx, v] = cs.tipping_point(0, bit(1), chain);
  long used = oracle.ledger().count_compare - before;
  CHECK(v == 2);
  CHECK(idx == 3);
  CHECK(used <= static_cast<long>(std::ceil(std::log2(3))) + 2);

  // Star center: tipping at the second leaf.
  auto star = HiddenGraph::simple(5, {{0, 1}, {0, 2}, {0, 3}});
  CutOracle so(star);
  CutStructure scs(so);
  auto [i2, v2] = scs.tipping_point(0, bit(1), {2, 3});
  CHECK(i2 == 1);
  CHECK(v2 == 2);

  // Equal endpoint signs: error.
  CHECK_THROWS_AS(scs.tipping_point(0, bit(1), {4}), NoSignChange);
}

TEST_CASE("home alone isolation test uses exactly three queries") {
  // Vertex 3 isolated next to a triangle.
  auto g = HiddenGraph::simple(4, {{0, 1}, {0, 2}, {1, 2}});
  CutOracle oracle(g);
  CutStructure cs(oracle);
  long before = oracle.ledger().count_compare;
  CHECK(cs.is_isolated(3));
  CHECK(oracle.ledger().count_compare - before == 3);

  // Leaf on a path P4 is not isolated.
  auto p4 = HiddenGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}});
  CutOracle o2(p4);
  CutStructure cs2(o2);
  before = o2.ledger().count_compare;
  CHECK_FALSE(cs2.is_isolated(0));
  CHECK(o2.ledger().count_compare - before == 3);

  // Exhaustive: all graphs on 5 vertices, every vertex.
  Prng prng(3);
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t mask = prng.below(1ull << pair_count(5));
    auto gg = HiddenGraph::simple(5, all_edges(mask, 5));
    CutOracle oo(gg);
    CutStructure ss(oo);
    for (int u = 0; u < 5; ++u) CHECK(ss.is_isolated(u) == (gg.degree(u) == 0));
  }
}

TEST_CASE("median sets hold exactly ceil(deg/2)-1 neighbors") {
  Prng prng(21);
  // Exhaustive over all graphs on 4 vertices plus random graphs on 5 and 6.
  for (int n = 4; n <= 6; ++n) {
    long trials = (n == 4) ? (1 << pair_count(4)) : 400;
    for (long t = 0; t < trials; ++t) {
      uint64_t mask = (n == 4) ? static_cast<uint64_t>(t) : prng.below(1ull << pair_count(n));
      auto g = HiddenGraph::simple(n, all_edges(mask, n));
      CutOracle oracle(g);
      CutStructure cs(oracle);
      for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 0) {
          CHECK_THROWS_AS(cs.median_sets(u, {}), IsolatedVertex);
          continue;
        }
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
          if (v != u) order.push_back(v);
        // Shuffle for variety.
        for (size_t i = 0; i < order.size(); ++i)
          std::swap(order[i], order[i + prng.below(order.size() - i)]);
        auto [pre, suf] = cs.median_sets(u, order);
        int want = (g.degree(u) + 1) / 2 - 1;
        CHECK(deg_in(g, u, pre.set) == want);
        CHECK(deg_in(g, u, suf.set) == want);
        if (pre.known_degree > 0) CHECK(pre.known_degree == g.degree(u));
        if (pre.known_neighbor >= 0) CHECK(g.has_edge(u, pre.known_neighbor));
        if (suf.known_degree > 0) CHECK(suf.known_degree == g.degree(u));
        if (suf.known_neighbor >= 0) CHECK(g.has_edge(u, suf.known_neighbor));
        // Disjoint unless a degenerate shortcut fired.
        if (pre.known_degree < 0 && suf.known_degree < 0) CHECK((pre.set & suf.set) == 0);
      }
    }
  }
}

TEST_CASE("neighbors_in_set equals ground truth") {
  // C4 = 0-1-2-3-0: neighbors of 0 in {1,2,3} are {1,3}.
  auto c4 = HiddenGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CutOracle oracle(c4);
  CutStructure cs(oracle);
  CHECK(cs.neighbors_in_set(0, {1, 2, 3}) == std::vector<int>{1, 3});
  CHECK(cs.neighbors_in_set(0, {}) == std::vector<int>{});

  // Exhaustive on n = 4, 5; random subsets on larger graphs.
  Prng prng(31);
  for (int n = 4; n <= 5; ++n) {
    long trials = (n == 4) ? (1 << pair_count(4)) : 300;
    for (long t = 0; t < trials; ++t) {
      uint64_t mask = (n == 4) ? static_cast<uint64_t>(t) : prng.below(1ull << pair_count(n));
      auto g = HiddenGraph::simple(n, all_edges(mask, n));
      CutOracle oo(g);
      CutStructure ss(oo);
      for (int u = 0; u < n; ++u) {
        uint64_t amask = prng.below(1ull << n) & ~bit(u);
        std::vector<int> a;
        for (int v = 0; v < n; ++v)
          if (amask >> v & 1) a.push_back(v);
        std::vector<int> expect;
        for (int v : a)
          if (g.has_edge(u, v)) expect.push_back(v);
        CHECK(ss.neighbors_in_set(u, a) == expect);
      }
    }
  }

  // Larger random graphs with full candidate sets and a query budget.
  for (int trial = 0; trial < 25; ++trial) {
    int n = 8 + static_cast<int>(prng.below(25));
    auto g = HiddenGraph::simple(n, gen::gnp_edges(n, 0.3, prng));
    CutOracle oo(g);
    CutStructure ss(oo);
    int u = static_cast<int>(prng.below(n));
    std::vector<int> a;
    for (int v = 0; v < n; ++v)
      if (v != u) a.push_back(v);
    std::vector<int> expect;
    for (int v : a)
      if (g.has_edge(u, v)) expect.push_back(v);
    long before = oo.ledger().count_compare;
    CHECK(ss.neighbors_in_set(u, a) == expect);
    long used = oo.ledger().count_compare - before;
    CHECK(used <= static_cast<long>(a.size()) + 8 * static_cast<long>(std::log2(n)) + 8);
  }
}

TEST_CASE("first_neighbor returns the earliest neighbor in T order") {
  // C4 with u=0: neighbors {1,3}; T order (2,1,3) -> 1.
  auto c4 = HiddenGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CutOracle oracle(c4);
  CutStructure cs(oracle);
  CHECK(cs.first_neighbor(0, {2, 1, 3}) == 1);
  CHECK(cs.first_neighbor(1, {3}) == std::nullopt);

  Prng prng(47);
  for (int n = 4; n <= 6; ++n) {
    long trials = (n == 4) ? (1 << pair_count(4)) : 500;
    for (long t = 0; t < trials; ++t) {
      uint64_t mask = (n == 4) ? static_cast<uint64_t>(t) : prng.below(1ull << pair_count(n));
      auto g = HiddenGraph::simple(n, all_edges(mask, n));
      CutOracle oo(g);
      CutStructure ss(oo);
      for (int u = 0; u < n; ++u) {
        // Random nonempty ordered T.
        std::vector<int> pool;
        for (int v = 0; v < n; ++v)
          if (v != u) pool.push_back(v);
        for (size_t i = 0; i < pool.size(); ++i)
          std::swap(pool[i], pool[i + prng.below(pool.size() - i)]);
        size_t len = 1 + prng.below(pool.size());
        std::vector<int> order(pool.begin(), pool.begin() + len);
        std::optional<int> expect;
        for (int v : order)
          if (g.has_edge(u, v)) { expect = v; break; }
        long before = oo.ledger().count_compare;
        CHECK(ss.first_neighbor(u, order) == expect);
        long used = oo.ledger().count_compare - before;
        CHECK(used <= 8 * static_cast<long>(std::log2(n)) + 10);
      }
    }
  }
}

TEST_CASE("extract_edges pulls up to k incident edges in order") {
  auto star = HiddenGraph::simple(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CutOracle oracle(star);
  CutStructure cs(oracle);
  auto two = cs.extract_edges(0, {1, 2, 3, 4, 5}, 2);
  CHECK(two == std::vector<Edge>{{0, 1}, {0, 2}});

  // No neighbors in T: zero edges, logarithmic cost.
  auto g = HiddenGraph::simple(6, {{0, 1}, {2, 3}, {4, 5}});
  CutOracle o2(g);
  CutStructure cs2(o2);
  long before = o2.ledger().count_compare;
  CHECK(cs2.extract_edges(0, {2, 3, 4}, 10).empty());
  CHECK(o2.ledger().count_compare - before <= 8 * static_cast<long>(std::log2(6)) + 10);

  Prng prng(55);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(prng.below(10));
    auto gg = HiddenGraph::simple(n, gen::gnp_edges(n, 0.4, prng));
    CutOracle oo(gg);
    CutStructure ss(oo);
    int u = static_cast<int>(prng.below(n));
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
      if (v != u) order.push_back(v);
    auto got = ss.extract_edges(u, order, n);
    std::vector<Edge> expect;
    for (int v : order)
      if (gg.has_edge(u, v)) expect.push_back({std::min(u, v), std::max(u, v)});
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("reconstruction recovers every graph except the four degenerate ones") {
  // C4 exact.
  auto c4 = HiddenGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CutOracle oracle(c4);
  CutStructure cs(oracle);
  auto got = cs.reconstruct();
  CHECK(got == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  // K3 and its complement: unidentifiable.
  auto k3 = HiddenGraph::simple(3, {{0, 1}, {0, 2}, {1, 2}});
  CutOracle o3(k3);
  CutStructure c3(o3);
  CHECK_THROWS_AS(c3.reconstruct(), Unidentifiable);
  auto k3c = HiddenGraph::simple(3, {});
  CutOracle o3c(k3c);
  CutStructure c3c(o3c);
  CHECK_THROWS_AS(c3c.reconstruct(), Unidentifiable);

  // Random graphs with a query budget.
  Prng prng(77);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 8 + static_cast<int>(prng.below(25));
    auto edges = gen::gnp_edges(n, 0.15 + 0.2 * (trial % 4), prng);
    auto g = HiddenGraph::simple(n, edges);
    CutOracle oo(g);
    CutStructure ss(oo);
    auto rec = ss.reconstruct();
    std::sort(edges.begin(), edges.end());
    CHECK(rec == edges);
    double m = static_cast<double>(edges.size());
    double budget = std::min((m + n) * std::log2(n), static_cast<double>(n) * n);
    CHECK(oo.ledger().count_compare <= 12 * budget + 64);
  }
}

TEST_CASE("K3 and its complement answer every nontrivial cut comparison with 0") {
  for (bool complement : {false, true}) {
    auto g = complement ? HiddenGraph::simple(3, {})
                        : HiddenGraph::simple(3, {{0, 1}, {0, 2}, {1, 2}});
    CutOracle oracle(g);
    for (uint64_t s = 1; s < 7; ++s)
      for (uint64_t t = 1; t < 7; ++t) CHECK(oracle.compare_cuts(s, t) == 0);
  }
}
