#include <doctest.h>

#include "cqopt/experiment.hpp"
#include "cqopt/matroid_intersect.hpp"

using namespace cqopt;

namespace {

struct BipartiteInstance {
  int ne = 0;
  std::vector<int> left_of, right_of;
  std::unique_ptr<PartitionMatroid> m1, m2;
  VecR w;
};

BipartiteInstance random_bipartite(Prng& prng, int max_edges = 10) {
  BipartiteInstance inst;
  int nl = 2 + static_cast<int>(prng.below(3));
  int nr = 2 + static_cast<int>(prng.below(3));
  for (int l = 0; l < nl; ++l)
    for (int r = 0; r < nr; ++r)
      if (prng.bernoulli(0.55) && inst.ne < max_edges) {
        inst.left_of.push_back(l);
        inst.right_of.push_back(r);
        ++inst.ne;
      }
  if (inst.ne == 0) {
    inst.left_of.push_back(0);
    inst.right_of.push_back(0);
    inst.ne = 1;
  }
  inst.m1 = std::make_unique<PartitionMatroid>(inst.left_of, std::vector<int>(nl, 1));
  inst.m2 = std::make_unique<PartitionMatroid>(inst.right_of, std::vector<int>(nr, 1));
  inst.w = gen::rational_weights(inst.ne, prng);
  return inst;
}

Rational set_weight(const VecR& w, const Set& s) {
  Rational acc = 0;
  for (int e : s) acc += w[e];
  return acc;
}

}  // namespace

TEST_CASE("intersection exchange graph on the empty set") {
  PartitionMatroid m1({0, 0, 1}, {1, 1});
  PartitionMatroid m2({0, 1, 1}, {1, 1});
  auto h = build_intersection_graph(m1, m2, {});
  for (int a = 0; a < 3; ++a) {
    CHECK(h.x1[a]);
    CHECK(h.x2[a]);
    for (int b = 0; b < 3; ++b) CHECK_FALSE(h.arc[a][b]);
  }
  CHECK_THROWS_AS(build_intersection_graph(m1, m2, {0, 1}), NotCommonIndependent);
}

TEST_CASE("intersection graph arcs match the definitions on random instances") {
  Prng prng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = random_bipartite(prng);
    CommonIndependentFamily family(*inst.m1, *inst.m2);
    // Random common independent Y.
    auto all = family.enumerate();
    Set y = all[prng.below(all.size())];
    auto h = build_intersection_graph(*inst.m1, *inst.m2, y);
    std::vector<char> in_y(inst.ne, 0);
    for (int e : y) in_y[e] = 1;
    for (int yy = 0; yy < inst.ne; ++yy)
      for (int x = 0; x < inst.ne; ++x) {
        if (!in_y[yy] || in_y[x]) continue;
        Set swapped;
        for (int e : y)
          if (e != yy) swapped.push_back(e);
        swapped.push_back(x);
        std::sort(swapped.begin(), swapped.end());
        CHECK(static_cast<bool>(h.arc[yy][x]) == inst.m1->is_independent(swapped));
        CHECK(static_cast<bool>(h.arc[x][yy]) == inst.m2->is_independent(swapped));
      }
  }
}

TEST_CASE("augmentation picks the two unit edges in the 2x2 instance") {
  // Complete bipartite 2x2 with weights (1,5,5,1): edges (l,r) in order
  // (0,0),(0,1),(1,0),(1,1).
  PartitionMatroid m1({0, 0, 1, 1}, {1, 1});
  PartitionMatroid m2({0, 1, 0, 1}, {1, 1});
  VecR w{Rational(1), Rational(5), Rational(5), Rational(1)};
  CommonIndependentFamily family(m1, m2);
  WeightOracle oracle(HiddenWeights(w), family);
  auto out = min_weight_common_independent(m1, m2, oracle);
  REQUIRE(out.extremes.size() == 3);
  CHECK(out.extremes[2] == Set{0, 3});
  // All weights positive: the minimum-weight common independent set is empty.
  CHECK(out.best == Set{});
}

TEST_CASE("a negative singleton wins") {
  PartitionMatroid m1({0, 1}, {1, 1});
  PartitionMatroid m2({0, 1}, {1, 1});
  VecR w{Rational(-3), Rational(2)};
  CommonIndependentFamily family(m1, m2);
  WeightOracle oracle(HiddenWeights(w), family);
  auto out = min_weight_common_independent(m1, m2, oracle);
  CHECK(out.best == Set{0});
}

TEST_CASE("matroid intersection equals exhaustive enumeration; extremes verify") {
  Prng prng(43);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = random_bipartite(prng);
    CommonIndependentFamily family(*inst.m1, *inst.m2);
    WeightOracle oracle(HiddenWeights(inst.w), family);
    auto out = min_weight_common_independent(*inst.m1, *inst.m2, oracle);
    auto all = family.enumerate();
    Rational best;
    bool first = true;
    for (const auto& s : all) {
      Rational v = set_weight(inst.w, s);
      if (first || v < best) { best = v; first = false; }
    }
    CHECK(family.contains(out.best));
    CHECK(set_weight(inst.w, out.best) == best);
    // Extremality: Y_t minimal among common independent sets of size t.
    for (size_t t = 0; t < out.extremes.size(); ++t) {
      Rational val = set_weight(inst.w, out.extremes[t]);
      for (const auto& s : all)
        if (s.size() == t) CHECK(val <= set_weight(inst.w, s));
    }
    // Termination: no larger common independent set exists.
    for (const auto& s : all) CHECK(s.size() <= out.extremes.back().size());
    // Budget.
    double n4 = std::pow(static_cast<double>(inst.ne), 4);
    CHECK(oracle.ledger().count_compare <= 2 * n4 + 64);
  }
}

TEST_CASE("no negative cycles in the exchange graph of extreme sets") {
  Prng prng(47);
  for (int trial = 0; trial < 15; ++trial) {
    auto inst = random_bipartite(prng, 8);
    CommonIndependentFamily family(*inst.m1, *inst.m2);
    WeightOracle oracle(HiddenWeights(inst.w), family);
    auto out = min_weight_common_independent(*inst.m1, *inst.m2, oracle);
    for (const auto& y : out.extremes) {
      auto h = build_intersection_graph(*inst.m1, *inst.m2, y);
      // Exhaustive simple-cycle enumeration over the (small) ground set.
      const int n = inst.ne;
      std::function<void(int, int, Rational, std::vector<char>&)> dfs =
          [&](int start, int cur, Rational len, std::vector<char>& used) {
            for (int nxt = 0; nxt < n; ++nxt) {
              if (!h.arc[cur][nxt]) continue;
              Rational step = 0;
              // Arc into nxt toggles nxt: entering Y elements costs -w, new
              // elements +w.
              bool nxt_in_y = std::find(y.begin(), y.end(), nxt) != y.end();
              step = nxt_in_y ? -inst.w[nxt] : inst.w[nxt];
              if (nxt == start) {
                CHECK(len + step >= 0);
                continue;
              }
              if (used[nxt]) continue;
              used[nxt] = 1;
              dfs(start, nxt, len + step, used);
              used[nxt] = 0;
            }
          };
      for (int start = 0; start < n; ++start) {
        std::vector<char> used(n, 0);
        used[start] = 1;
        bool start_in_y = std::find(y.begin(), y.end(), start) != y.end();
        Rational init = start_in_y ? -inst.w[start] : inst.w[start];
        dfs(start, start, init, used);
      }
    }
  }
}
