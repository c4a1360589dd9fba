#include <doctest.h>

#include "cqopt/experiment.hpp"
#include "cqopt/matroid.hpp"

#include <cmath>

using namespace cqopt;

namespace {

Rational set_weight(const VecR& w, const Set& s) {
  Rational acc = 0;
  for (int e : s) acc += w[e];
  return acc;
}

}  // namespace

TEST_CASE("matroid components from the exchange graph") {
  // Triangle: all three edges share a circuit, one component.
  GraphicMatroid tri(3, {{0, 1}, {0, 2}, {1, 2}});
  auto h1 = matroid_components(tri);
  CHECK(h1.n_components == 1);

  // Two disjoint triangles: two components.
  GraphicMatroid two(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  auto h2 = matroid_components(two);
  CHECK(h2.n_components == 2);
  for (int e = 0; e < 3; ++e) CHECK(h2.component_of[e] == h2.component_of[0]);
  for (int e = 3; e < 6; ++e) CHECK(h2.component_of[e] == h2.component_of[3]);
  CHECK(h2.component_of[0] != h2.component_of[3]);

  // Free matroid: no exchanges, all singletons.
  UniformMatroid free_m(4, 4);
  auto h3 = matroid_components(free_m);
  CHECK(h3.n_components == 4);
}

TEST_CASE("compare_elements via one basis comparison") {
  GraphicMatroid tri(3, {{0, 1}, {0, 2}, {1, 2}});
  VecR w{Rational(1), Rational(2), Rational(3)};
  MatroidBasesFamily family(tri);
  WeightOracle oracle(HiddenWeights(w), family);
  auto h = matroid_components(tri);
  CHECK(compare_elements(tri, oracle, 0, 1, h) == -1);
  CHECK(compare_elements(tri, oracle, 2, 0, h) == +1);
  CHECK(compare_elements(tri, oracle, 1, 1, h) == 0);
  // Each nontrivial call costs exactly one comparison.
  long before = oracle.ledger().count_compare;
  compare_elements(tri, oracle, 1, 2, h);
  CHECK(oracle.ledger().count_compare - before == 1);

  // Different components reject.
  GraphicMatroid two(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  MatroidBasesFamily fam2(two);
  WeightOracle o2(HiddenWeights(VecR(6, Rational(1))), fam2);
  auto h2 = matroid_components(two);
  CHECK_THROWS_AS(compare_elements(two, o2, 0, 3, h2), DifferentComponents);

  // Transitivity spot check on a random graphic matroid.
  Prng prng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto edges = gen::gnp_edges(5, 0.8, prng);
    if (edges.size() < 3) continue;
    GraphicMatroid gm(5, edges);
    auto hh = matroid_components(gm);
    MatroidBasesFamily fam(gm);
    auto wts = gen::rational_weights(gm.n(), prng);
    WeightOracle oo(HiddenWeights(wts), fam);
    for (int e = 0; e < gm.n(); ++e)
      for (int f = 0; f < gm.n(); ++f) {
        if (hh.component_of[e] != hh.component_of[f]) continue;
        Sign got = compare_elements(gm, oo, e, f, hh);
        CHECK(got == sign_of(wts[e] - wts[f]));
      }
  }
}

TEST_CASE("min weight basis on pinned instances") {
  GraphicMatroid tri(3, {{0, 1}, {0, 2}, {1, 2}});
  VecR w{Rational(1), Rational(2), Rational(3)};
  MatroidBasesFamily family(tri);
  WeightOracle oracle(HiddenWeights(w), family);
  auto basis = min_weight_basis(tri, oracle);
  CHECK(basis == Set{0, 1});
  CHECK(set_weight(w, basis) == 3);

  // Free matroid: the unique basis is everything.
  UniformMatroid free_m(4, 4);
  MatroidBasesFamily fam2(free_m);
  WeightOracle o2(HiddenWeights(VecR(4, Rational(1))), fam2);
  CHECK(min_weight_basis(free_m, o2) == Set{0, 1, 2, 3});
}

TEST_CASE("min weight basis matches brute force with an n log n budget") {
  Prng prng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::unique_ptr<MatroidOracle> m;
    if (trial % 2 == 0) {
      int nv = 4 + static_cast<int>(prng.below(3));
      auto edges = gen::gnp_edges(nv, 0.7, prng);
      while (edges.size() > 10) edges.pop_back();
      if (edges.empty()) edges.push_back({0, 1});
      m = std::make_unique<GraphicMatroid>(nv, edges);
    } else {
      int k = 2 + static_cast<int>(prng.below(3));
      int n = k + 2 + static_cast<int>(prng.below(5));
      LinearMatroid lm;
      lm.v = gen::linear_matroid_matrix(k, n, 3, prng);
      m = std::make_unique<LinearMatroidOracle>(std::move(lm));
    }
    auto w = gen::rational_weights(m->n(), prng);
    MatroidBasesFamily family(*m);
    WeightOracle oracle(HiddenWeights(w), family);
    auto basis = min_weight_basis(*m, oracle);
    CHECK(family.contains(basis));
    Rational best;
    bool first = true;
    for (const auto& b : family.enumerate()) {
      Rational val = set_weight(w, b);
      if (first || val < best) { best = val; first = false; }
    }
    CHECK(set_weight(w, basis) == best);
    double budget = m->n() * std::log2(m->n() + 1);
    CHECK(oracle.ledger().count_compare <= 3 * budget + 8);
  }
}

TEST_CASE("exchange validity holds for every probed swap") {
  Prng prng(29);
  for (int trial = 0; trial < 10; ++trial) {
    auto edges = gen::gnp_edges(5, 0.7, prng);
    if (edges.size() < 2) continue;
    GraphicMatroid gm(5, edges);
    auto basis = greedy_basis(gm);
    auto h = build_exchange_graph(gm, basis);
    for (int x = 0; x < gm.n(); ++x)
      for (int y : basis) {
        if (!h.exchange[x][y]) continue;
        Set swapped;
        for (int e : basis)
          if (e != y) swapped.push_back(e);
        swapped.push_back(x);
        std::sort(swapped.begin(), swapped.end());
        CHECK(gm.is_independent(swapped));
        CHECK(swapped.size() == basis.size());
      }
  }
}

TEST_CASE("hereditary and exchange spot checks on the shipped matroids") {
  Prng prng(31);
  GraphicMatroid gm(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}});
  PartitionMatroid pm({0, 0, 1, 1, 2, 2}, {1, 2, 1});
  LinearMatroid lmRep;
  lmRep.v = gen::linear_matroid_matrix(3, 6, 2, prng);
  LinearMatroidOracle lm(lmRep);
  for (MatroidOracle* m : std::initializer_list<MatroidOracle*>{&gm, &pm, &lm}) {
    for (int t = 0; t < 200; ++t) {
      Set s = set_from_mask(prng.below(1ull << m->n()), m->n());
      if (!m->is_independent(s) || s.empty()) continue;
      // Hereditary: dropping any element preserves independence.
      for (int e : s) {
        Set smaller;
        for (int f : s)
          if (f != e) smaller.push_back(f);
        CHECK(m->is_independent(smaller));
      }
    }
    // Exchange axiom: |A| < |B| independent implies some b extends A.
    for (int t = 0; t < 100; ++t) {
      Set a = set_from_mask(prng.below(1ull << m->n()), m->n());
      Set b = set_from_mask(prng.below(1ull << m->n()), m->n());
      if (!m->is_independent(a) || !m->is_independent(b) || a.size() >= b.size()) continue;
      bool extended = false;
      for (int e : b) {
        if (std::find(a.begin(), a.end(), e) != a.end()) continue;
        Set bigger = a;
        bigger.push_back(e);
        std::sort(bigger.begin(), bigger.end());
        if (m->is_independent(bigger)) { extended = true; break; }
      }
      CHECK(extended);
    }
  }
}
