#pragma once

#include "cqopt/matroid.hpp"

namespace cqopt {

// Directed exchange graph of a common independent set Y: arcs (y, x) when
// Y - y + x stays independent in M1 and (x, y) when it stays independent in
// M2; X1 and X2 are the directly-insertable elements.
struct IntersectionExchangeGraph {
  Set y;
  std::vector<std::vector<char>> arc;  // arc[a][b]: directed a -> b
  std::vector<char> x1, x2;            // per element
};

IntersectionExchangeGraph build_intersection_graph(const MatroidOracle& m1,
                                                   const MatroidOracle& m2, const Set& y);

// Feasible family adapter: common independent sets of two matroids.
class CommonIndependentFamily : public FeasibleFamily {
 public:
  CommonIndependentFamily(const MatroidOracle& m1, const MatroidOracle& m2) : m1_(m1), m2_(m2) {}
  int n() const override { return m1_.n(); }
  bool contains(const Set& s) const override {
    return m1_.is_independent(s) && m2_.is_independent(s);
  }
  bool enumerable() const override { return n() <= 20; }
  std::vector<Set> enumerate() const override;

 private:
  const MatroidOracle& m1_;
  const MatroidOracle& m2_;
};

// One augmentation: the minimal (length, then arc count) shortest augmenting
// path from X1 to X2, with every length comparison realized as a comparison
// of the corresponding common independent sets Y (triangle) P. Returns the
// path as its vertex sequence, or nullopt when no augmenting path exists.
std::optional<std::vector<int>> modified_bellman_ford(const MatroidOracle& m1,
                                                      const MatroidOracle& m2, const Set& y,
                                                      WeightOracle& oracle);

struct IntersectionOutcome {
  Set best;
  std::vector<Set> extremes;  // Y_0, Y_1, ... as produced by the augmentations
};

// Weighted matroid intersection: grow extreme sets by minimal augmenting
// paths until maximum cardinality, then return the comparison-minimal one.
IntersectionOutcome min_weight_common_independent(const MatroidOracle& m1,
                                                  const MatroidOracle& m2, WeightOracle& oracle);

}  // namespace cqopt
