#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cqopt/cut_oracle.hpp"
#include "cqopt/oracle.hpp"
#include "cqopt/separation.hpp"
#include "cqopt/sort.hpp"

namespace cqopt {

struct NotAMatroid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DifferentComponents : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCommonIndependent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Independence oracle for a matroid on ground set [0, n). Independence tests
// are structural information and are not counted as comparison queries.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual int n() const = 0;
  virtual bool is_independent(const Set& s) const = 0;
  int rank() const;  // rank of the full ground set, by greedy probing
};

// Graphic matroid: elements are edges, independence is acyclicity.
class GraphicMatroid : public MatroidOracle {
 public:
  GraphicMatroid(int n_vertices, std::vector<Edge> edges)
      : n_vertices_(n_vertices), edges_(std::move(edges)) {}
  int n() const override { return static_cast<int>(edges_.size()); }
  bool is_independent(const Set& s) const override;
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int n_vertices_;
  std::vector<Edge> edges_;
};

class LinearMatroidOracle : public MatroidOracle {
 public:
  explicit LinearMatroidOracle(LinearMatroid lm) : lm_(std::move(lm)) {}
  int n() const override { return lm_.n(); }
  bool is_independent(const Set& s) const override { return lm_.is_independent(s); }
  const LinearMatroid& rep() const { return lm_; }

 private:
  LinearMatroid lm_;
};

class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(int n, int k) : n_(n), k_(k) {}
  int n() const override { return n_; }
  bool is_independent(const Set& s) const override {
    return static_cast<int>(s.size()) <= k_;
  }

 private:
  int n_, k_;
};

class PartitionMatroid : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> capacity)
      : block_of_(std::move(block_of)), capacity_(std::move(capacity)) {}
  int n() const override { return static_cast<int>(block_of_.size()); }
  bool is_independent(const Set& s) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> capacity_;
};

// Greedy basis scanning elements in ascending index order.
Set greedy_basis(const MatroidOracle& m);

// Bipartite exchange structure of a basis: {x not in B, y in B} is an edge
// iff B + x - y is again a basis.
struct BasisExchangeGraph {
  Set basis;
  std::vector<std::vector<char>> exchange;  // exchange[x][y], x outside, y inside
  std::vector<int> component_of;            // per element; components of H(B)
  int n_components = 0;
};

BasisExchangeGraph build_exchange_graph(const MatroidOracle& m, const Set& basis);

// Matroid connected components via the exchange graph of a greedy basis.
BasisExchangeGraph matroid_components(const MatroidOracle& m);

// sign(w_e - w_f) for elements in one component, realized with exactly one
// comparison of two bases differing in {e, f}.
Sign compare_elements(const MatroidOracle& m, WeightOracle& oracle, int e, int f,
                      const BasisExchangeGraph& h);

// Minimum-weight basis by per-component merge sort over compare_elements and
// the greedy algorithm.
Set min_weight_basis(const MatroidOracle& m, WeightOracle& oracle);

// Feasible family adapter: the bases of a matroid.
class MatroidBasesFamily : public FeasibleFamily {
 public:
  explicit MatroidBasesFamily(const MatroidOracle& m) : m_(m), rank_(m.rank()) {}
  int n() const override { return m_.n(); }
  bool contains(const Set& s) const override {
    return static_cast<int>(s.size()) == rank_ && m_.is_independent(s);
  }
  bool enumerable() const override { return m_.n() <= 20; }
  std::vector<Set> enumerate() const override;
  int rank() const { return rank_; }

 private:
  const MatroidOracle& m_;
  int rank_;
};

}  // namespace cqopt
