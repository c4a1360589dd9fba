#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cqopt/numeric.hpp"
#include "cqopt/prng.hpp"
#include "cqopt/sort.hpp"

namespace cqopt {

struct EmptyPointSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsortedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Points with stable indices; all vectors share dimension d.
struct PointSet {
  int d = 0;
  std::vector<VecR> points;

  int size() const { return static_cast<int>(points.size()); }
  void add(VecR p);
  static PointSet from_boolean_masks(const std::vector<uint64_t>& masks, int d);
};

// Outcome of an exact cone-membership test. Farkas-complete: members carry
// nonnegative coefficients, non-members a separating functional h with
// <h, v> >= 0 for every generator and <h, x> < 0.
struct ConeCheck {
  bool member = false;
  VecR coefficients;  // indexed like the generator list (zeros for unused)
  VecR witness;
};

// Decides x in cone(V) by exact rational LP feasibility. A floating-point
// presolve proposes a basis or a dual functional, which is then verified in
// exact arithmetic; on any mismatch the decision falls back to an exact
// simplex with Bland's rule.
ConeCheck cone_member(const VecR& x, const std::vector<VecR>& generators);

// Exact-only path (no presolve). Used as the ground-truth in tests.
ConeCheck cone_member_exact(const VecR& x, const std::vector<VecR>& generators);

// Repeated membership tests against one fixed generator set.
class ConeSolver {
 public:
  explicit ConeSolver(std::vector<VecR> generators);
  ConeCheck member(const VecR& x) const;
  const std::vector<VecR>& generators() const { return gens_; }

 private:
  ConeCheck member_filtered(const VecR& x) const;

  std::vector<VecR> gens_;
  std::vector<std::vector<double>> gens_dbl_;
  std::vector<int> orig_index_;
  int orig_count_ = 0;
  int d_ = 0;
};

// Envelope of a sequence: cone of consecutive differences. The all-pairs and
// consecutive-difference generator sets span the same cone.
std::vector<VecR> envelope_generators(const PointSet& ps, const std::vector<int>& sequence);

bool envelope_member(const PointSet& ps, const std::vector<int>& sequence, const VecR& x);

// Kruskal-style scan: keep y_t iff y_t - y_1 escapes the envelope of the kept
// prefix. The result conically spans every difference y_j - y_1.
std::vector<int> basic_subsequence(const PointSet& ps, const std::vector<int>& sequence);

bool conically_independent(const PointSet& ps, const std::vector<int>& sequence);

// Smallest k with 2^k > (2k+1)^d: the sieving sample parameter for Boolean
// point sets in dimension d.
int boolean_conic_dim_bound(int d);

// Certificate that a point is the minimizer: ordered pairs (i, j), each
// asserting <w, x_i - x_j> >= 0 (point i costs at least point j).
struct Certificate {
  std::vector<std::pair<int, int>> pairs;
};

// Comparator over point indices returning sign(w(a) - w(b)).
using PointComparator = std::function<Sign(int, int)>;

struct SieveResult {
  int argmin = -1;
  long comparisons = 0;
  int outer_iterations = 0;
  std::vector<double> eliminated_fraction;  // one entry per outer iteration
};

// Iterative sieving: while more than 4k points survive, sample each with
// probability min(2k/N, 1), merge-sort the sample by oracle comparisons, and
// eliminate every x with x - y in the envelope of the sorted sample (y the
// sample minimum). Finishes by oracle-sorting the remainder; ties broken by
// lexicographically smallest point.
SieveResult sieve_optimize(const PointSet& ps, const PointComparator& compare, int k,
                           uint64_t seed);

// Certificate induced by the basic subsequence of a weight-sorted order.
// Verifies the order by spot-checking adjacent oracle comparisons.
Certificate extract_certificate(const PointSet& ps, const std::vector<int>& sorted_order,
                                const PointComparator& compare, uint64_t seed);

// P subseteq y + cone({x_i - x_j : (i,j) in C}), checked point by point.
bool verify_certificate(const PointSet& ps, int y_index, const Certificate& cert);

}  // namespace cqopt
