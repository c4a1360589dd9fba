#pragma once

#include <optional>
#include <vector>

#include "cqopt/cut_oracle.hpp"

namespace cqopt {

// A median set for u together with the exact knowledge the search may have
// produced as a side effect. The set always contains exactly
// ceil(deg(u)/2) - 1 neighbors of u; when known_degree is 1 or 2 the search
// resolved the degree outright and known_neighbor is a neighbor of u.
struct MedianResult {
  uint64_t set = 0;
  int known_degree = -1;
  int known_neighbor = -1;
};

// Query-driven structural primitives over a cut-comparison oracle.
class CutStructure {
 public:
  explicit CutStructure(CutOracle& oracle) : oracle_(oracle), n_(oracle.n()) {}

  // sign(|cut(S)| - |cut(S+u)|): +1 iff more than half of u's edges enter S.
  Sign majority_test(int u, uint64_t s);

  // Binary search along the nested chain S_0, S_0+v_1, ... for the first
  // index whose majority sign strictly increases; that v_i is a neighbor of
  // u. Throws NoSignChange when the endpoint signs agree.
  std::pair<int, int> tipping_point(int u, uint64_t s0, const std::vector<int>& additions);

  // Three cut-equality tests (Home Alone); exactly 3 queries, needs n >= 4.
  bool is_isolated(int u);

  // Prefix median along the given ordering of V - u (non-isolated u).
  MedianResult prefix_median(int u, const std::vector<int>& order);

  // Disjoint prefix and suffix medians of one ordering.
  std::pair<MedianResult, MedianResult> median_sets(int u, const std::vector<int>& order);

  // Exact neighbor set of u inside A; |A| + O(log n) queries.
  std::vector<int> neighbors_in_set(int u, const std::vector<int>& a);

  // First neighbor of u in the ordered list T, or nullopt when N(u) misses T.
  std::optional<int> first_neighbor(int u, const std::vector<int>& t);

  // Up to cap edges incident to u inside T, in T order; O(r log n) queries.
  std::vector<Edge> extract_edges(int u, const std::vector<int>& t, long cap);

  // Full edge recovery. Throws Unidentifiable exactly for K2, its complement,
  // K3, and its complement.
  std::vector<Edge> reconstruct();

  int n() const { return n_; }
  CutOracle& oracle() { return oracle_; }

 private:
  std::vector<int> default_order(int u) const;
  // Minimal chain index in [1, limit] whose majority sign exceeds base_sign,
  // given that the sign at `limit` is known to exceed it.
  int first_tip(int u, uint64_t base, const std::vector<int>& chain, int limit,
                Sign base_sign = -1);
  std::optional<int> first_neighbor_unchecked(int u, const std::vector<int>& t);

  CutOracle& oracle_;
  int n_;
};

}  // namespace cqopt
