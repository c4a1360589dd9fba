#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqopt/numeric.hpp"

namespace cqopt {

// A feasible set is a sorted list of distinct ground-set indices in [0, n).
using Set = std::vector<int>;

inline Set set_from_mask(uint64_t mask, int n) {
  Set s;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) s.push_back(i);
  return s;
}

inline uint64_t mask_from_set(const Set& s) {
  uint64_t m = 0;
  for (int e : s) m |= 1ull << e;
  return m;
}

inline std::vector<int> indicator_of(const Set& s, int n) {
  std::vector<int> ind(n, 0);
  for (int e : s) ind[e] = 1;
  return ind;
}

struct InfeasibleQuery : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotEnumerable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hidden element weights. Exact rationals; the optional integer mode
// constrains every entry to an integer in [-B, B].
class HiddenWeights {
 public:
  explicit HiddenWeights(VecR w) : w_(std::move(w)) {}

  static HiddenWeights integers(std::vector<int64_t> w, int64_t bound) {
    VecR r(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] < -bound || w[i] > bound)
        throw std::invalid_argument("integer weight outside [-B, B]");
      r[i] = Rational(w[i]);
    }
    HiddenWeights hw(std::move(r));
    hw.integer_bound_ = bound;
    return hw;
  }

  int n() const { return static_cast<int>(w_.size()); }
  const VecR& values() const { return w_; }
  bool integer_mode() const { return integer_bound_.has_value(); }
  int64_t bound() const { return integer_bound_.value(); }

  Rational weight_of(const Set& s) const {
    Rational acc = 0;
    for (int e : s) acc += w_[e];
    return acc;
  }

 private:
  VecR w_;
  std::optional<int64_t> integer_bound_;
};

// Abstract set system over a ground set of size n.
class FeasibleFamily {
 public:
  virtual ~FeasibleFamily() = default;
  virtual int n() const = 0;
  virtual bool contains(const Set& s) const = 0;
  virtual bool enumerable() const { return false; }
  // Enumerates all feasible sets. Only valid when enumerable().
  virtual std::vector<Set> enumerate() const { throw NotEnumerable("family is not enumerable"); }
  std::vector<int> indicator(const Set& s) const { return indicator_of(s, n()); }
};

// Explicit list of feasible sets (bitmask-backed, so n <= 64).
class ExplicitFamily : public FeasibleFamily {
 public:
  ExplicitFamily(int n, std::vector<uint64_t> masks) : n_(n), masks_(std::move(masks)) {}

  int n() const override { return n_; }
  bool contains(const Set& s) const override {
    uint64_t m = mask_from_set(s);
    for (uint64_t f : masks_)
      if (f == m) return true;
    return false;
  }
  bool enumerable() const override { return true; }
  std::vector<Set> enumerate() const override {
    std::vector<Set> out;
    out.reserve(masks_.size());
    for (uint64_t m : masks_) out.push_back(set_from_mask(m, n_));
    return out;
  }
  const std::vector<uint64_t>& masks() const { return masks_; }

 private:
  int n_;
  std::vector<uint64_t> masks_;
};

class PowersetFamily : public FeasibleFamily {
 public:
  explicit PowersetFamily(int n) : n_(n) {}
  int n() const override { return n_; }
  bool contains(const Set&) const override { return true; }
  bool enumerable() const override { return n_ <= 20; }
  std::vector<Set> enumerate() const override {
    if (n_ > 20) throw NotEnumerable("powerset too large");
    std::vector<Set> out;
    out.reserve(1ull << n_);
    for (uint64_t m = 0; m < (1ull << n_); ++m) out.push_back(set_from_mask(m, n_));
    return out;
  }

 private:
  int n_;
};

class KSubsetFamily : public FeasibleFamily {
 public:
  KSubsetFamily(int n, int k) : n_(n), k_(k) {}
  int n() const override { return n_; }
  bool contains(const Set& s) const override { return static_cast<int>(s.size()) == k_; }
  bool enumerable() const override { return n_ <= 20; }
  std::vector<Set> enumerate() const override {
    std::vector<Set> out;
    for (uint64_t m = 0; m < (1ull << n_); ++m)
      if (__builtin_popcountll(m) == k_) out.push_back(set_from_mask(m, n_));
    return out;
  }
  int k() const { return k_; }

 private:
  int n_, k_;
};

// Family defined by a membership predicate; optionally enumerable via a
// caller-supplied listing routine.
class PredicateFamily : public FeasibleFamily {
 public:
  PredicateFamily(int n, std::function<bool(const Set&)> pred,
                  std::function<std::vector<Set>()> lister = nullptr)
      : n_(n), pred_(std::move(pred)), lister_(std::move(lister)) {}
  int n() const override { return n_; }
  bool contains(const Set& s) const override { return pred_(s); }
  bool enumerable() const override { return static_cast<bool>(lister_); }
  std::vector<Set> enumerate() const override {
    if (!lister_) throw NotEnumerable("no lister provided");
    return lister_();
  }

 private:
  int n_;
  std::function<bool(const Set&)> pred_;
  std::function<std::vector<Set>()> lister_;
};

enum class QueryKind { Compare, Equality, Constant, CutCompare, CutMarginal, WalkCompare };

const char* query_kind_name(QueryKind k);

struct QueryRecord {
  QueryKind kind;
  std::vector<int> lhs;   // element indices (or vertices for cut/walk queries)
  std::vector<int> rhs;
  std::string constant;   // populated for Constant queries
  Sign answer;
};

// Transcript plus per-kind counters for every query an oracle answered.
class QueryLedger {
 public:
  void record(QueryRecord rec) {
    switch (rec.kind) {
      case QueryKind::Compare: ++count_compare; break;
      case QueryKind::Equality: ++count_equality; break;
      case QueryKind::Constant: ++count_constant; break;
      case QueryKind::CutCompare: ++count_compare; break;
      case QueryKind::CutMarginal: ++count_marginal; break;
      case QueryKind::WalkCompare: ++count_compare; break;
    }
    transcript.push_back(std::move(rec));
  }

  long total() const { return count_compare + count_equality + count_constant + count_marginal; }

  // One JSON object per line: {kind, lhs, rhs, answer, index}.
  std::string to_jsonl() const;

  long count_compare = 0;
  long count_equality = 0;
  long count_constant = 0;
  long count_marginal = 0;
  std::vector<QueryRecord> transcript;
};

// The comparison oracle of the model: holds the hidden weights, answers only
// sign-of-difference queries over feasible sets, and enforces feasibility of
// every operand.
class WeightOracle {
 public:
  WeightOracle(HiddenWeights weights, const FeasibleFamily& family)
      : weights_(std::move(weights)), family_(family) {
    if (weights_.n() != family.n())
      throw std::invalid_argument("weights/family ground size mismatch");
  }

  // sign(w(S) - w(T)).
  Sign compare(const Set& s, const Set& t) {
    require_feasible(s);
    require_feasible(t);
    Sign ans = sign_of(weights_.weight_of(s) - weights_.weight_of(t));
    ledger_.record({QueryKind::Compare, s, t, "", ans});
    return ans;
  }

  // true iff w(S) = w(T); a strictly weaker query with its own counter.
  bool compare_equality(const Set& s, const Set& t) {
    require_feasible(s);
    require_feasible(t);
    Sign ans = sign_of(weights_.weight_of(s) - weights_.weight_of(t)) == 0 ? 0 : 1;
    ledger_.record({QueryKind::Equality, s, t, "", ans});
    return ans == 0;
  }

  // sign(w(S) - t) for a caller-supplied constant t.
  Sign compare_constant(const Set& s, const Rational& t) {
    require_feasible(s);
    Sign ans = sign_of(weights_.weight_of(s) - t);
    ledger_.record({QueryKind::Constant, s, {}, rational_to_string(t), ans});
    return ans;
  }

  int n() const { return family_.n(); }
  const FeasibleFamily& family() const { return family_; }
  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

  // Test-harness escape hatch: solvers must never call this.
  const HiddenWeights& hidden_weights_for_testing() const { return weights_; }

 private:
  void require_feasible(const Set& s) const {
    if (!family_.contains(s)) throw InfeasibleQuery("operand not in feasible family");
  }

  HiddenWeights weights_;
  const FeasibleFamily& family_;
  QueryLedger ledger_;
};

// Verification oracle: exhaustive minimum with lexicographic-indicator
// tie-break. Independent of every solver path.
Set brute_force_argmin(const FeasibleFamily& family, const HiddenWeights& weights);

// Lexicographic order on indicator vectors (index 0 first).
bool indicator_less(const Set& a, const Set& b, int n);

}  // namespace cqopt
