#include "cqopt/gsl.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace cqopt {

VecZ indicator_diff(const Set& a, const Set& b, int n) {
  VecZ d(n, 0);
  for (int e : a) d[e] += 1;
  for (int e : b) d[e] -= 1;
  return d;
}

std::optional<int> GslState::classify(const Set& x) const {
  std::optional<int> found;
  for (size_t i = 0; i < buckets.size(); ++i) {
    if (subspace.member(indicator_diff(x, buckets[i].representative(), n))) {
      if (found) throw SeparatorInconsistent("set classifies into two buckets");
      found = static_cast<int>(i);
    }
  }
  return found;
}

std::string GslState::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["ordered"] = ordered;
  j["separation_steps"] = separation_steps;
  auto& jb = j["buckets"] = nlohmann::json::array();
  for (const auto& b : buckets) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& s : b.members) members.push_back(indicator_of(s, n));
    jb.push_back(members);
  }
  auto& basis = j["basis"] = nlohmann::json::array();
  for (const auto& row : subspace.raw_rows()) {
    std::vector<long long> r;
    for (const auto& v : row) r.push_back(static_cast<long long>(v));
    basis.push_back(r);
  }
  auto& order = j["order"] = nlohmann::json::array();
  for (size_t i = 0; i < buckets.size(); ++i) order.push_back(i);
  return j.dump();
}

GslState GslState::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GslState st;
  st.n = j["n"].get<int>();
  st.ordered = j["ordered"].get<bool>();
  st.separation_steps = j["separation_steps"].get<long>();
  for (const auto& jb : j["buckets"]) {
    GslBucket b;
    for (const auto& ind : jb) {
      Set s;
      for (int e = 0; e < st.n; ++e)
        if (ind[e].get<int>() == 1) s.push_back(e);
      b.members.push_back(std::move(s));
    }
    st.buckets.push_back(std::move(b));
  }
  for (const auto& row : j["basis"]) {
    VecZ r;
    for (const auto& v : row) r.push_back(BigInt(v.get<long long>()));
    st.subspace.add(r);
  }
  return st;
}

EnumerationSeparator::EnumerationSeparator(const FeasibleFamily& family) {
  all_ = family.enumerate();
  int n = family.n();
  std::sort(all_.begin(), all_.end(),
            [n](const Set& a, const Set& b) { return indicator_less(a, b, n); });
}

std::optional<Set> EnumerationSeparator::next(const GslState& state) {
  for (const auto& s : all_)
    if (!state.classify(s)) return s;
  return std::nullopt;
}

namespace {

// Binary search of y among the ordered representatives. On a 0 answer the
// subspace gains the direction y - r_i; otherwise a fresh bucket opens at the
// insertion position.
void ordered_update(GslState& state, WeightOracle& oracle, const Set& y) {
  int lo = 0, hi = static_cast<int>(state.buckets.size()) - 1;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    Sign s = oracle.compare(y, state.buckets[mid].representative());
    if (s == 0) {
      state.subspace.add(indicator_diff(y, state.buckets[mid].representative(), state.n));
      state.buckets[mid].members.push_back(y);
      return;
    }
    if (s < 0)
      hi = mid - 1;
    else
      lo = mid + 1;
  }
  GslBucket b;
  b.members.push_back(y);
  state.buckets.insert(state.buckets.begin() + lo, std::move(b));
}

void equality_update(GslState& state, WeightOracle& oracle, const Set& y) {
  for (auto& bucket : state.buckets) {
    if (oracle.compare_equality(y, bucket.representative())) {
      state.subspace.add(indicator_diff(y, bucket.representative(), state.n));
      bucket.members.push_back(y);
      return;
    }
  }
  GslBucket b;
  b.members.push_back(y);
  state.buckets.push_back(std::move(b));
}

GslState run_impl(WeightOracle& oracle, GslSeparator& separator, const GslOptions& opts,
                  bool ordered) {
  GslState state;
  state.n = oracle.n();
  state.ordered = ordered;
  for (;;) {
    auto y = separator.next(state);
    if (!y) break;
    if (state.classify(*y))
      throw SeparatorInconsistent("separator returned an already-classified point");
    int phi_before = state.potential();
    ++state.separation_steps;
    if (opts.max_steps > 0 && state.separation_steps > opts.max_steps)
      throw std::runtime_error("GSL exceeded its 2nB+n iteration bound");
    if (ordered)
      ordered_update(state, oracle, *y);
    else
      equality_update(state, oracle, *y);
    if (state.potential() != phi_before + 1)
      throw std::runtime_error("GSL potential did not increase by exactly 1");
  }
  return state;
}

}  // namespace

GslState gsl_run(WeightOracle& oracle, GslSeparator& separator, const GslOptions& opts) {
  return run_impl(oracle, separator, opts, /*ordered=*/true);
}

GslState gsl_run_equality_only(WeightOracle& oracle, GslSeparator& separator,
                               const GslOptions& opts) {
  return run_impl(oracle, separator, opts, /*ordered=*/false);
}

}  // namespace cqopt
