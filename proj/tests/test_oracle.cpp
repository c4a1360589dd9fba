#include <doctest.h>

#include "cqopt/experiment.hpp"
#include "cqopt/oracle.hpp"
#include "cqopt/prng.hpp"

#include <nlohmann/json.hpp>

using namespace cqopt;

TEST_CASE("compare returns the exact sign of the weight difference") {
  PowersetFamily family(3);
  WeightOracle oracle(HiddenWeights({Rational(1), Rational(2), Rational(1)}), family);
  CHECK(oracle.compare({0}, {1}) == -1);
  CHECK(oracle.compare({0, 1}, {0, 1}) == 0);
  WeightOracle ones(HiddenWeights({Rational(1), Rational(1), Rational(1)}), family);
  CHECK(ones.compare({0, 1}, {2}) == +1);
  CHECK(ones.ledger().count_compare == 1);
  CHECK(ones.ledger().count_equality == 0);
}

TEST_CASE("equality and constant queries keep separate counters") {
  PowersetFamily family(3);
  WeightOracle oracle(HiddenWeights({Rational(1), Rational(2), Rational(3)}), family);
  CHECK(oracle.compare_equality({0, 1}, {2}));       // 1+2 = 3
  CHECK(oracle.compare_equality({0}, {0}));
  CHECK_FALSE(oracle.compare_equality({0}, {1}));
  CHECK(oracle.ledger().count_equality == 3);
  CHECK(oracle.ledger().count_compare == 0);

  PowersetFamily f2(2);
  WeightOracle o2(HiddenWeights({Rational(1), Rational(-1)}), f2);
  CHECK(o2.compare_constant({0, 1}, Rational(0)) == 0);
  PowersetFamily f1(1);
  WeightOracle o3(HiddenWeights({Rational(2)}), f1);
  CHECK(o3.compare_constant({0}, Rational(1)) == +1);
  CHECK(o3.compare_constant({0}, Rational(3)) == -1);
  CHECK(o3.ledger().count_constant == 2);
}

TEST_CASE("infeasible operands are rejected and never logged") {
  ExplicitFamily family(4, {0b0001, 0b0010});
  WeightOracle oracle(HiddenWeights({Rational(1), Rational(2), Rational(3), Rational(4)}), family);
  Prng prng(99);
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t bad = prng.below(16);
    if (bad == 1 || bad == 2) continue;
    CHECK_THROWS_AS(oracle.compare(set_from_mask(bad, 4), {0}), InfeasibleQuery);
    CHECK_THROWS_AS(oracle.compare_equality({0}, set_from_mask(bad, 4)), InfeasibleQuery);
    CHECK_THROWS_AS(oracle.compare_constant(set_from_mask(bad, 4), Rational(0)), InfeasibleQuery);
  }
  CHECK(oracle.ledger().total() == 0);
  CHECK(oracle.ledger().transcript.empty());
}

TEST_CASE("identical seeds give identical transcripts") {
  auto run = [](uint64_t seed) {
    Prng prng(seed);
    PowersetFamily family(5);
    auto w = gen::rational_weights(5, prng);
    WeightOracle oracle(HiddenWeights(w), family);
    for (int i = 0; i < 50; ++i) {
      Set s = set_from_mask(prng.below(32), 5);
      Set t = set_from_mask(prng.below(32), 5);
      oracle.compare(s, t);
    }
    return oracle.ledger().to_jsonl();
  };
  CHECK(run(42) == run(42));
  CHECK(run(42) != run(43));
}

TEST_CASE("compare agrees with an independent cross-multiplication sign") {
  Prng prng(2024);
  PowersetFamily family(6);
  for (int trial = 0; trial < 10000; ++trial) {
    auto w = gen::rational_weights(6, prng);
    WeightOracle oracle(HiddenWeights(w), family);
    Set s = set_from_mask(prng.below(64), 6);
    Set t = set_from_mask(prng.below(64), 6);
    // Independent route: sum via explicit numerator/denominator bookkeeping
    // without normalization, then cross-multiply.
    BigInt num_s = 0, den_s = 1, num_t = 0, den_t = 1;
    for (int e : s) {
      BigInt n = boost::multiprecision::numerator(w[e]);
      BigInt d = boost::multiprecision::denominator(w[e]);
      num_s = num_s * d + n * den_s;
      den_s *= d;
    }
    for (int e : t) {
      BigInt n = boost::multiprecision::numerator(w[e]);
      BigInt d = boost::multiprecision::denominator(w[e]);
      num_t = num_t * d + n * den_t;
      den_t *= d;
    }
    Sign expect = sign_of(BigInt(num_s * den_t - num_t * den_s));
    CHECK(oracle.compare(s, t) == expect);
  }
}

TEST_CASE("brute_force_argmin matches an exhaustive scan and breaks ties lexicographically") {
  ExplicitFamily tiny(2, {0b01, 0b10});
  CHECK(brute_force_argmin(tiny, HiddenWeights({Rational(3), Rational(1)})) == Set{1});
  ExplicitFamily empty_only(3, {0});
  CHECK(brute_force_argmin(empty_only, HiddenWeights({Rational(1), Rational(1), Rational(1)})) ==
        Set{});

  Prng prng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto masks = gen::random_subsets(6, 20, prng);
    auto w = gen::rational_weights(6, prng);
    ExplicitFamily family(6, masks);
    HiddenWeights hw(w);
    Set got = brute_force_argmin(family, hw);
    Rational best = hw.weight_of(got);
    for (uint64_t m : masks) {
      Rational val = hw.weight_of(set_from_mask(m, 6));
      CHECK(val >= best);
      if (val == best) CHECK_FALSE(indicator_less(set_from_mask(m, 6), got, 6));
    }
  }
}

TEST_CASE("transcript exports as one JSON object per line") {
  PowersetFamily family(3);
  WeightOracle oracle(HiddenWeights({Rational(1), Rational(2), Rational(3)}), family);
  oracle.compare({0}, {1});
  oracle.compare_constant({2}, Rational(1, 2));
  auto jsonl = oracle.ledger().to_jsonl();
  std::istringstream in(jsonl);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("kind"));
    CHECK(j.contains("lhs"));
    CHECK(j.contains("answer"));
    CHECK(j["index"] == count);
    ++count;
  }
  CHECK(count == 2);
}
