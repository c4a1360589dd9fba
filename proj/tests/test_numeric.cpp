#include <doctest.h>

#include "cqopt/numeric.hpp"
#include "cqopt/prng.hpp"

using namespace cqopt;

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("100001/100") == Rational(100001, 100));
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("sign_of matches exact comparison") {
  CHECK(sign_of(Rational(1, 3) - Rational(2, 6)) == 0);
  CHECK(sign_of(Rational(-5)) == -1);
  CHECK(sign_of(BigInt(42)) == +1);
}

TEST_CASE("bigint_pow computes exact powers") {
  CHECK(bigint_pow(BigInt(2), 64) == BigInt("18446744073709551616"));
  CHECK(bigint_pow(BigInt(3), 0) == 1);
  CHECK(bigint_pow(BigInt(10), 20) == BigInt("100000000000000000000"));
}

TEST_CASE("prng replays identically and stays unbiased-ish") {
  Prng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Prng c(7);
  long ones = 0;
  for (int i = 0; i < 20000; ++i) ones += c.bernoulli(0.25);
  CHECK(ones > 4500);
  CHECK(ones < 5500);
  for (int i = 0; i < 1000; ++i) {
    int64_t v = c.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
