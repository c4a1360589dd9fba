#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqopt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sign of a comparison: one of -1, 0, +1.
using Sign = int;

inline Sign sign_of(const Rational& r) {
  if (r > 0) return +1;
  if (r < 0) return -1;
  return 0;
}

inline Sign sign_of(const BigInt& v) {
  if (v > 0) return +1;
  if (v < 0) return -1;
  return 0;
}

inline BigInt bigint_pow(BigInt base, unsigned long exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

// Parses "p/q" or a plain integer (optionally signed).
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  return Rational(num, den);
}

inline std::string rational_to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

using VecR = std::vector<Rational>;
using VecZ = std::vector<BigInt>;

inline Rational dot(const VecR& a, const VecR& b) {
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline VecR sub(const VecR& a, const VecR& b) {
  VecR out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool is_zero(const VecR& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const VecZ& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace cqopt
