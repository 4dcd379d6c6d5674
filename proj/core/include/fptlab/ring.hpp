#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <numeric>
#include <string>

#include "fptlab/errors.hpp"

namespace fptlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Ring protocol: value types with +, -, *, unary -, == plus the free
// functions below. ring_zero/ring_one take a sample element because some
// rings (prime fields, polynomial rings) carry runtime structure that a
// bare type cannot reproduce.

inline BigInt ring_zero(const BigInt&) { return BigInt(0); }
inline BigInt ring_one(const BigInt&) { return BigInt(1); }
inline BigInt ring_from_int(const BigInt&, long long n) { return BigInt(n); }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }
inline bool is_one(const BigInt& a) { return a == 1; }

inline BigRational ring_zero(const BigRational&) { return BigRational(0); }
inline BigRational ring_one(const BigRational&) { return BigRational(1); }
inline BigRational ring_from_int(const BigRational&, long long n) { return BigRational(n); }
inline bool is_zero(const BigRational& a) { return a.is_zero(); }
inline bool is_one(const BigRational& a) { return a == 1; }

inline BigRational ring_inv(const BigRational& a) {
  if (a.is_zero()) throw DivisionByZero("1/0 in rationals");
  return BigRational(1) / a;
}

template <typename R>
concept Ring = requires(const R& a, const R& b, long long n) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { ring_zero(a) } -> std::convertible_to<R>;
  { ring_one(a) } -> std::convertible_to<R>;
  { ring_from_int(a, n) } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { is_one(a) } -> std::convertible_to<bool>;
};

template <typename R>
concept FieldRing = Ring<R> && requires(const R& a) {
  { ring_inv(a) } -> std::convertible_to<R>;
};

/// Reduced fraction with machine-word parts. Denominators arising here are
/// powers of a prime p, so 64 bits cover every level this library can reach.
struct Rat64 {
  long long num = 0;
  long long den = 1;

  Rat64() = default;
  Rat64(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend bool operator==(const Rat64&, const Rat64&) = default;

  friend bool operator<(const Rat64& a, const Rat64& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace fptlab
