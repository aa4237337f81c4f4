#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace magma {

using BigInt = mpz_class;

/// Exact rational backed by GMP. Arithmetic results are always canonical
/// (lowest terms, positive denominator); use make_rational to build one
/// from a raw numerator/denominator pair.
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator);

/// Arbitrary-precision non-negative integer holding every count.
class BigCount {
 public:
  BigCount() = default;
  BigCount(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigCount(BigInt value);

  const BigInt& value() const { return value_; }
  std::string str() const { return value_.get_str(); }
  bool is_zero() const { return sgn(value_) == 0; }

  BigCount& operator+=(const BigCount& other) {
    value_ += other.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& other) {
    value_ *= other.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

/// Parses a decimal string; throws std::invalid_argument on anything else.
BigCount parse_big_count(const std::string& decimal);

/// base^exponent with 0^0 = 1.
BigCount power(const BigCount& base, std::uint64_t exponent);

/// Least common multiple. Empty list gives 1, a singleton gives its entry.
/// Throws std::invalid_argument for entries <= 0 and std::overflow_error
/// if the result leaves the 64-bit range.
std::uint64_t lcm_list(std::span<const std::int64_t> xs);

/// Greatest common divisor of a non-empty list of positive integers.
/// There is no empty-list convention; an empty list throws.
std::uint64_t gcd_list(std::span<const std::int64_t> xs);

BigInt factorial(std::uint64_t n);

/// Positive divisors in ascending order, by trial division.
std::vector<std::uint64_t> divisors(std::uint64_t x);

/// Throws std::overflow_error instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace magma
