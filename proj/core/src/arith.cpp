#include "magma/arith.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace magma {

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) throw std::invalid_argument("rational with zero denominator");
  ExactRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

BigCount::BigCount(BigInt value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw std::domain_error("BigCount must be non-negative");
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.str(); }

BigCount parse_big_count(const std::string& decimal) {
  if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a non-negative decimal integer: '" + decimal + "'");
  }
  return BigCount(BigInt(decimal, 10));
}

BigCount power(const BigCount& base, std::uint64_t exponent) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exponent);
  return BigCount(std::move(r));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    r = checked_mul(r, base);
    if (r == 0 || r == 1) break;  // 0 and 1 are absorbing
  }
  return r;
}

namespace {

void require_positive(std::span<const std::int64_t> xs) {
  for (auto x : xs) {
    if (x <= 0) throw std::invalid_argument("gcd/lcm entries must be positive");
  }
}

}  // namespace

std::uint64_t lcm_list(std::span<const std::int64_t> xs) {
  require_positive(xs);
  std::uint64_t acc = 1;
  for (auto x : xs) {
    auto ux = static_cast<std::uint64_t>(x);
    acc = checked_mul(acc / std::gcd(acc, ux), ux);
  }
  return acc;
}

std::uint64_t gcd_list(std::span<const std::int64_t> xs) {
  if (xs.empty()) throw std::invalid_argument("gcd of an empty list is undefined");
  require_positive(xs);
  std::uint64_t acc = 0;
  for (auto x : xs) acc = std::gcd(acc, static_cast<std::uint64_t>(x));
  return acc;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("divisors of 0");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d <= x / d; ++d) {
    if (x % d != 0) continue;
    low.push_back(d);
    if (d != x / d) high.push_back(x / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace magma
