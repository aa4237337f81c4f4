#include <numeric>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "magma/arith.hpp"

namespace magma {
namespace {

std::uint64_t lcm_of(std::vector<std::int64_t> xs) { return lcm_list(xs); }
std::uint64_t gcd_of(std::vector<std::int64_t> xs) { return gcd_list(xs); }

TEST(LcmList, EmptyListIsOne) { EXPECT_EQ(lcm_of({}), 1u); }

TEST(LcmList, Examples) {
  EXPECT_EQ(lcm_of({2, 2, 2}), 2u);
  EXPECT_EQ(lcm_of({4, 6}), 12u);
  EXPECT_EQ(lcm_of({7}), 7u);
}

TEST(LcmList, RejectsNonPositive) {
  EXPECT_THROW(lcm_of({3, 0}), std::invalid_argument);
  EXPECT_THROW(lcm_of({-2}), std::invalid_argument);
}

TEST(LcmList, OverflowIsReported) {
  EXPECT_THROW(lcm_of({4294967311, 4294967357, 4294967371}), std::overflow_error);
}

TEST(GcdList, Examples) {
  EXPECT_EQ(gcd_of({2, 2, 2}), 2u);
  EXPECT_EQ(gcd_of({4, 6}), 2u);
  EXPECT_EQ(gcd_of({5}), 5u);
}

TEST(GcdList, RejectsEmptyAndNonPositive) {
  EXPECT_THROW(gcd_of({}), std::invalid_argument);
  EXPECT_THROW(gcd_of({4, 0}), std::invalid_argument);
}

TEST(GcdLcm, ProductIdentityForPairs) {
  for (std::int64_t a = 1; a <= 30; ++a) {
    for (std::int64_t b = 1; b <= 30; ++b) {
      EXPECT_EQ(gcd_of({a, b}) * lcm_of({a, b}), static_cast<std::uint64_t>(a * b)) << a << "," << b;
    }
  }
}

TEST(GcdLcm, ProductIdentityFailsForTriples) {
  // (2,2,2): product / lcm = 4 but gcd = 2.
  EXPECT_EQ(8u / lcm_of({2, 2, 2}), 4u);
  EXPECT_EQ(gcd_of({2, 2, 2}), 2u);
}

TEST(BigCount, RejectsNegative) { EXPECT_THROW(BigCount(BigInt(-1)), std::domain_error); }

TEST(BigCount, ExactBeyondSixtyFourBits) {
  const BigCount big = power(BigCount(3), 100);
  EXPECT_EQ(big.str(), "515377520732011331036461129765621272702107522001");
  EXPECT_EQ(parse_big_count(big.str()), big);
}

TEST(BigCount, ZeroToTheZeroIsOne) {
  EXPECT_EQ(power(BigCount(0), 0), BigCount(1));
  EXPECT_EQ(power(BigCount(0), 3), BigCount(0));
}

TEST(BigCount, ParseRejectsGarbage) {
  EXPECT_THROW(parse_big_count("-3"), std::invalid_argument);
  EXPECT_THROW(parse_big_count(""), std::invalid_argument);
  EXPECT_THROW(parse_big_count("1e5"), std::invalid_argument);
}

TEST(ExactRational, LowestTerms) {
  const ExactRational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
}

TEST(Divisors, AscendingAndComplete) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(49), (std::vector<std::uint64_t>{1, 7, 49}));
  for (std::uint64_t x = 1; x <= 200; ++x) {
    std::vector<std::uint64_t> brute;
    for (std::uint64_t d = 1; d <= x; ++d) {
      if (x % d == 0) brute.push_back(d);
    }
    EXPECT_EQ(divisors(x), brute);
  }
}

TEST(CheckedPow, OverflowAndConventions) {
  EXPECT_EQ(checked_pow(0, 0), 1u);
  EXPECT_EQ(checked_pow(0, 5), 0u);
  EXPECT_EQ(checked_pow(1, 1000000), 1u);
  EXPECT_EQ(checked_pow(2, 63), std::uint64_t{1} << 63);
  EXPECT_THROW(checked_pow(2, 64), std::overflow_error);
}

}  // namespace
}  // namespace magma
