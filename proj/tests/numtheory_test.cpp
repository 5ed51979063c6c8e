// Divisor lists, gcd guards and p-adic valuations.

#include "eulerian/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "eulerian/triangle.hpp"  // BigInt, for the template instantiation check

namespace eulerian {
namespace {

TEST(Divisors, AscendingAndComplete) {
  EXPECT_EQ(divisors(1), (std::vector<long long>{1}));
  EXPECT_EQ(divisors(9), (std::vector<long long>{1, 3, 9}));
  EXPECT_EQ(divisors(45), (std::vector<long long>{1, 3, 5, 9, 15, 45}));
  EXPECT_THROW(divisors(0), std::invalid_argument);
  EXPECT_THROW(divisors(-4), std::invalid_argument);
}

TEST(Divisors, ClosedUnderComplement) {
  for (long long n = 1; n <= 500; ++n) {
    const auto ds = divisors(n);
    for (long long d : ds) {
      EXPECT_EQ(n % d, 0);
      EXPECT_TRUE(std::find(ds.begin(), ds.end(), n / d) != ds.end());
    }
    EXPECT_EQ(ds.front(), 1);
    EXPECT_EQ(ds.back(), n);
  }
}

TEST(Gcd, ValuesAndGuards) {
  EXPECT_EQ(gcd(5, 1), 1);
  EXPECT_EQ(gcd(9, 6), 3);
  EXPECT_EQ(gcd(10, 8), 2);
  EXPECT_EQ(gcd(0, 7), 7);
  EXPECT_THROW(gcd(0, 0), std::invalid_argument);
  EXPECT_THROW(gcd(-3, 6), std::invalid_argument);
}

TEST(IsPrime, SmallCases) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(9));
  EXPECT_TRUE(is_prime(7919));
}

TEST(PAdicValuation, Examples) {
  EXPECT_EQ(p_adic_valuation(9LL, 3), 2);
  EXPECT_EQ(p_adic_valuation(2133LL, 3), 3);  // 2133 = 27 * 79
  EXPECT_EQ(p_adic_valuation(7LL, 3), 0);
  EXPECT_EQ(p_adic_valuation(-24LL, 2), 3);
  EXPECT_THROW(p_adic_valuation(0LL, 3), std::invalid_argument);
  EXPECT_THROW(p_adic_valuation(9LL, 4), std::invalid_argument);
}

TEST(PAdicValuation, WorksOnBigInt) {
  BigInt x("243000000000000000000000");  // 3^5 * 10^21
  EXPECT_EQ(p_adic_valuation(x, 3), 5);
  EXPECT_EQ(p_adic_valuation(x, 5), 21);
  EXPECT_EQ(p_adic_valuation(BigInt(-2133), 3), 3);
}

TEST(PAdicValuation, ReconstructsPrimeFactorization) {
  for (long long n = 1; n <= 10000; ++n) {
    long long rebuilt = 1;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      for (int i = p_adic_valuation(n, p); i > 0; --i) rebuilt *= p;
      while (rest % p == 0) rest /= p;
    }
    if (rest > 1)
      for (int i = p_adic_valuation(n, rest); i > 0; --i) rebuilt *= rest;
    ASSERT_EQ(rebuilt, n) << "n = " << n;
  }
}

}  // namespace
}  // namespace eulerian
