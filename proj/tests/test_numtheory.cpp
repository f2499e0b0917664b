#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "splitforge/numtheory.hpp"

using namespace splitforge;

TEST(NumTheory, IsPrimeMatchesSieve) {
  constexpr std::uint32_t kN = 200000;
  std::vector<bool> composite(kN, false);
  for (std::uint32_t i = 2; i * i < kN; ++i) {
    if (!composite[i]) {
      for (std::uint32_t j = i * i; j < kN; j += i) composite[j] = true;
    }
  }
  for (std::uint32_t n = 0; n < kN; ++n) EXPECT_EQ(nt::is_prime(n), n >= 2 && !composite[n]) << n;
}

TEST(NumTheory, LargePrimesAndPseudoprimes) {
  EXPECT_TRUE(nt::is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_TRUE(nt::is_prime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(nt::is_prime(3215031751ull));            // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(nt::is_prime(3825123056546413051ull));   // strong pseudoprime to bases up to 23
  EXPECT_FALSE(nt::is_prime(561));
  EXPECT_FALSE(nt::is_prime(std::uint64_t{4294967291} * 4294967279ull));
}

TEST(NumTheory, FactorizeAndPrimePower) {
  const auto f = nt::factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<std::uint64_t, std::uint32_t>{2, 3}));
  EXPECT_EQ(f[1], (std::pair<std::uint64_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(f[2], (std::pair<std::uint64_t, std::uint32_t>{5, 1}));
  EXPECT_EQ(nt::prime_divisors(97), std::vector<std::uint64_t>{97});
  EXPECT_EQ(nt::prime_power(81), (std::pair<std::uint32_t, std::uint32_t>{3, 4}));
  EXPECT_EQ(nt::prime_power(2), (std::pair<std::uint32_t, std::uint32_t>{2, 1}));
  EXPECT_FALSE(nt::prime_power(12).has_value());
  EXPECT_FALSE(nt::prime_power(1).has_value());
}

TEST(NumTheory, CrtAndModularArithmetic) {
  EXPECT_EQ(nt::crt(1, 2, 1, 3), 1u);
  EXPECT_EQ(nt::crt(2, 3, 1, 4), 5u);
  EXPECT_FALSE(nt::crt(1, 4, 1, 6).has_value());
  for (std::uint64_t m1 = 2; m1 < 12; ++m1) {
    for (std::uint64_t m2 = 2; m2 < 12; ++m2) {
      for (std::uint64_t r1 = 0; r1 < m1; ++r1) {
        const auto x = nt::crt(r1, m1, m2 - 1, m2);
        if (!x) continue;
        EXPECT_EQ(*x % m1, r1);
        EXPECT_EQ(*x % m2, m2 - 1);
        EXPECT_LT(*x, m1 * m2);
      }
    }
  }
  EXPECT_EQ(nt::pow_mod(3, 200, 1000000007), nt::pow_mod(9, 100, 1000000007));
  EXPECT_EQ(nt::pow_mod(2, 10, 1000), 24u);
  EXPECT_EQ(nt::mul_mod(~0ull, ~0ull, 1000000007), static_cast<std::uint64_t>((static_cast<unsigned __int128>(~0ull) * ~0ull) % 1000000007));
}

TEST(NumTheory, BinomialAndPower) {
  EXPECT_EQ(nt::binomial(100, 2), 4950u);
  EXPECT_EQ(nt::binomial(8, 1), 8u);
  EXPECT_EQ(nt::binomial(5, 7), 0u);
  EXPECT_EQ(nt::binomial(60, 30), 118264581564861424ull);
  EXPECT_THROW(nt::binomial(200, 100), std::overflow_error);
  EXPECT_EQ(nt::ipow(3, 5), 243u);
  EXPECT_THROW(nt::ipow(10, 20), std::overflow_error);
}
