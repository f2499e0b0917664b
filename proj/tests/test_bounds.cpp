#include <gtest/gtest.h>

#include <cmath>

#include "splitforge/bounds.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/numtheory.hpp"

using namespace splitforge;

namespace {

// Least k by linear scan with the exact binomial.
std::uint64_t scan_k(std::uint64_t r, std::uint32_t m, double C, double e) {
  const double lhs = static_cast<double>(nt::binomial(r, m));
  for (std::uint64_t k = 1;; ++k) {
    if (lhs <= C * std::pow(static_cast<double>(r * k), e)) return k;
  }
}

}  // namespace

TEST(Bounds, MinKLowerExamples) {
  EXPECT_EQ(min_k_lower(100, 2, {1.0, 1.5, 2}).k, 3u);
  EXPECT_EQ(min_k_lower(10, 2, {0.5, 2.0, 2}).k, 1u);
  const auto b = min_k_lower(100, 2, {1.0, 1.5, 2});
  EXPECT_DOUBLE_EQ(b.lhs, 4950.0);
  EXPECT_DOUBLE_EQ(b.lhs_relaxed, 98.0 * 98.0 / 2.0);
  EXPECT_LE(b.k_relaxed, b.k);
}

TEST(Bounds, MinKLowerMatchesScanAndIsMonotone) {
  for (std::uint32_t m : {2, 3}) {
    for (double C : {0.3, 0.5, 1.0, 2.0}) {
      for (double e : {1.2, 1.5, 1.8}) {
        std::uint64_t prev = 0;
        for (std::uint64_t r = m + 1; r < 300; r += 7) {
          const auto k = min_k_lower(r, m, {C, e, m}).k;
          EXPECT_EQ(k, scan_k(r, m, C, e)) << r << " " << m << " " << C << " " << e;
          EXPECT_GE(k, prev);
          prev = k;
          EXPECT_LE(min_k_lower(r, m, {C * 2, e, m}).k, k);
        }
      }
    }
  }
}

TEST(Bounds, MinKLowerRejectsBadEnvelopes) {
  EXPECT_THROW(min_k_lower(2, 2, {1, 1.5, 2}), ParameterError);
  EXPECT_THROW(min_k_lower(10, 2, {0, 1.5, 2}), ParameterError);
  EXPECT_THROW(min_k_lower(10, 2, {1, 1.0, 2}), ParameterError);
  EXPECT_THROW(min_k_lower(10, 2, {1, 2.5, 2}), ParameterError);
}

TEST(Bounds, BergePathAndTree) {
  EXPECT_EQ(berge_path_k_lb(7, 2, 3), Rational::make(3, 1));
  EXPECT_EQ(berge_path_k_lb(5, 3, 3), Rational::make(6, 1));
  EXPECT_EQ(berge_path_k_lb(6, 2, 5), Rational::make(5, 4));
  EXPECT_EQ(tree_bound(7, 3), Rational::make(3, 1));
  EXPECT_EQ(tree_bound(9, 3), Rational::make(4, 1));
  EXPECT_EQ(tree_bound(5, 4), Rational::make(4, 3));
  EXPECT_EQ(Rational::make(6, 4).str(), "3/2");
  EXPECT_THROW(tree_bound(3, 3), ParameterError);
  EXPECT_THROW(berge_path_k_lb(5, 3, 2), ParameterError);
}

TEST(Bounds, AdmissiblePairExamples) {
  const auto a = admissible_pair_for(12);
  EXPECT_EQ(a.D1, 2u);
  EXPECT_EQ(a.D2, 3u);
  EXPECT_EQ(a.x0 % 6, 1u);
  EXPECT_TRUE(a.inequality_ok);
  ASSERT_FALSE(a.primes.empty());
  EXPECT_EQ(a.primes[0].p, 7u);
  EXPECT_EQ(a.primes[0].R, 98u);
  EXPECT_NEAR(a.coefficient, 5.0 / 6.0, 1e-12);
  EXPECT_EQ(admissible_D(13), 3u);
  EXPECT_THROW(admissible_pair_for(11), ParameterError);
}

TEST(Bounds, AdmissiblePrimesSatisfyTheirPattern) {
  for (std::uint64_t d = 12; d <= 10000; ++d) {
    const std::uint64_t D = admissible_D(d);
    ASSERT_LT(D * (D + 1), d);
    ASSERT_LE(d, (D + 1) * (D + 2));
    const double s = std::sqrt(static_cast<double>(d));
    ASSERT_TRUE(s - 1.5 < static_cast<double>(D) && static_cast<double>(D) < s - 0.5) << d;
  }
  for (std::uint64_t d : {12, 13, 30, 31, 100, 500, 2000}) {
    const auto a = admissible_pair_for(d, 5);
    EXPECT_TRUE(a.inequality_ok);
    for (const auto& p : a.primes) {
      EXPECT_TRUE(nt::is_prime(p.p));
      EXPECT_EQ(p.p % a.modulus, a.x0);
      EXPECT_EQ((p.p + 1) % a.D1, 0u);
      EXPECT_EQ((p.p - 1) % a.D2, 0u);
      EXPECT_EQ(p.pattern, 1);
      EXPECT_EQ(p.R * (a.D2), p.p * p.p * (p.p - 1));
    }
  }
}

TEST(Bounds, K2dCoefficientAndTable) {
  EXPECT_NEAR(k2d_upper_coeff(12), 2.249, 2e-3);
  // coefficient * d^(1/3) tends to 2.
  EXPECT_NEAR(k2d_upper_coeff(100000000) * std::cbrt(1e8), 2.0, 1e-3);
  const auto& t = small_d_table();
  EXPECT_DOUBLE_EQ(t.at(2), 1.89);
  EXPECT_DOUBLE_EQ(t.at(5), 1.26);
  EXPECT_DOUBLE_EQ(t.at(7), 1.21);
  EXPECT_DOUBLE_EQ(t.at(11), 1.20);
  EXPECT_DOUBLE_EQ(t.at(14), 0.93);
  EXPECT_EQ(t.size(), 13u);
}
