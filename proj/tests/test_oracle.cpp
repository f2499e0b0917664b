#include <gtest/gtest.h>

#include <cmath>

#include "splitforge/bounds.hpp"
#include "splitforge/constructions.hpp"
#include "splitforge/errors.hpp"
#include "splitforge/oracle.hpp"
#include "splitforge/verify.hpp"

using namespace splitforge;

namespace {

OracleResult run(std::uint32_t r, std::uint32_t m, ForbiddenPattern p, std::uint32_t k_max = 3) {
  OracleQuery q;
  q.r = r;
  q.m = m;
  q.k_max = k_max;
  q.patterns = {std::move(p)};
  return exact_f(q);
}

}  // namespace

TEST(Oracle, KnownValues) {
  const auto c4_3 = run(3, 2, ForbiddenPattern::cycle(4));
  ASSERT_EQ(c4_3.status, OracleStatus::kValue);
  EXPECT_EQ(c4_3.value, 1u);
  const auto c4_4 = run(4, 2, ForbiddenPattern::cycle(4));
  ASSERT_EQ(c4_4.status, OracleStatus::kValue);
  EXPECT_EQ(c4_4.value, 2u);
  EXPECT_EQ(c4_4.attempts[0].decision, Decision::kNo);
  const auto c3 = run(3, 2, ForbiddenPattern::cycle(3));
  ASSERT_EQ(c3.status, OracleStatus::kValue);
  EXPECT_EQ(c3.value, 2u);
}

TEST(Oracle, CertificatesVerify) {
  for (std::uint32_t r = 3; r <= 5; ++r) {
    for (const auto& p : {ForbiddenPattern::cycle(3), ForbiddenPattern::cycle(4), ForbiddenPattern::complete_bipartite(2, 2)}) {
      const auto res = run(r, 2, p);
      if (res.status != OracleStatus::kValue) continue;
      ASSERT_TRUE(res.graph && res.partition);
      const auto rep = verify_rk(*res.graph, *res.partition);
      EXPECT_TRUE(rep.completeness_ok);
      EXPECT_LE(rep.k_effective, res.value);
      EXPECT_FALSE(find_forbidden(*res.graph, p).has_value());
    }
  }
}

TEST(Oracle, TriangleFreeValuesAreAtMostTwo) {
  // Colour classes of a proper 2-split give a bipartite (r,2)-graph.
  for (std::uint32_t r = 3; r <= 6; ++r) {
    const auto res = run(r, 2, ForbiddenPattern::cycle(3));
    ASSERT_EQ(res.status, OracleStatus::kValue);
    EXPECT_EQ(res.value, 2u);
    const auto pb = build_property_B(2, {1, 1}, r);
    EXPECT_LE(res.value, pb.partition.max_part_size());
  }
}

TEST(Oracle, ThreeUniformBergeTriangle) {
  const auto res = run(4, 3, ForbiddenPattern::berge_cycle(2));
  ASSERT_EQ(res.status, OracleStatus::kValue);
  EXPECT_LE(res.value, 3u);
  const auto pb = build_property_B(3, {1, 1, 1}, 4);
  EXPECT_LE(res.value, pb.partition.max_part_size());
}

TEST(Oracle, RespectsLowerBound) {
  const TuranEnvelope env{0.5 + 1.0 / (4.0 * std::sqrt(3.0)), 1.5, 2};
  for (std::uint32_t r = 3; r <= 6; ++r) {
    const auto res = run(r, 2, ForbiddenPattern::cycle(4));
    if (res.status != OracleStatus::kValue) continue;
    EXPECT_GE(res.value, min_k_lower(r, 2, env).k) << r;
  }
}

TEST(Oracle, BudgetAndEnvelope) {
  OracleQuery q;
  q.r = 6;
  q.m = 2;
  q.k_max = 3;
  q.patterns = {ForbiddenPattern::cycle(4)};
  q.budget = 3;
  EXPECT_EQ(exact_f(q).status, OracleStatus::kUnknown);
  q.r = 7;
  EXPECT_THROW(exact_f(q), ParameterError);
  q.r = 5;
  q.k_max = 4;
  EXPECT_THROW(exact_f(q), ParameterError);
  q.k_max = 2;
  q.patterns.clear();
  EXPECT_THROW(exact_f(q), ParameterError);
}
