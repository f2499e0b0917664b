#pragma once
// Lower and upper bound calculators for f_m(r, H), plus reference constants.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace splitforge {

// Reduced non-negative fraction.
struct Rational {
  std::uint64_t num = 0, den = 1;
  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

// ex_m(N, H) <= C N^e.
struct TuranEnvelope {
  double C = 1.0;
  double e = 1.5;
  std::uint32_t m = 2;
};

struct LowerBound {
  std::uint64_t k = 0;          // least k with C(r,m) <= C (rk)^e
  std::uint64_t k_relaxed = 0;  // same with (r-m)^m/m! in place of C(r,m)
  double lhs = 0;               // C(r,m)
  double lhs_relaxed = 0;
};

// Any k' < k admits no H-free (r,k')-hypergraph. Throws ParameterError
// unless r > m, C > 0 and 1 < e <= m.
LowerBound min_k_lower(std::uint64_t r, std::uint32_t m, const TuranEnvelope& env);

// C(r-1, m-1) / C(t-1, m-1), r > t >= m >= 2.
Rational berge_path_k_lb(std::uint64_t r, std::uint32_t m, std::uint64_t t);

// (r-1)/(t-1), r > t >= 2.
Rational tree_bound(std::uint64_t r, std::uint64_t t);

struct AdmissiblePrime {
  std::uint64_t p = 0;
  // 1: p+1 = 0 mod D1 and p-1 = 0 mod D2; 2: the swap.
  int pattern = 0;
  std::uint64_t R = 0;  // p^2 (p-1) / (D+1)
};

struct AdmissiblePair {
  std::uint64_t d = 0;
  std::uint64_t D1 = 0, D2 = 0;  // D, D+1
  std::uint64_t x0 = 0;          // residue mod D1*D2
  std::uint64_t modulus = 0;
  double coefficient = 0;        // (2D+1) / (D(D+1))
  bool inequality_ok = false;    // sqrt(d) - 3/2 < D < sqrt(d) - 1/2
  std::vector<AdmissiblePrime> primes;
};

// The unique D with D(D+1) < d <= (D+1)(D+2).
std::uint64_t admissible_D(std::uint64_t d);

// d >= 12. Collects up to `count` primes p = x0 mod D(D+1) with p <= limit.
AdmissiblePair admissible_pair_for(std::uint64_t d, std::size_t count = 8,
                                   std::uint64_t limit = 1'000'000);

// 2 d^(-1/3) (1 - 1.5 d^(-1/2))^(-5/3), d >= 12.
double k2d_upper_coeff(std::uint64_t d);

// Known constants c_d for 2 <= d <= 14.
const std::map<std::uint32_t, double>& small_d_table();

}  // namespace splitforge
