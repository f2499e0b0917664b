#include "splitforge/bounds.hpp"

#include <cmath>
#include <numeric>

#include "splitforge/errors.hpp"
#include "splitforge/numtheory.hpp"

namespace splitforge {

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ParameterError("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Least k >= 1 with lhs <= C (rk)^e. Starts from the closed form and
// corrects for rounding.
std::uint64_t least_k(long double lhs, std::uint64_t r, const TuranEnvelope& env) {
  auto ok = [&](std::uint64_t k) {
    return lhs <= static_cast<long double>(env.C) *
                      std::pow(static_cast<long double>(r) * k, static_cast<long double>(env.e));
  };
  const long double guess = std::pow(lhs / env.C, 1.0L / env.e) / r;
  std::uint64_t k = guess < 1 ? 1 : static_cast<std::uint64_t>(std::ceil(guess));
  while (k > 1 && ok(k - 1)) --k;
  while (!ok(k)) ++k;
  return k;
}

}  // namespace

LowerBound min_k_lower(std::uint64_t r, std::uint32_t m, const TuranEnvelope& env) {
  if (m < 2) throw ParameterError("uniformity must be at least 2");
  if (r <= m) throw ParameterError("need r > m");
  if (!(env.C > 0)) throw ParameterError("envelope constant must be positive");
  if (!(env.e > 1) || env.e > m) throw ParameterError("envelope exponent must lie in (1, m]");
  LowerBound b;
  long double binom = 1, relaxed = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    binom = binom * static_cast<long double>(r - i) / (i + 1);
    relaxed = relaxed * static_cast<long double>(r - m) / (i + 1);
  }
  b.lhs = static_cast<double>(binom);
  b.lhs_relaxed = static_cast<double>(relaxed);
  b.k = least_k(binom, r, env);
  b.k_relaxed = least_k(relaxed, r, env);
  return b;
}

Rational berge_path_k_lb(std::uint64_t r, std::uint32_t m, std::uint64_t t) {
  if (m < 2) throw ParameterError("uniformity must be at least 2");
  if (t < m || r <= t) throw ParameterError("need r > t >= m");
  return Rational::make(nt::binomial(r - 1, m - 1), nt::binomial(t - 1, m - 1));
}

Rational tree_bound(std::uint64_t r, std::uint64_t t) {
  if (t < 2 || r <= t) throw ParameterError("need r > t >= 2");
  return Rational::make(r - 1, t - 1);
}

std::uint64_t admissible_D(std::uint64_t d) {
  if (d < 2) throw ParameterError("d must be at least 2");
  std::uint64_t D = 1;
  while ((D + 1) * (D + 2) < d) ++D;
  return D;
}

AdmissiblePair admissible_pair_for(std::uint64_t d, std::size_t count, std::uint64_t limit) {
  if (d < 12) throw ParameterError("d < 12: use the small-d table");
  AdmissiblePair a;
  a.d = d;
  const std::uint64_t D = admissible_D(d);
  a.D1 = D;
  a.D2 = D + 1;
  a.modulus = D * (D + 1);
  // x + 1 = 0 mod D, x - 1 = 0 mod D+1.
  a.x0 = *nt::crt((D - 1) % D, D, 1 % (D + 1), D + 1);
  a.coefficient = static_cast<double>(2 * D + 1) / static_cast<double>(a.modulus);
  const double s = std::sqrt(static_cast<double>(d));
  a.inequality_ok = s - 1.5 < static_cast<double>(D) && static_cast<double>(D) < s - 0.5;
  for (std::uint64_t p = a.x0; p <= limit && a.primes.size() < count; p += a.modulus) {
    if (p < 2 || !nt::is_prime(p)) continue;
    AdmissiblePrime ap;
    ap.p = p;
    if ((p + 1) % a.D1 == 0 && (p - 1) % a.D2 == 0) ap.pattern = 1;
    else if ((p - 1) % a.D1 == 0 && (p + 1) % a.D2 == 0) ap.pattern = 2;
    else throw std::logic_error("prime outside the admissible progression");
    ap.R = p * p * (p - 1) / (D + 1);
    a.primes.push_back(ap);
  }
  return a;
}

double k2d_upper_coeff(std::uint64_t d) {
  if (d < 12) throw ParameterError("d < 12: use the small-d table");
  const double x = static_cast<double>(d);
  return 2.0 / std::cbrt(x) * std::pow(1.0 - 1.5 / std::sqrt(x), -5.0 / 3.0);
}

const std::map<std::uint32_t, double>& small_d_table() {
  static const std::map<std::uint32_t, double> table = {
      {2, 1.89}, {3, 1.89}, {4, 1.26},  {5, 1.26},  {6, 1.21},  {7, 1.21},  {8, 1.20},
      {9, 1.20}, {10, 1.20}, {11, 1.20}, {12, 0.93}, {13, 0.93}, {14, 0.93},
  };
  return table;
}

}  // namespace splitforge
