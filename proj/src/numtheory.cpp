#include "splitforge/numtheory.hpp"

#include <stdexcept>

namespace splitforge::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases decide primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<std::uint64_t> crt(std::uint64_t r1, std::uint64_t m1,
                                 std::uint64_t r2, std::uint64_t m2) {
  // Extended Euclid on (m1, m2).
  __int128 old_r = m1, r = m2, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  const __int128 mod = static_cast<__int128>(m1) * m2;
  // x = r1 + m1 * ((r2 - r1) * inv(m1 mod m2) mod m2)
  __int128 inv = old_s % static_cast<__int128>(m2);
  if (inv < 0) inv += m2;
  __int128 diff = (static_cast<__int128>(r2 % m2) - static_cast<__int128>(r1 % m2)) % m2;
  if (diff < 0) diff += m2;
  __int128 x = static_cast<__int128>(r1 % m1) + static_cast<__int128>(m1) * (diff * inv % m2);
  x %= mod;
  if (x < 0) x += mod;
  return static_cast<std::uint64_t>(x);
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  const auto f = factorize(q);
  if (f.size() != 1 || f[0].first > UINT32_MAX) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(f[0].first), f[0].second);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  unsigned __int128 result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    result *= base;
    if (result > UINT64_MAX) throw std::overflow_error("integer power exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace splitforge::nt
