#pragma once
// Integer helpers shared by the field code and the bound calculators.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace splitforge::nt {

// Deterministic Miller-Rabin, exact on the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime factorization by trial division, ascending, with multiplicity.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

// Distinct prime divisors.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Solves x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; returns the
// least non-negative residue modulo m1*m2, or nullopt when gcd(m1, m2) != 1.
std::optional<std::uint64_t> crt(std::uint64_t r1, std::uint64_t m1,
                                 std::uint64_t r2, std::uint64_t m2);

// q = p^n with p prime, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Checked integer power; throws std::overflow_error past 64 bits.
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

}  // namespace splitforge::nt
