#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace idiv {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// base^exp, or nullopt on uint64 overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

bool is_prime(std::uint64_t n);

// Ordered primes <= bound.  Plain Eratosthenes; switches to a segmented sieve
// above 10^7 to keep the working set small.
std::vector<std::uint64_t> prime_sieve(std::uint64_t bound);

// Trial-division factorization, (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

// All divisors of n, sorted.  n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t smallest_prime_factor(std::uint64_t n); // n >= 2
std::uint64_t largest_prime_factor(std::uint64_t n);  // n >= 2

// Exponent of p in n; valuation(0, p) is undefined (asserts).
std::uint32_t valuation_u64(std::uint64_t n, std::uint64_t p);

// Multiplicative order of a modulo prime p; requires p prime, a % p != 0.
std::uint64_t ord_mod(std::uint64_t a, std::uint64_t p);

} // namespace idiv
