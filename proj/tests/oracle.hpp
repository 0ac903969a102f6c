#pragma once

// Test-only brute-force oracles, kept independent of the implementation paths
// they check.

#include <cstdint>
#include <utility>
#include <vector>

#include "idiv/bigint.hpp"
#include "idiv/poly.hpp"

namespace idiv::oracle {

// Power-sum evaluation (no Horner).
inline BigInt naive_eval(const IntPolynomial& f, const BigInt& x) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        sum += f.coeffs()[i] * big_pow(x, static_cast<unsigned>(i));
    }
    return sum;
}

// f^n(0) mod m by stepping n times (no cycle detection).
inline std::uint64_t naive_iterate_mod(const IntPolynomial& f, std::uint64_t m, std::uint64_t n) {
    std::uint64_t x = 0;
    for (std::uint64_t i = 0; i < n; ++i) x = eval_mod(f, x, m);
    return x;
}

// Trial division by primes up to `bound`; returns (prime, exponent) pairs and
// the unfactored cofactor (1 when the factorization is complete).
inline std::pair<std::vector<std::pair<std::uint64_t, std::uint32_t>>, BigInt> trial_factor(
    BigInt value, std::uint64_t bound) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    value = big_abs(value);
    for (std::uint64_t p = 2; p <= bound && value > 1; p += (p == 2 ? 1 : 2)) {
        if (value % p != 0) continue;
        std::uint32_t e = 0;
        while (value % p == 0) {
            value /= p;
            ++e;
        }
        factors.emplace_back(p, e);
        if (BigInt(p) * p > value) break;
    }
    // Mop up a prime cofactor within reach of the bound.
    if (value > 1 && value <= BigInt(bound) * bound) {
        bool prime = true;
        for (std::uint64_t p = 2; BigInt(p) * p <= value; ++p) {
            if (value % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            factors.emplace_back(value.convert_to<std::uint64_t>(), 1);
            value = 1;
        }
    }
    return {factors, value};
}

// Sieve of Sundaram, as an implementation independent of the main sieve.
inline std::vector<std::uint64_t> sundaram_sieve(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    primes.push_back(2);
    const std::uint64_t k = (bound - 1) / 2;
    std::vector<bool> removed(k + 1, false);
    for (std::uint64_t i = 1; i <= k; ++i) {
        for (std::uint64_t j = i; i + j + 2 * i * j <= k; ++j) {
            removed[i + j + 2 * i * j] = true;
        }
    }
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (!removed[i]) primes.push_back(2 * i + 1);
    }
    return primes;
}

} // namespace idiv::oracle
