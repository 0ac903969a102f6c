#include "idiv/primes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace idiv {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t i = 5; i * i <= n; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

namespace {

std::vector<std::uint64_t> simple_sieve(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!composite[i]) primes.push_back(i);
    }
    return primes;
}

std::vector<std::uint64_t> segmented_sieve(std::uint64_t bound) {
    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 1;
    std::vector<std::uint64_t> base = simple_sieve(root);
    std::vector<std::uint64_t> primes = base;
    const std::uint64_t segment = 1u << 20;
    std::vector<bool> composite;
    for (std::uint64_t low = root + 1; low <= bound; low += segment) {
        std::uint64_t high = std::min(bound, low + segment - 1);
        composite.assign(high - low + 1, false);
        for (std::uint64_t p : base) {
            std::uint64_t start = ((low + p - 1) / p) * p;
            for (std::uint64_t j = start; j <= high; j += p) composite[j - low] = true;
        }
        for (std::uint64_t i = low; i <= high; ++i) {
            if (!composite[i - low]) primes.push_back(i);
        }
    }
    return primes;
}

} // namespace

std::vector<std::uint64_t> prime_sieve(std::uint64_t bound) {
    if (bound <= 10'000'000) return simple_sieve(bound);
    return segmented_sieve(bound);
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t count = divs.size();
        std::uint64_t power = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be >= 2");
    if (n % 2 == 0) return 2;
    for (std::uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) return p;
    }
    return n;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("largest_prime_factor: n must be >= 2");
    return factorize(n).back().first;
}

std::uint32_t valuation_u64(std::uint64_t n, std::uint64_t p) {
    assert(n != 0 && p >= 2);
    std::uint32_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::uint64_t ord_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("ord_mod: a must be a unit mod p");
    std::uint64_t order = p - 1;
    for (const auto& [q, e] : factorize(p - 1)) {
        for (std::uint32_t i = 0; i < e && order % q == 0; ++i) {
            if (powmod(a, order / q, p) == 1) {
                order /= q;
            } else {
                break;
            }
        }
    }
    return order;
}

} // namespace idiv
