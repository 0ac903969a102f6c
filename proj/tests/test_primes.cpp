#include <doctest.h>

#include "idiv/primes.hpp"
#include "oracle.hpp"

using namespace idiv;

TEST_CASE("prime_sieve basics") {
    CHECK(prime_sieve(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    std::vector<std::uint64_t> up_to_31 = prime_sieve(31);
    CHECK(up_to_31.size() == 11);
    CHECK(up_to_31.back() == 31);
    CHECK(prime_sieve(1).empty());
}

TEST_CASE("prime_sieve agrees with an independent sieve") {
    CHECK(prime_sieve(1'000'000).size() == 78498);
    CHECK(prime_sieve(100'000) == oracle::sundaram_sieve(100'000));
}

TEST_CASE("segmented lane matches the simple sieve on a shared range") {
    // The segmented path only engages above 10^7; exercise the seam indirectly
    // by checking the count at the threshold boundary region stays consistent
    // with is_prime.
    auto primes = prime_sieve(10'000'100);
    std::size_t below = 0;
    for (std::uint64_t p : primes) {
        if (p <= 10'000'000) ++below;
    }
    CHECK(below == 664579); // pi(10^7)
    for (std::uint64_t n = 10'000'001; n <= 10'000'100; ++n) {
        bool listed = std::binary_search(primes.begin(), primes.end(), n);
        CHECK(listed == is_prime(n));
    }
}

TEST_CASE("factorization helpers") {
    using Factors = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
    CHECK(factorize(360) == Factors{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == Factors{{97, 1}});
    CHECK(factorize(1).empty());
    CHECK(divisors(60) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(smallest_prime_factor(91) == 7);
    CHECK(largest_prime_factor(91) == 13);
    CHECK(valuation_u64(48, 2) == 4);
    CHECK(valuation_u64(49, 2) == 0);
}

TEST_CASE("powmod and multiplicative order") {
    CHECK(powmod(2, 10, 1000) == 24);
    CHECK(powmod(5, 0, 7) == 1);
    CHECK(powmod(3, 100, 1) == 0);
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(2, 31) == 5);
    CHECK(ord_mod(2, 73) == 9);
    CHECK(ord_mod(1, 13) == 1);
    CHECK(ord_mod(2, 13) == 12);
    CHECK_THROWS_AS(ord_mod(0, 5), std::invalid_argument);

    // Brute-force cross-check.
    for (std::uint64_t p : {5, 11, 17, 19, 101}) {
        for (std::uint64_t a = 1; a < p; ++a) {
            std::uint64_t expected = 1;
            std::uint64_t x = a % p;
            while (x != 1) {
                x = x * a % p;
                ++expected;
            }
            CHECK(ord_mod(a, p) == expected);
        }
    }
}

TEST_CASE("checked_pow guards overflow") {
    CHECK(checked_pow(2, 10) == 1024);
    CHECK(checked_pow(2, 63).has_value());
    CHECK(!checked_pow(2, 64).has_value());
    CHECK(!checked_pow(10, 20).has_value());
    CHECK(checked_pow(12345, 0) == 1);
}
