#include <doctest.h>

#include <random>

#include "idiv/errors.hpp"
#include "idiv/orbit.hpp"
#include "oracle.hpp"

using namespace idiv;

TEST_CASE("orbit_exact produces the literal orbit of 0") {
    OrbitPrefix prefix = orbit_exact(parse_poly("x^3+x^2+1"), 4);
    CHECK(prefix.terms == std::vector<BigInt>{1, 3, 37, 52023});

    CHECK(orbit_exact(parse_poly("x^3+x^2-1"), 3).terms == std::vector<BigInt>{-1, -1, -1});
    CHECK(orbit_exact(parse_poly("x^13+x^3+5"), 1).terms == std::vector<BigInt>{5});
}

TEST_CASE("orbit terms satisfy the defining recurrence") {
    IntPolynomial f = parse_poly("x^4+x^2+6");
    OrbitPrefix prefix = orbit_exact(f, 5);
    CHECK(prefix.terms[0] == eval_exact(f, 0));
    for (std::size_t k = 1; k < prefix.terms.size(); ++k) {
        CHECK(prefix.terms[k] == eval_exact(f, prefix.terms[k - 1]));
    }
}

TEST_CASE("orbit_exact reports the last safe index when the budget trips") {
    try {
        orbit_exact(parse_poly("x^3+x^2+2"), 20, 256);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        // Terms: 2, 14, 2942, ... ; 256 bits run out quickly but not instantly.
        CHECK(e.last_safe_index() >= 3);
        CHECK(e.last_safe_index() < 20);
    }
}

TEST_CASE("modular orbit resolves tail, cycle and table") {
    SUBCASE("fixed point after one step") {
        ModularOrbit orbit(parse_poly("x^3+x^2+1"), 2);
        CHECK(orbit.tail() == 0);
        CHECK(orbit.cycle() == 1);
        CHECK(orbit.table() == std::vector<std::uint64_t>{1});
        CHECK(orbit.residue_at(5) == 1);
    }
    SUBCASE("modulus one") {
        ModularOrbit orbit(parse_poly("x^9-4*x+1"), 1);
        CHECK(orbit.tail() == 0);
        CHECK(orbit.cycle() == 1);
        CHECK(orbit.table() == std::vector<std::uint64_t>{0});
    }
    SUBCASE("membership forces a zero at the prime index") {
        ModularOrbit orbit(parse_poly("x^13+x^3+5"), 31);
        CHECK(orbit.residue_at(31) == 0);
    }
    SUBCASE("zero modulus rejected") {
        CHECK_THROWS_AS(ModularOrbit(parse_poly("x"), 0), std::invalid_argument);
    }
}

TEST_CASE("modular orbit table obeys its invariants on sampled maps") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-9, 9);
    std::uniform_int_distribution<std::uint64_t> mod_dist(1, 400);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<BigInt> coeffs;
        for (int i = 0; i <= 4; ++i) coeffs.emplace_back(coeff_dist(rng));
        IntPolynomial f(std::move(coeffs));
        std::uint64_t m = mod_dist(rng);
        ModularOrbit orbit(f, m);
        REQUIRE(orbit.cycle() >= 1);
        CHECK(orbit.tail() + orbit.cycle() <= m);
        CHECK(orbit.table().size() == orbit.tail() + orbit.cycle());
        // Table entries chain under the map.
        std::uint64_t x = 0;
        for (std::uint64_t entry : orbit.table()) {
            x = eval_mod(f, x, m);
            CHECK(entry == x);
        }
        // The index formula extends the table periodically.
        for (std::uint64_t n = 1; n <= 2 * m + 3; ++n) {
            CHECK(orbit.residue_at(n) == oracle::naive_iterate_mod(f, m, n));
        }
    }
}

TEST_CASE("iterate_index_mod equals the naive evaluation chain") {
    CHECK(iterate_index_mod(parse_poly("x^13+x^3+5"), 31, 31) == 0);
    CHECK(iterate_index_mod(parse_poly("x^7-3*x^2+11"), 1, 12345) == 0);
    CHECK(iterate_index_mod(parse_poly("x^3+x^2+1"), 2, 5) == 1);

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-20, 20);
    std::uniform_int_distribution<std::uint64_t> mod_dist(1, 10'000);
    std::uniform_int_distribution<std::uint64_t> index_dist(1, 1'000);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<BigInt> coeffs;
        for (int i = 0; i <= 3; ++i) coeffs.emplace_back(coeff_dist(rng));
        IntPolynomial f(std::move(coeffs));
        std::uint64_t m = mod_dist(rng);
        std::uint64_t n = index_dist(rng);
        CHECK(iterate_index_mod(f, m, n) == oracle::naive_iterate_mod(f, m, n));
    }
}

TEST_CASE("classify_zero closed form for unit trinomials") {
    ZeroClassification z = classify_zero(IntPolynomial::trinomial(5, 3, 0));
    CHECK(z.kind == ZeroClassification::Kind::Preperiodic);
    CHECK(z.tail == 0);
    CHECK(z.period == 1);
    CHECK(z.exact);
    CHECK(z.is_periodic());

    z = classify_zero(parse_poly("x^4+x^2-1"));
    CHECK(z.kind == ZeroClassification::Kind::Preperiodic);
    CHECK(z.tail == 2);
    CHECK(z.period == 1);

    z = classify_zero(parse_poly("x^3+x^2-1"));
    CHECK(z.kind == ZeroClassification::Kind::Preperiodic);
    CHECK(z.tail == 1);
    CHECK(z.period == 1);

    z = classify_zero(parse_poly("x^13+x^3+5"));
    CHECK(z.kind == ZeroClassification::Kind::Wandering);
    CHECK(z.exact);

    // c = -1 with both exponents odd wanders.
    z = classify_zero(IntPolynomial::trinomial(5, 3, -1));
    CHECK(z.kind == ZeroClassification::Kind::Wandering);
    CHECK(z.exact);
}

TEST_CASE("classify_zero general fallback") {
    // 0 -> -1 -> 0: periodic of period 2, found by repeat detection.
    ZeroClassification z = classify_zero(parse_poly("x^2-1"));
    CHECK(z.kind == ZeroClassification::Kind::Preperiodic);
    CHECK(z.tail == 0);
    CHECK(z.period == 2);
    CHECK(z.exact);

    // 0 -> -2 -> 2 -> 2.
    z = classify_zero(parse_poly("x^2-2"));
    CHECK(z.kind == ZeroClassification::Kind::Preperiodic);
    CHECK(z.tail == 2);
    CHECK(z.period == 1);

    // f = x fixes 0.
    z = classify_zero(parse_poly("x"));
    CHECK(z.is_periodic());
    CHECK(z.period == 1);

    // Nonzero linear term, clearly escaping: flagged heuristic verdict.
    z = classify_zero(parse_poly("x^3+x+2"));
    CHECK(z.kind == ZeroClassification::Kind::Wandering);
    CHECK(!z.exact);
}

TEST_CASE("rank_of_apparition finds the first zero index") {
    CHECK(rank_of_apparition(parse_poly("x^3+x^2+1"), 3) == 2);
    CHECK(rank_of_apparition(parse_poly("x^13+x^3+5"), 5) == 1);
    CHECK(rank_of_apparition(parse_poly("x^13+x^3+5"), 31) == 31);
    // 0 -> 1 -> 2 -> ... for x+1: first zero mod m at n = m.
    CHECK(rank_of_apparition(parse_poly("x+1"), 9) == 9);
    // x^2+1 mod 3: 0 -> 1 -> 2 -> 2 -> ... never returns to 0.
    CHECK(!rank_of_apparition(parse_poly("x^2+1"), 3).has_value());
}

TEST_CASE("valuation_of_term without the exact term") {
    CHECK(valuation_of_term(parse_poly("x^3+x^2+2"), 2, 3, 4) == TermValuation{1, false});
    CHECK(valuation_of_term(parse_poly("x^13+x^3+5"), 5, 7, 3) == TermValuation{1, false});
    // p does not divide f^n(0).
    CHECK(valuation_of_term(parse_poly("x^3+x^2+1"), 5, 1, 3) == TermValuation{0, false});
    // Saturation: f(0) = 8 of x^3+x^2+8 at p = 2, cap 3 -> at least 3.
    CHECK(valuation_of_term(parse_poly("x^3+x^2+8"), 2, 1, 3) == TermValuation{3, true});
    CHECK_THROWS_AS(valuation_of_term(parse_poly("x^2+2"), 2, 1, 200), std::invalid_argument);

    // Against exact arithmetic on a short prefix.
    IntPolynomial f = parse_poly("x^4+x^2+6");
    OrbitPrefix prefix = orbit_exact(f, 6);
    for (std::uint64_t n = 1; n <= 6; ++n) {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            BigInt term = big_abs(prefix.terms[n - 1]);
            std::uint32_t expected = 0;
            while (term % p == 0) {
                term /= p;
                ++expected;
            }
            TermValuation got = valuation_of_term(f, p, n, expected + 2);
            CHECK(got == TermValuation{expected, false});
        }
    }
}

TEST_CASE("divisibility sequence property on exact prefixes") {
    // Prefix lengths sized to the degree; terms grow like d^n digits.
    for (auto [text, len] : std::vector<std::pair<const char*, std::uint64_t>>{
             {"x^3+x^2+1", 8}, {"x^13+x^3+5", 4}, {"x^4+x^2+6", 8}, {"x^3+x+2", 8},
             {"x^5-x^3+9", 8}}) {
        IntPolynomial f = parse_poly(text);
        OrbitPrefix prefix = orbit_exact(f, len);
        for (std::uint64_t m = 1; m <= len; ++m) {
            for (std::uint64_t n = m; n <= len; n += m) {
                CAPTURE(text);
                CHECK(prefix.terms[n - 1] % prefix.terms[m - 1] == 0);
            }
        }
    }
}

TEST_CASE("strictly increasing absolute values for |c| > 1 trinomials") {
    for (auto [d, e, c] : std::vector<std::tuple<int, int, int>>{
             {3, 2, 2}, {4, 2, -3}, {5, 3, 7}, {6, 4, -2}, {13, 3, 5}}) {
        IntPolynomial f = IntPolynomial::trinomial(d, e, c);
        OrbitPrefix prefix = orbit_exact(f, 5);
        for (std::size_t k = 1; k < prefix.terms.size(); ++k) {
            CHECK(big_abs(prefix.terms[k]) > big_abs(prefix.terms[k - 1]));
        }
    }
}

TEST_CASE("rigid valuation along multiples of the rank") {
    // Zero linear coefficient and wandering 0: v_p is constant on multiples of
    // the rank of apparition.
    for (const char* text : {"x^3+x^2+2", "x^5+x^3+4", "x^4+2*x^2+3"}) {
        IntPolynomial f = parse_poly(text);
        std::uint64_t checked = 0;
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
            auto rank = rank_of_apparition(f, p);
            if (!rank || *rank > 50) continue;
            std::uint32_t v = 0;
            for (std::uint32_t cap = 1; cap <= 16; ++cap) {
                TermValuation tv = valuation_of_term(f, p, *rank, cap);
                v = tv.value;
                if (!tv.saturated) break;
            }
            for (std::uint64_t k = 1; k <= 5; ++k) {
                CAPTURE(text);
                CAPTURE(p);
                CHECK(valuation_of_term(f, p, *rank * k, v + 1) == TermValuation{v, false});
            }
            ++checked;
        }
        CHECK(checked > 0);
    }
}
