#include <doctest.h>

#include <random>

#include "idiv/errors.hpp"
#include "idiv/poly.hpp"
#include "oracle.hpp"

using namespace idiv;

TEST_CASE("parse_poly reads the monomial grammar") {
    IntPolynomial f = parse_poly("x^13+x^3+5");
    CHECK(f.degree() == 13);
    CHECK(f.coeff(0) == 5);
    CHECK(f.coeff(3) == 1);
    CHECK(f.coeff(13) == 1);
    for (std::uint64_t i : {1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12}) CHECK(f.coeff(i) == 0);

    CHECK(parse_poly("x^2+x^2") == IntPolynomial({0, 0, 2}));
    CHECK(parse_poly("2*x+2") == IntPolynomial({2, 2}));
    CHECK(parse_poly("-x^2+3*x-1") == IntPolynomial({-1, 3, -1}));
    CHECK(parse_poly("x") == IntPolynomial({0, 1}));
    CHECK(parse_poly("0") == IntPolynomial());
    CHECK(parse_poly(" 7 ") == IntPolynomial({7}));
    CHECK(parse_poly("x^3 - x^3") == IntPolynomial());
}

TEST_CASE("parse_poly rejects malformed input with a position") {
    CHECK_THROWS_AS(parse_poly(""), parse_error);
    CHECK_THROWS_AS(parse_poly("x^"), parse_error);
    CHECK_THROWS_AS(parse_poly("2**x"), parse_error);
    CHECK_THROWS_AS(parse_poly("x+"), parse_error);
    CHECK_THROWS_AS(parse_poly("y^2"), parse_error);
    CHECK_THROWS_AS(parse_poly("3*"), parse_error);
    try {
        parse_poly("x^2+?");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
    }
    // Exponent beyond the machine word.
    CHECK_THROWS_AS(parse_poly("x^99999999999999999999999"), parse_error);
    // Exponent within the word but beyond the dense-degree cap.
    CHECK_THROWS_AS(parse_poly("x^98765432109"), budget_error);
}

TEST_CASE("eval_exact matches hand values and the power-sum oracle") {
    CHECK(eval_exact(parse_poly("x^3+x^2+1"), 3) == 37);
    CHECK(eval_exact(parse_poly("x^13+x^3+5"), 0) == 5);
    CHECK(eval_exact(IntPolynomial(), 12) == 0);

    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> degree_dist(0, 20);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-1'000'000, 1'000'000);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigInt> coeffs;
        int degree = degree_dist(rng);
        for (int i = 0; i <= degree; ++i) coeffs.emplace_back(coeff_dist(rng));
        IntPolynomial f(std::move(coeffs));
        BigInt x = coeff_dist(rng);
        CHECK(eval_exact(f, x) == oracle::naive_eval(f, x));
    }
}

TEST_CASE("eval_mod agrees with exact evaluation reduced") {
    CHECK(eval_mod(parse_poly("x^3+x^2+1"), std::uint64_t{3}, 5) == 2);
    CHECK(eval_mod(parse_poly("x^13+x^3+5"), std::uint64_t{0}, 31) == 5);
    CHECK(eval_mod(parse_poly("x^5-7"), std::uint64_t{2}, 1) == 0);
    CHECK_THROWS_AS(eval_mod(parse_poly("x"), std::uint64_t{0}, 0), std::invalid_argument);

    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<int> degree_dist(0, 20);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::uint64_t> mod_dist(1, 1'000'000'000);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigInt> coeffs;
        int degree = degree_dist(rng);
        for (int i = 0; i <= degree; ++i) coeffs.emplace_back(coeff_dist(rng));
        IntPolynomial f(std::move(coeffs));
        BigInt x = coeff_dist(rng);
        std::uint64_t m = mod_dist(rng);
        BigInt expected = eval_exact(f, x) % m;
        if (expected < 0) expected += m;
        CHECK(eval_mod(f, x, m) == expected.convert_to<std::uint64_t>());
    }
}

TEST_CASE("render/parse round-trips canonical polynomials") {
    CHECK(render_poly(parse_poly("x^13+x^3+5")) == "x^13+x^3+5");
    CHECK(render_poly(IntPolynomial()) == "0");
    CHECK(render_poly(IntPolynomial({-1, 3, -1})) == "-x^2+3*x-1");

    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> degree_dist(0, 12);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> coeffs;
        int degree = degree_dist(rng);
        for (int i = 0; i <= degree; ++i) coeffs.emplace_back(coeff_dist(rng));
        IntPolynomial f(std::move(coeffs));
        CHECK(parse_poly(render_poly(f)) == f);
    }
}

TEST_CASE("trinomial construction and recognition") {
    IntPolynomial f = IntPolynomial::trinomial(13, 3, 5);
    CHECK(f == parse_poly("x^13+x^3+5"));
    auto shape = as_unit_trinomial(f);
    REQUIRE(shape.has_value());
    CHECK(shape->d == 13);
    CHECK(shape->e == 3);
    CHECK(shape->c == 5);

    CHECK(!as_unit_trinomial(parse_poly("x^3+x+2")).has_value());   // e = 1
    CHECK(!as_unit_trinomial(parse_poly("x^3+2*x^2+1")).has_value());
    CHECK(!as_unit_trinomial(parse_poly("x^4+x^3+x^2+1")).has_value());
    CHECK(as_unit_trinomial(parse_poly("x^4+x^2-1")).has_value());
    CHECK(as_unit_trinomial(parse_poly("x^4+x^2"))->c == 0);
}

TEST_CASE("even function detection") {
    CHECK(parse_poly("x^4+x^2+6").is_even_function());
    CHECK(!parse_poly("x^4+x^3+6").is_even_function());
    CHECK(IntPolynomial().is_even_function());
}
