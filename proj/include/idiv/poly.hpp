#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idiv/bigint.hpp"

namespace idiv {

// Dense integer polynomial in canonical form: coeffs[i] is the coefficient of
// x^i and the trailing entry is nonzero (the zero polynomial has no entries).
// Immutable after construction.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    // x^d + x^e + c with d > e >= 1.
    static IntPolynomial trinomial(std::uint64_t d, std::uint64_t e, const BigInt& c);
    // a*x + b.
    static IntPolynomial linear(const BigInt& a, const BigInt& b);

    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(std::uint64_t i) const;
    const BigInt& constant_term() const { return coeff(0); }
    const BigInt& linear_coeff() const { return coeff(1); }
    bool is_even_function() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

struct TrinomialShape {
    std::uint64_t d;
    std::uint64_t e;
    BigInt c;
};

// Recognizes f = x^d + x^e + c with d > e >= 2 (unit coefficients, all other
// coefficients zero); nullopt otherwise.
std::optional<TrinomialShape> as_unit_trinomial(const IntPolynomial& f);

// Grammar: signed monomials `k`, `x`, `x^e`, `k*x` or `k*x^e` joined by +/-.
// Coefficients are arbitrary-precision decimals, exponents decimal integers
// fitting a machine word.  Like terms are summed.  Throws parse_error with the
// offending position, or budget_error when an exponent exceeds the degree cap.
IntPolynomial parse_poly(std::string_view text);

// Canonical rendering; parse_poly(render_poly(f)) == f.
std::string render_poly(const IntPolynomial& f);

// f(x), exact, by Horner.
BigInt eval_exact(const IntPolynomial& f, const BigInt& x);

// f(x) mod m in [0, m); coefficients reduced first.  m >= 1.
std::uint64_t eval_mod(const IntPolynomial& f, std::uint64_t x, std::uint64_t m);
std::uint64_t eval_mod(const IntPolynomial& f, const BigInt& x, std::uint64_t m);

// f with coefficients reduced mod m, for repeated evaluation at one modulus.
struct ReducedPoly {
    std::vector<std::uint64_t> coeffs;
    std::uint64_t m = 1;

    std::uint64_t eval(std::uint64_t x) const;
};

ReducedPoly reduce_mod(const IntPolynomial& f, std::uint64_t m);

} // namespace idiv
