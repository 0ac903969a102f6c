#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idiv/bigint.hpp"
#include "idiv/poly.hpp"

namespace idiv {

// {n in [1, N] : n | f^n(0)}.  `degenerate` marks f with 0 periodic over Z
// (every multiple of the period divides f^n(0) = 0).
struct DivisibilitySetWindow {
    IntPolynomial f;
    std::uint64_t bound = 1;
    std::vector<std::uint64_t> members;
    bool degenerate = false;

    bool contains(std::uint64_t n) const;
};

// n | f^n(0), decided mod n.
bool in_div_set(const IntPolynomial& f, std::uint64_t n);

// Exact window scan; per-n orbits are independent, so n-ranges are distributed
// across workers and merged in order (workers = 0 picks the hardware count).
DivisibilitySetWindow div_set_window(const IntPolynomial& f, std::uint64_t bound,
                                     unsigned workers = 1);

struct PropertyCheck {
    std::string name;
    bool applicable = true;
    std::uint64_t instances = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

struct ClosureReport {
    bool degenerate = false;
    bool rigidity_witness = false; // zero linear coefficient and 0 wandering
    bool witness_exact = false;    // wandering verdict was exact, not heuristic
    std::vector<PropertyCheck> checks;

    bool all_passed() const;
};

// Confirms every in-window instance of the divisibility-set closure laws:
// divisors of f(0) are members; even f admits only primes dividing f(0);
// valuation growth, coprime products, and smallest-prime extensions; and, under
// the rigidity witness, the unconditional smallest-prime and largest-prime
// laws.  Counterexample lists are expected to come back empty.
ClosureReport check_closure_properties(const IntPolynomial& f,
                                       const DivisibilitySetWindow& window);

enum class PrimeConstraint { Admissible, ExcludedByParity };

// For x^d + x^e + c with d or e even, a prime member must divide c.
PrimeConstraint trinomial_prime_constraint(std::uint64_t d, std::uint64_t e, const BigInt& c,
                                           std::uint64_t p);

// Verifies that membership of p in the divisibility set of x^d + x^e + c
// persists when either exponent shifts by a multiple of p-1.  Requires the
// base membership, shifted exponents >= 3 and >= 2 respectively and distinct;
// checks the shifted trinomial from scratch.
bool check_exponent_shift(std::uint64_t d, std::uint64_t e, const BigInt& c, std::uint64_t p,
                          std::int64_t k1, std::int64_t k2);

} // namespace idiv
