#pragma once

#include <cstdint>
#include <vector>

#include "idiv/bigint.hpp"
#include "idiv/divset.hpp"
#include "idiv/orbit.hpp"
#include "idiv/poly.hpp"

namespace idiv {

// |f^n(0)| = primitive * nonprimitive, the nonprimitive part being the product
// of the primitive parts at the proper divisors of n.
struct PrimitiveSplit {
    std::uint64_t n = 0;
    BigInt primitive = 1;
    BigInt nonprimitive = 1;
};

// Primitive/non-primitive decomposition of the first n_max orbit terms by the
// divisor recursion with exact division only — no factoring.  A non-exact
// division throws rigidity_error (evidence that the sequence is not rigid);
// meaningful output needs f with zero linear coefficient and 0 wandering.
std::vector<PrimitiveSplit> primitive_split_prefix(const IntPolynomial& f, std::uint64_t n_max,
                                                   std::uint64_t max_bits = kDefaultBitBudget);

// Indices n <= n_max whose term has no primitive prime divisor (P_n = 1).
std::vector<std::uint64_t> zsigmondy_window(const IntPolynomial& f, std::uint64_t n_max,
                                            std::uint64_t max_bits = kDefaultBitBudget);

struct GrowthCheck {
    std::uint64_t n = 0;
    bool cube_bound_ok = false;    // |a_n| > |a_{n-1}| (|a_{n-1}|^2 - 2|a_{n-1}| + 1)
    bool product_bound_ok = false; // prod_{k<n} |a_k| < |a_n|
    BigInt cube_margin;            // lhs - rhs of the first inequality
    BigInt product_margin;         // |a_n| - product
};

// Verifies both growth inequalities on the exact prefix for 3 <= n <= n_max.
std::vector<GrowthCheck> check_growth(const IntPolynomial& f, std::uint64_t n_max,
                                      std::uint64_t max_bits = kDefaultBitBudget);

enum class Finiteness {
    FiniteTrivial, // c = 1 or c = -1, set is {1}
    Infinite,      // |c| >= 2
    Degenerate,    // c = 0, or 0 preperiodic (c = -1 with an even exponent)
};

struct FinitenessVerdict {
    Finiteness classification = Finiteness::Degenerate;
    DivisibilitySetWindow evidence;
    // FiniteTrivial: window == {1}; Infinite: window contains every divisor of
    // |c| in range.  Always true for Degenerate.
    bool consistent = true;
};

// Classification of the divisibility set of x^d + x^e + c per the finiteness
// dichotomy, with a windowed membership scan as evidence.
FinitenessVerdict finiteness_verdict(std::uint64_t d, std::uint64_t e, const BigInt& c,
                                     std::uint64_t bound, unsigned workers = 1);

} // namespace idiv
