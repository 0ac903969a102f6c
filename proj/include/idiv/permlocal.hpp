#pragma once

#include <cstdint>
#include <vector>

#include "idiv/bigint.hpp"
#include "idiv/poly.hpp"

namespace idiv {

enum class PermParity { Even, Odd, NotApplicable };

// Full functional-graph summary of x -> f(x) on Z/pZ.  When f is a bijection,
// cycle_type lists the cycle lengths (ascending, summing to p) and parity is
// the permutation sign; otherwise those fields stay empty/NotApplicable and
// the zero_* fields describe the preperiod structure of 0.
struct PermutationProfile {
    std::uint64_t p = 2;
    bool is_permutation = false;
    std::uint64_t image_size = 0;
    std::vector<std::uint64_t> cycle_type;
    PermParity parity = PermParity::NotApplicable;
    std::uint64_t zero_tail = 0;  // steps before 0's orbit enters its cycle
    std::uint64_t zero_cycle = 1; // length of the cycle 0 falls into
};

PermutationProfile profile_mod_p(const IntPolynomial& f, std::uint64_t p);

// p is in the divisibility set iff 0 is fixed mod p (p | f(0)) or 0 has exact
// period p; decided from the period structure, agrees with in_div_set(f, p).
bool prime_in_divset_via_period(const IntPolynomial& f, std::uint64_t p);

enum class Restriction {
    EvenExponent,      // a reduced exponent is even and p does not divide c
    EvenQuotient,      // (p-1)/gcd(d-e, p-1) is even
    OrderNotDividing,  // ord_p(2) does not divide gcd(d-e, p-1)
    GcdTooSmall,       // 2^gcd(d-e, p-1) < p
    LinearCase,        // f collapses to 2x + c mod p with 2 != 1 and c != 0
    ParityRestriction, // f collapses to 2x^D + c which is an odd permutation
};

struct RestrictionReport {
    std::uint64_t p = 2;
    std::vector<Restriction> fired;
    bool excluded = false; // any predicate fired; each one proves p is not in D

    bool has(Restriction r) const;
};

// Applies every exclusion predicate to x^d + x^e + c at the prime p, with the
// exponents reduced mod p-1 into [1, p-1] first.  Nothing fires when p | c
// (p is then a member outright), and the circulant-based predicates only apply
// off the collapsed case with both reduced exponents odd.
RestrictionReport restriction_predicates(std::uint64_t d, std::uint64_t e, const BigInt& c,
                                         std::uint64_t p);

// Constant term of the (p-1) x (p-1) circulant of x^d + x^e: 0 when
// (p-1)/gcd(d-e, p-1) is even, else (-1)^e 2^gcd(d-e, p-1).  Exact integer.
// Requires d != e mod p-1.
BigInt circulant_constant(std::uint64_t d, std::uint64_t e, std::uint64_t p);

// Independent oracle: dense determinant of the same circulant over Z/pZ by
// Gaussian elimination.  Meant for small p (the matrix is (p-1)^2 entries).
std::uint64_t circulant_bruteforce(std::uint64_t d, std::uint64_t e, std::uint64_t p);

// Injectivity of f mod p by image enumeration.  Also evaluates the resultant
// congruence prod_{x^{p-1}=1} f(x) == f(0)^{p-1} - 1 (mod p), which injectivity
// forces; a mismatch in that direction is an internal error.
bool injectivity_resultant_check(const IntPolynomial& f, std::uint64_t p);

enum class LinearVerdict { Excluded, NotExcluded };

// For f == ax + c mod p: membership of p requires a == 1 or c == 0 mod p.
LinearVerdict linear_case_predicate(const BigInt& a, const BigInt& c, std::uint64_t p);

// Sign of the permutation x^d of Z/pZ for p == 1 mod 4, gcd(d, p-1) = 1:
// odd exactly when d == 3 mod 4.
PermParity power_map_parity(std::uint64_t d, std::uint64_t p);

enum class ParityVerdict { Excluded, NotApplicable };

// For f == a x^d + c mod p: excluded when p == 1 mod 4, d == 3 mod 4 and
// ord_p(a) is odd (an odd permutation cannot be a p-cycle).  The verdict is a
// plain condition evaluation; soundness additionally needs gcd(d, p-1) = 1 and
// p not dividing c, which callers must supply.
ParityVerdict parity_restriction(const BigInt& a, std::uint64_t d, const BigInt& c,
                                 std::uint64_t p);

struct DensityResult {
    std::uint64_t prime_bound = 0;
    std::uint64_t primes = 0;
    std::uint64_t qualifying = 0; // p == 1 mod 8 with ord_p(2) odd
    double fraction = 0.0;
};

DensityResult density_scan(std::uint64_t prime_bound, unsigned workers = 1);

} // namespace idiv
