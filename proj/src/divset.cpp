#include "idiv/divset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "idiv/errors.hpp"
#include "idiv/orbit.hpp"
#include "idiv/parallel.hpp"
#include "idiv/primes.hpp"

namespace idiv {

bool DivisibilitySetWindow::contains(std::uint64_t n) const {
    return std::binary_search(members.begin(), members.end(), n);
}

bool in_div_set(const IntPolynomial& f, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("in_div_set: index must be >= 1");
    return iterate_index_mod(f, n, n) == 0;
}

DivisibilitySetWindow div_set_window(const IntPolynomial& f, std::uint64_t bound,
                                     unsigned workers) {
    if (bound < 1) throw std::invalid_argument("div_set_window: bound must be >= 1");
    std::vector<char> member(bound + 1, 0);
    for_each_index(bound, workers, [&](std::uint64_t i) {
        std::uint64_t n = i + 1;
        member[n] = in_div_set(f, n) ? 1 : 0;
    });
    DivisibilitySetWindow window{f, bound, {}, false};
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (member[n]) window.members.push_back(n);
    }
    try {
        window.degenerate = classify_zero(f).is_periodic();
    } catch (const undecided_error&) {
        window.degenerate = false;
    }
    return window;
}

namespace {

std::string describe(std::uint64_t n) { return std::to_string(n); }

// Divisors of f(0), closure law (1).
void check_divisors_of_first_term(const IntPolynomial& f, const DivisibilitySetWindow& w,
                                  PropertyCheck& check) {
    const BigInt c = f.constant_term();
    for (std::uint64_t n = 1; n <= w.bound; ++n) {
        if (c % n != 0) continue;
        ++check.instances;
        if (!w.contains(n)) {
            check.counterexamples.push_back(describe(n) + " divides f(0) but is not a member");
        }
    }
}

// Even f: prime members divide f(0), closure law (2).
void check_even_function_primes(const IntPolynomial& f, const DivisibilitySetWindow& w,
                                PropertyCheck& check) {
    const BigInt c = f.constant_term();
    for (std::uint64_t n : w.members) {
        if (!is_prime(n)) continue;
        ++check.instances;
        if (c % n != 0) {
            check.counterexamples.push_back("prime member " + describe(n) +
                                            " does not divide f(0)");
        }
    }
}

// v_p(n) < v_p(f^n(0)) pushes n to np, closure law (3).
void check_valuation_extension(const IntPolynomial& f, const DivisibilitySetWindow& w,
                               const std::vector<std::uint64_t>& primes, PropertyCheck& check) {
    for (std::uint64_t n : w.members) {
        for (std::uint64_t p : primes) {
            if (p > w.bound / n) break;
            std::uint32_t vp = 0;
            for (std::uint64_t q = n; q % p == 0; q /= p) ++vp;
            if (!valuation_of_term(f, p, n, vp + 1).saturated) continue;
            ++check.instances;
            if (!w.contains(n * p)) {
                check.counterexamples.push_back(describe(n) + " * " + describe(p) +
                                                " missing despite valuation growth");
            }
        }
    }
}

// Coprime members multiply, closure law (4).
void check_coprime_products(const DivisibilitySetWindow& w, PropertyCheck& check) {
    const auto& m = w.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m[j] > w.bound / m[i]) break;
            if (std::gcd(m[i], m[j]) != 1) continue;
            ++check.instances;
            if (!w.contains(m[i] * m[j])) {
                check.counterexamples.push_back(describe(m[i]) + " * " + describe(m[j]) +
                                                " missing despite coprimality");
            }
        }
    }
}

// Smallest prime of n/m extends m, closure law (5); with `allow_shared_prime`
// this is the rigid version that drops the p does-not-divide-m hypothesis.
void check_smallest_prime_extension(const DivisibilitySetWindow& w, bool allow_shared_prime,
                                    PropertyCheck& check) {
    const auto& m = w.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j || m[j] % m[i] != 0) continue;
            std::uint64_t p = smallest_prime_factor(m[j] / m[i]);
            if (!allow_shared_prime && m[i] % p == 0) continue;
            ++check.instances;
            if (!w.contains(m[i] * p)) {
                check.counterexamples.push_back(describe(m[i]) + " * " + describe(p) +
                                                " missing (from pair with " + describe(m[j]) +
                                                ")");
            }
        }
    }
}

// Largest prime of a member strips off, rigid law (2).
void check_largest_prime_reduction(const DivisibilitySetWindow& w, PropertyCheck& check) {
    for (std::uint64_t n : w.members) {
        if (n == 1) continue;
        ++check.instances;
        std::uint64_t p = largest_prime_factor(n);
        if (!w.contains(n / p)) {
            check.counterexamples.push_back(describe(n) + " / " + describe(p) + " missing");
        }
    }
}

} // namespace

bool ClosureReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.passed(); });
}

ClosureReport check_closure_properties(const IntPolynomial& f,
                                       const DivisibilitySetWindow& window) {
    ClosureReport report;
    report.degenerate = window.degenerate;
    try {
        ZeroClassification z = classify_zero(f);
        report.rigidity_witness =
            f.linear_coeff() == 0 && z.kind == ZeroClassification::Kind::Wandering;
        report.witness_exact = report.rigidity_witness && z.exact;
    } catch (const undecided_error&) {
        report.rigidity_witness = false;
    }

    const std::vector<std::uint64_t> primes = prime_sieve(window.bound);

    PropertyCheck p1{"divisors_of_first_term"};
    check_divisors_of_first_term(f, window, p1);
    report.checks.push_back(std::move(p1));

    PropertyCheck p2{"even_function_primes"};
    p2.applicable = f.is_even_function();
    if (p2.applicable) check_even_function_primes(f, window, p2);
    report.checks.push_back(std::move(p2));

    PropertyCheck p3{"valuation_extension"};
    check_valuation_extension(f, window, primes, p3);
    report.checks.push_back(std::move(p3));

    PropertyCheck p4{"coprime_products"};
    check_coprime_products(window, p4);
    report.checks.push_back(std::move(p4));

    PropertyCheck p5{"smallest_prime_extension"};
    check_smallest_prime_extension(window, /*allow_shared_prime=*/false, p5);
    report.checks.push_back(std::move(p5));

    PropertyCheck r1{"rigid_smallest_prime_extension"};
    r1.applicable = report.rigidity_witness;
    if (r1.applicable) check_smallest_prime_extension(window, /*allow_shared_prime=*/true, r1);
    report.checks.push_back(std::move(r1));

    PropertyCheck r2{"rigid_largest_prime_reduction"};
    r2.applicable = report.rigidity_witness;
    if (r2.applicable) check_largest_prime_reduction(window, r2);
    report.checks.push_back(std::move(r2));

    return report;
}

PrimeConstraint trinomial_prime_constraint(std::uint64_t d, std::uint64_t e, const BigInt& c,
                                           std::uint64_t p) {
    if (!(d > e && e >= 2)) {
        throw std::invalid_argument("trinomial_prime_constraint: need d > e >= 2");
    }
    const bool even_exponent = (d % 2 == 0) || (e % 2 == 0);
    if (even_exponent && c % p != 0) return PrimeConstraint::ExcludedByParity;
    return PrimeConstraint::Admissible;
}

bool check_exponent_shift(std::uint64_t d, std::uint64_t e, const BigInt& c, std::uint64_t p,
                          std::int64_t k1, std::int64_t k2) {
    if (!(d > e && e >= 2)) throw std::invalid_argument("check_exponent_shift: need d > e >= 2");
    if (!in_div_set(IntPolynomial::trinomial(d, e, c), p)) {
        throw std::invalid_argument("check_exponent_shift: p is not in the base divisibility set");
    }
    const std::int64_t span = static_cast<std::int64_t>(p) - 1;
    const std::int64_t d2 = static_cast<std::int64_t>(d) + k1 * span;
    const std::int64_t e2 = static_cast<std::int64_t>(e) + k2 * span;
    if (d2 < 3 || e2 < 2 || d2 == e2) {
        throw std::invalid_argument("check_exponent_shift: shifted exponents out of range");
    }
    // The shifted exponents may land in either order; the trinomial is the same.
    const std::uint64_t hi = static_cast<std::uint64_t>(std::max(d2, e2));
    const std::uint64_t lo = static_cast<std::uint64_t>(std::min(d2, e2));
    return in_div_set(IntPolynomial::trinomial(hi, lo, c), p);
}

} // namespace idiv
