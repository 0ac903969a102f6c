#include "idiv/zsigmondy.hpp"

#include <stdexcept>

#include "idiv/errors.hpp"
#include "idiv/primes.hpp"

namespace idiv {

std::vector<PrimitiveSplit> primitive_split_prefix(const IntPolynomial& f, std::uint64_t n_max,
                                                   std::uint64_t max_bits) {
    OrbitPrefix prefix = orbit_exact(f, n_max, max_bits);
    std::vector<PrimitiveSplit> splits;
    splits.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const BigInt& term = prefix.terms[n - 1];
        if (term == 0) {
            throw std::invalid_argument(
                "primitive_split_prefix: orbit term is zero (0 is not wandering)");
        }
        PrimitiveSplit split;
        split.n = n;
        split.nonprimitive = 1;
        for (std::uint64_t d : divisors(n)) {
            if (d != n) split.nonprimitive *= splits[d - 1].primitive;
        }
        BigInt abs_term = big_abs(term);
        BigInt quotient, remainder;
        boost::multiprecision::divide_qr(abs_term, split.nonprimitive, quotient, remainder);
        if (remainder != 0) {
            throw rigidity_error("primitive_split_prefix: non-exact division at index " +
                                     std::to_string(n) +
                                     " — the orbit sequence is not rigid",
                                 n);
        }
        split.primitive = quotient;
        splits.push_back(std::move(split));
    }
    return splits;
}

std::vector<std::uint64_t> zsigmondy_window(const IntPolynomial& f, std::uint64_t n_max,
                                            std::uint64_t max_bits) {
    std::vector<std::uint64_t> indices;
    for (const PrimitiveSplit& split : primitive_split_prefix(f, n_max, max_bits)) {
        if (split.primitive == 1) indices.push_back(split.n);
    }
    return indices;
}

std::vector<GrowthCheck> check_growth(const IntPolynomial& f, std::uint64_t n_max,
                                      std::uint64_t max_bits) {
    OrbitPrefix prefix = orbit_exact(f, n_max, max_bits);
    std::vector<GrowthCheck> checks;
    BigInt product = big_abs(prefix.terms[0]);
    if (n_max >= 2) product *= big_abs(prefix.terms[1]);
    for (std::uint64_t n = 3; n <= n_max; ++n) {
        const BigInt current = big_abs(prefix.terms[n - 1]);
        const BigInt previous = big_abs(prefix.terms[n - 2]);
        GrowthCheck check;
        check.n = n;
        check.cube_margin = current - previous * (previous * previous - 2 * previous + 1);
        check.cube_bound_ok = check.cube_margin > 0;
        check.product_margin = current - product;
        check.product_bound_ok = check.product_margin > 0;
        checks.push_back(std::move(check));
        product *= current;
    }
    return checks;
}

FinitenessVerdict finiteness_verdict(std::uint64_t d, std::uint64_t e, const BigInt& c,
                                     std::uint64_t bound, unsigned workers) {
    if (!(d > e && e >= 2)) throw std::invalid_argument("finiteness_verdict: need d > e >= 2");
    FinitenessVerdict verdict;
    const bool has_even_exponent = (d % 2 == 0) || (e % 2 == 0);
    if (c == 0 || (c == -1 && has_even_exponent)) {
        verdict.classification = Finiteness::Degenerate;
    } else if (c == 1 || c == -1) {
        verdict.classification = Finiteness::FiniteTrivial;
    } else {
        verdict.classification = Finiteness::Infinite;
    }

    verdict.evidence = div_set_window(IntPolynomial::trinomial(d, e, c), bound, workers);
    switch (verdict.classification) {
        case Finiteness::FiniteTrivial:
            verdict.consistent = verdict.evidence.members == std::vector<std::uint64_t>{1};
            break;
        case Finiteness::Infinite: {
            verdict.consistent = true;
            const BigInt abs_c = big_abs(c);
            for (std::uint64_t n = 1; n <= bound; ++n) {
                if (abs_c % n == 0 && !verdict.evidence.contains(n)) {
                    verdict.consistent = false;
                    break;
                }
            }
            break;
        }
        case Finiteness::Degenerate:
            verdict.consistent = true;
            break;
    }
    return verdict;
}

} // namespace idiv
