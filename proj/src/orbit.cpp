#include "idiv/orbit.hpp"

#include <map>
#include <stdexcept>

#include "idiv/errors.hpp"
#include "idiv/primes.hpp"

namespace idiv {

OrbitPrefix orbit_exact(const IntPolynomial& f, std::uint64_t n_max, std::uint64_t max_bits) {
    if (n_max < 1) throw std::invalid_argument("orbit_exact: n_max must be >= 1");
    OrbitPrefix prefix{f, {}};
    prefix.terms.reserve(n_max);
    BigInt x = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        x = eval_exact(f, x);
        if (bit_length(x) > max_bits) {
            throw budget_error("orbit_exact: bit budget exceeded at index " + std::to_string(n),
                               n - 1);
        }
        prefix.terms.push_back(x);
    }
    return prefix;
}

ModularOrbit::ModularOrbit(const IntPolynomial& f, std::uint64_t m) : m_(m) {
    if (m == 0) throw std::invalid_argument("ModularOrbit: modulus must be >= 1");
    const ReducedPoly g = reduce_mod(f, m);

    // Brent: cycle length first, then the pre-cycle length of the point 0.
    std::uint64_t power = 1, lam = 1;
    std::uint64_t tortoise = 0;
    std::uint64_t hare = g.eval(0);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power <<= 1;
            lam = 0;
        }
        hare = g.eval(hare);
        ++lam;
    }
    std::uint64_t mu = 0;
    tortoise = hare = 0;
    for (std::uint64_t i = 0; i < lam; ++i) hare = g.eval(hare);
    while (tortoise != hare) {
        tortoise = g.eval(tortoise);
        hare = g.eval(hare);
        ++mu;
    }

    // The table starts at n = 1, so the point-0 pre-cycle shortens by one.
    tail_ = mu > 0 ? mu - 1 : 0;
    cycle_ = lam;
    table_.reserve(tail_ + cycle_);
    std::uint64_t x = 0;
    for (std::uint64_t i = 0; i < tail_ + cycle_; ++i) {
        x = g.eval(x);
        table_.push_back(x);
        if (x == 0 && !rank_) rank_ = i + 1;
    }
}

std::uint64_t ModularOrbit::residue_at(std::uint64_t n) const {
    if (n < 1) throw std::invalid_argument("residue_at: index must be >= 1");
    if (n <= tail_) return table_[n - 1];
    return table_[tail_ + (n - tail_ - 1) % cycle_];
}

std::uint64_t iterate_index_mod(const IntPolynomial& f, std::uint64_t m, std::uint64_t n) {
    return ModularOrbit(f, m).residue_at(n);
}

std::optional<std::uint64_t> rank_of_apparition(const IntPolynomial& f, std::uint64_t m) {
    return ModularOrbit(f, m).rank();
}

namespace {

ZeroClassification classify_trinomial(const TrinomialShape& t) {
    ZeroClassification result;
    if (t.c == 0) {
        result = {ZeroClassification::Kind::Preperiodic, 0, 1, true};
    } else if (t.c == -1 && (t.d % 2 == 0) != (t.e % 2 == 0)) {
        // 0 -> -1 -> -1.
        result = {ZeroClassification::Kind::Preperiodic, 1, 1, true};
    } else if (t.c == -1 && t.d % 2 == 0 && t.e % 2 == 0) {
        // 0 -> -1 -> 1 -> 1.
        result = {ZeroClassification::Kind::Preperiodic, 2, 1, true};
    } else {
        // |f^n(0)| strictly increasing for |c| > 1, for c = 1, and for c = -1
        // with d, e odd.
        result = {ZeroClassification::Kind::Wandering, 0, 0, true};
    }
    return result;
}

} // namespace

ZeroClassification classify_zero(const IntPolynomial& f, std::uint64_t max_iters,
                                 std::uint64_t max_bits) {
    if (auto shape = as_unit_trinomial(f)) return classify_trinomial(*shape);

    BigInt max_coeff = 0;
    for (const BigInt& c : f.coeffs()) max_coeff = std::max(max_coeff, big_abs(c));
    const BigInt growth_floor = 2 * max_coeff;

    std::map<BigInt, std::uint64_t> seen;
    seen.emplace(0, 0);
    BigInt x = 0;
    BigInt prev = 0;
    std::uint64_t increasing_run = 0;
    for (std::uint64_t k = 1; k <= max_iters; ++k) {
        x = eval_exact(f, x);
        if (bit_length(x) > max_bits) {
            throw undecided_error("classify_zero: bit budget exceeded before any verdict");
        }
        auto [it, inserted] = seen.emplace(x, k);
        if (!inserted) {
            ZeroClassification result;
            result.kind = ZeroClassification::Kind::Preperiodic;
            result.tail = it->second;
            result.period = k - it->second;
            result.exact = true;
            return result;
        }
        BigInt ax = big_abs(x);
        increasing_run = (k >= 2 && ax > big_abs(prev)) ? increasing_run + 1 : 0;
        if (increasing_run >= 3 && ax > growth_floor) {
            return {ZeroClassification::Kind::Wandering, 0, 0, false};
        }
        prev = x;
    }
    throw undecided_error("classify_zero: iteration budget exhausted");
}

TermValuation valuation_of_term(const IntPolynomial& f, std::uint64_t p, std::uint64_t n,
                                std::uint32_t cap) {
    if (p < 2) throw std::invalid_argument("valuation_of_term: p must be >= 2");
    if (cap < 1) throw std::invalid_argument("valuation_of_term: cap must be >= 1");
    auto modulus = checked_pow(p, cap);
    if (!modulus) throw std::invalid_argument("valuation_of_term: p^cap exceeds the word size");
    std::uint64_t residue = iterate_index_mod(f, *modulus, n);
    if (residue == 0) return {cap, true};
    return {valuation_u64(residue, p), false};
}

} // namespace idiv
