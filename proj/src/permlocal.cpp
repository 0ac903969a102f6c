#include "idiv/permlocal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "idiv/parallel.hpp"
#include "idiv/primes.hpp"

namespace idiv {

namespace {

void require_prime(std::uint64_t p, const char* where) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(where) + ": p must be prime");
}

// Exponent reduced mod p-1 into [1, p-1]; pointwise equal on Z/pZ for x != 0,
// and 0^d = 0 either way once the exponent stays >= 1.
std::uint64_t reduce_exponent(std::uint64_t exp, std::uint64_t p) {
    if (p == 2) return 1;
    return (exp - 1) % (p - 1) + 1;
}

} // namespace

PermutationProfile profile_mod_p(const IntPolynomial& f, std::uint64_t p) {
    require_prime(p, "profile_mod_p");
    const ReducedPoly g = reduce_mod(f, p);

    std::vector<std::uint64_t> image(p);
    std::vector<char> hit(p, 0);
    std::uint64_t image_size = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        image[x] = g.eval(x);
        if (!hit[image[x]]) {
            hit[image[x]] = 1;
            ++image_size;
        }
    }

    PermutationProfile profile;
    profile.p = p;
    profile.image_size = image_size;
    profile.is_permutation = image_size == p;

    if (profile.is_permutation) {
        std::vector<char> visited(p, 0);
        std::uint64_t cycles = 0;
        for (std::uint64_t x = 0; x < p; ++x) {
            if (visited[x]) continue;
            std::uint64_t length = 0;
            for (std::uint64_t y = x; !visited[y]; y = image[y]) {
                visited[y] = 1;
                ++length;
            }
            profile.cycle_type.push_back(length);
            if (x == 0) profile.zero_cycle = length;
            ++cycles;
        }
        std::sort(profile.cycle_type.begin(), profile.cycle_type.end());
        profile.parity = (p - cycles) % 2 == 0 ? PermParity::Even : PermParity::Odd;
        profile.zero_tail = 0;
    } else {
        profile.parity = PermParity::NotApplicable;
        std::unordered_map<std::uint64_t, std::uint64_t> step_of;
        std::uint64_t x = 0, step = 0;
        while (true) {
            auto [it, inserted] = step_of.emplace(x, step);
            if (!inserted) {
                profile.zero_tail = it->second;
                profile.zero_cycle = step - it->second;
                break;
            }
            x = image[x];
            ++step;
        }
    }
    return profile;
}

bool prime_in_divset_via_period(const IntPolynomial& f, std::uint64_t p) {
    require_prime(p, "prime_in_divset_via_period");
    const ReducedPoly g = reduce_mod(f, p);
    // First return of 0 is its exact period; p is a member iff that period
    // divides p, i.e. is 1 (0 fixed, p | c) or p itself (cyclic permutation).
    std::uint64_t x = 0;
    for (std::uint64_t k = 1; k <= p; ++k) {
        x = g.eval(x);
        if (x == 0) return k == 1 || k == p;
    }
    return false;
}

bool RestrictionReport::has(Restriction r) const {
    return std::find(fired.begin(), fired.end(), r) != fired.end();
}

RestrictionReport restriction_predicates(std::uint64_t d, std::uint64_t e, const BigInt& c,
                                         std::uint64_t p) {
    require_prime(p, "restriction_predicates");
    if (!(d > e && e >= 1)) {
        throw std::invalid_argument("restriction_predicates: need d > e >= 1");
    }
    RestrictionReport report;
    report.p = p;
    if (c % p == 0) return report; // p is a member via the fixed point; nothing can fire

    const std::uint64_t dr = reduce_exponent(d, p);
    const std::uint64_t er = reduce_exponent(e, p);

    if (dr % 2 == 0 || er % 2 == 0) report.fired.push_back(Restriction::EvenExponent);

    if (dr != er) {
        if (dr % 2 == 1 && er % 2 == 1) {
            const std::uint64_t k = std::gcd(d - e, p - 1);
            if (((p - 1) / k) % 2 == 0) report.fired.push_back(Restriction::EvenQuotient);
            if (k % ord_mod(2, p) != 0) report.fired.push_back(Restriction::OrderNotDividing);
            if (k < 64 && (std::uint64_t{1} << k) < p) {
                report.fired.push_back(Restriction::GcdTooSmall);
            }
        }
    } else if (dr == 1) {
        // f == 2x + c mod p.
        if (linear_case_predicate(2, c, p) == LinearVerdict::Excluded) {
            report.fired.push_back(Restriction::LinearCase);
        }
    } else {
        // f == 2x^dr + c mod p; the parity argument needs x^dr bijective.
        if (std::gcd(dr, p - 1) == 1 &&
            parity_restriction(2, dr, c, p) == ParityVerdict::Excluded) {
            report.fired.push_back(Restriction::ParityRestriction);
        }
    }

    report.excluded = !report.fired.empty();
    return report;
}

BigInt circulant_constant(std::uint64_t d, std::uint64_t e, std::uint64_t p) {
    require_prime(p, "circulant_constant");
    if (p < 3 || d == e || d < 1 || e < 1) {
        throw std::invalid_argument("circulant_constant: need p >= 3 and d != e, both >= 1");
    }
    const std::uint64_t diff = d > e ? d - e : e - d;
    if (diff % (p - 1) == 0) {
        throw std::invalid_argument("circulant_constant: exponents collide mod p-1");
    }
    const std::uint64_t k = std::gcd(diff, p - 1);
    if (((p - 1) / k) % 2 == 0) return 0;
    BigInt value = big_pow(BigInt(2), static_cast<unsigned>(k));
    return e % 2 == 0 ? value : -value;
}

std::uint64_t circulant_bruteforce(std::uint64_t d, std::uint64_t e, std::uint64_t p) {
    require_prime(p, "circulant_bruteforce");
    if (p < 3 || d == e || d < 1 || e < 1) {
        throw std::invalid_argument("circulant_bruteforce: need p >= 3 and d != e, both >= 1");
    }
    const std::uint64_t s = p - 1;
    const std::uint64_t dm = d % s;
    const std::uint64_t em = e % s;
    if (dm == em) throw std::invalid_argument("circulant_bruteforce: exponents collide mod p-1");

    // Row i of the circulant holds the coefficients of x^d + x^e shifted right
    // by i: M[i][j] = [ (j - i) mod s in {d, e} mod s ].
    std::vector<std::vector<std::uint64_t>> m(s, std::vector<std::uint64_t>(s, 0));
    for (std::uint64_t i = 0; i < s; ++i) {
        m[i][(dm + i) % s] = 1;
        m[i][(em + i) % s] = 1;
    }

    std::uint64_t det = 1;
    for (std::uint64_t col = 0; col < s; ++col) {
        std::uint64_t pivot = col;
        while (pivot < s && m[pivot][col] == 0) ++pivot;
        if (pivot == s) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = p - det;
        }
        const std::uint64_t inv = powmod(m[col][col], p - 2, p);
        det = mulmod(det, m[col][col], p);
        for (std::uint64_t row = col + 1; row < s; ++row) {
            if (m[row][col] == 0) continue;
            const std::uint64_t factor = mulmod(m[row][col], inv, p);
            for (std::uint64_t j = col; j < s; ++j) {
                m[row][j] = (m[row][j] + p - mulmod(factor, m[col][j], p)) % p;
            }
        }
    }
    return det % p;
}

bool injectivity_resultant_check(const IntPolynomial& f, std::uint64_t p) {
    require_prime(p, "injectivity_resultant_check");
    const ReducedPoly g = reduce_mod(f, p);
    std::vector<char> hit(p, 0);
    bool injective = true;
    std::uint64_t product = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t y = g.eval(x);
        if (hit[y]) injective = false;
        hit[y] = 1;
        if (x != 0) product = mulmod(product, y, p);
    }
    // Injectivity forces the image over the units to be everything except f(0),
    // which pins the product at f(0)^{p-1} - 1.
    const std::uint64_t c = g.eval(0);
    const std::uint64_t expected = (powmod(c, p - 1, p) + p - 1) % p;
    if (injective && product != expected) {
        throw std::logic_error("injectivity_resultant_check: resultant congruence violated");
    }
    return injective;
}

LinearVerdict linear_case_predicate(const BigInt& a, const BigInt& c, std::uint64_t p) {
    require_prime(p, "linear_case_predicate");
    const std::uint64_t am = mod_to_u64(a, p);
    const std::uint64_t cm = mod_to_u64(c, p);
    return (am != 1 && cm != 0) ? LinearVerdict::Excluded : LinearVerdict::NotExcluded;
}

PermParity power_map_parity(std::uint64_t d, std::uint64_t p) {
    require_prime(p, "power_map_parity");
    if (p % 4 != 1) throw std::invalid_argument("power_map_parity: need p == 1 mod 4");
    if (std::gcd(d, p - 1) != 1) {
        throw std::invalid_argument("power_map_parity: x^d is not a permutation mod p");
    }
    return d % 4 == 3 ? PermParity::Odd : PermParity::Even;
}

ParityVerdict parity_restriction(const BigInt& a, std::uint64_t d, const BigInt& c,
                                 std::uint64_t p) {
    (void)c; // translation by c is a power of a p-cycle, always even
    require_prime(p, "parity_restriction");
    if (p % 4 != 1 || d % 4 != 3) return ParityVerdict::NotApplicable;
    const std::uint64_t am = mod_to_u64(a, p);
    if (am == 0) throw std::invalid_argument("parity_restriction: a must be a unit mod p");
    return ord_mod(am, p) % 2 == 1 ? ParityVerdict::Excluded : ParityVerdict::NotApplicable;
}

DensityResult density_scan(std::uint64_t prime_bound, unsigned workers) {
    if (prime_bound < 2) throw std::invalid_argument("density_scan: bound must be >= 2");
    const std::vector<std::uint64_t> primes = prime_sieve(prime_bound);
    std::vector<char> qualifies(primes.size(), 0);
    for_each_index(primes.size(), workers, [&](std::uint64_t i) {
        const std::uint64_t p = primes[i];
        qualifies[i] = (p % 8 == 1 && ord_mod(2, p) % 2 == 1) ? 1 : 0;
    });
    DensityResult result;
    result.prime_bound = prime_bound;
    result.primes = primes.size();
    result.qualifying =
        static_cast<std::uint64_t>(std::count(qualifies.begin(), qualifies.end(), 1));
    result.fraction = result.primes == 0
                          ? 0.0
                          : static_cast<double>(result.qualifying) / static_cast<double>(result.primes);
    return result;
}

} // namespace idiv
