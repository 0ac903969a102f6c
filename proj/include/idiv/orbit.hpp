#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idiv/bigint.hpp"
#include "idiv/poly.hpp"

namespace idiv {

inline constexpr std::uint64_t kDefaultBitBudget = 1ull << 20;

// terms[k] holds f^{k+1}(0), exactly.
struct OrbitPrefix {
    IntPolynomial f;
    std::vector<BigInt> terms;
};

// First n_max orbit terms of 0, exact.  Throws budget_error (carrying the last
// safe 1-based index) once a term exceeds max_bits.
OrbitPrefix orbit_exact(const IntPolynomial& f, std::uint64_t n_max,
                        std::uint64_t max_bits = kDefaultBitBudget);

// Orbit of 0 under x -> f(x) mod m, resolved into pre-cycle and cycle via
// Brent's algorithm plus one table-filling pass.  The table stores the first
// tail+cycle residues of (f^n(0) mod m) for n >= 1; f^0(0) = 0 is implicit.
class ModularOrbit {
public:
    ModularOrbit(const IntPolynomial& f, std::uint64_t m);

    std::uint64_t modulus() const { return m_; }
    std::uint64_t tail() const { return tail_; }
    std::uint64_t cycle() const { return cycle_; }
    const std::vector<std::uint64_t>& table() const { return table_; }

    // f^n(0) mod m in O(1); n >= 1.
    std::uint64_t residue_at(std::uint64_t n) const;

    // Least n >= 1 with f^n(0) == 0 mod m, if any.
    std::optional<std::uint64_t> rank() const { return rank_; }

private:
    std::uint64_t m_;
    std::uint64_t tail_ = 0;
    std::uint64_t cycle_ = 1;
    std::vector<std::uint64_t> table_;
    std::optional<std::uint64_t> rank_;
};

inline ModularOrbit orbit_mod(const IntPolynomial& f, std::uint64_t m) {
    return ModularOrbit(f, m);
}

// f^n(0) mod m via the orbit index formula.
std::uint64_t iterate_index_mod(const IntPolynomial& f, std::uint64_t m, std::uint64_t n);

// Least n with f^n(0) == 0 mod m (the period of 0 when 0 is periodic mod m),
// or nullopt when the orbit of 0 never returns to 0 mod m.
std::optional<std::uint64_t> rank_of_apparition(const IntPolynomial& f, std::uint64_t m);

struct ZeroClassification {
    enum class Kind { Wandering, Preperiodic };

    Kind kind = Kind::Wandering;
    std::uint64_t tail = 0;   // preperiod of the point 0 (Preperiodic only)
    std::uint64_t period = 0; // exact period (Preperiodic only)
    bool exact = true;        // false for the heuristic Wandering verdict

    bool is_periodic() const { return kind == Kind::Preperiodic && tail == 0; }
};

// Closed form for unit trinomials x^d + x^e + c (d > e >= 2); bounded exact
// iteration with repeat detection otherwise.  For general f the Wandering
// verdict is heuristic (three strictly increasing |terms| above twice the
// largest |coefficient|) and flagged exact = false.  Throws undecided_error
// when the budget runs out before any verdict.
ZeroClassification classify_zero(const IntPolynomial& f, std::uint64_t max_iters = 64,
                                 std::uint64_t max_bits = kDefaultBitBudget);

struct TermValuation {
    std::uint32_t value = 0;
    bool saturated = false; // v_p(f^n(0)) >= cap (value == cap), includes f^n(0) == 0

    bool operator==(const TermValuation&) const = default;
};

// v_p(f^n(0)) computed from f^n(0) mod p^cap without the exact term; exact when
// below cap, otherwise the saturated marker.  Requires p^cap to fit in 64 bits.
TermValuation valuation_of_term(const IntPolynomial& f, std::uint64_t p, std::uint64_t n,
                                std::uint32_t cap);

} // namespace idiv
