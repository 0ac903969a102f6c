#include "idiv/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "idiv/errors.hpp"
#include "idiv/primes.hpp"

namespace idiv {

namespace {

const BigInt kZero = 0;

// Dense storage: a runaway exponent would allocate that many coefficients.
constexpr std::uint64_t kMaxExponent = 1'000'000;

void canonicalize(std::vector<BigInt>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize(coeffs_);
}

IntPolynomial IntPolynomial::trinomial(std::uint64_t d, std::uint64_t e, const BigInt& c) {
    if (!(d > e && e >= 1)) throw std::invalid_argument("trinomial: need d > e >= 1");
    if (d > kMaxExponent) throw budget_error("trinomial: degree exceeds cap", 0);
    std::vector<BigInt> coeffs(d + 1, 0);
    coeffs[0] = c;
    coeffs[e] = 1;
    coeffs[d] = 1;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear(const BigInt& a, const BigInt& b) {
    return IntPolynomial(std::vector<BigInt>{b, a});
}

const BigInt& IntPolynomial::coeff(std::uint64_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

bool IntPolynomial::is_even_function() const {
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

std::optional<TrinomialShape> as_unit_trinomial(const IntPolynomial& f) {
    const auto& coeffs = f.coeffs();
    if (coeffs.size() < 4) return std::nullopt; // degree >= 3 since d > e >= 2
    std::uint64_t d = coeffs.size() - 1;
    std::optional<std::uint64_t> e;
    for (std::uint64_t i = 1; i < d; ++i) {
        if (coeffs[i] == 0) continue;
        if (coeffs[i] != 1 || e.has_value()) return std::nullopt;
        e = i;
    }
    if (coeffs[d] != 1 || !e.has_value() || *e < 2) return std::nullopt;
    return TrinomialShape{d, *e, coeffs[0]};
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    BigInt parse_uint_big() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a decimal integer");
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    std::uint64_t parse_exponent() {
        skip_ws();
        std::size_t start = pos;
        BigInt value = parse_uint_big();
        if (value > UINT64_MAX) {
            pos = start;
            fail("exponent overflows the platform word");
        }
        std::uint64_t e = value.convert_to<std::uint64_t>();
        if (e > kMaxExponent) throw budget_error("parse_poly: exponent exceeds degree cap", 0);
        return e;
    }

    // monomial := INT ['*' 'x' ['^' EXP]] | 'x' ['^' EXP]
    void parse_monomial(int sign, std::vector<BigInt>& acc) {
        skip_ws();
        if (at_end()) fail("expected a monomial");
        BigInt k = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            k = parse_uint_big();
            have_coeff = true;
        }
        skip_ws();
        std::uint64_t exp = 0;
        if (have_coeff && pos < text.size() && peek() == '*') {
            ++pos;
            skip_ws();
            if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
        }
        if (!at_end() && peek() == 'x') {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < text.size() && peek() == '^') {
                ++pos;
                exp = parse_exponent();
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 'x'");
        }
        if (acc.size() < exp + 1) acc.resize(exp + 1, 0);
        acc[exp] += sign * k;
    }

    IntPolynomial parse() {
        std::vector<BigInt> acc;
        skip_ws();
        int sign = 1;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            sign = peek() == '-' ? -1 : 1;
            ++pos;
        }
        parse_monomial(sign, acc);
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos;
            parse_monomial(op == '-' ? -1 : 1, acc);
        }
        return IntPolynomial(std::move(acc));
    }
};

} // namespace

IntPolynomial parse_poly(std::string_view text) {
    Parser parser{text};
    return parser.parse();
}

std::string render_poly(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& coeffs = f.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const BigInt& c = coeffs[i];
        if (c == 0) continue;
        BigInt a = big_abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? '-' : '+';
        }
        if (i == 0) {
            out += a.str();
            continue;
        }
        if (a != 1) {
            out += a.str();
            out += '*';
        }
        out += 'x';
        if (i > 1) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

BigInt eval_exact(const IntPolynomial& f, const BigInt& x) {
    BigInt result = 0;
    const auto& coeffs = f.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        result *= x;
        result += coeffs[i];
    }
    return result;
}

ReducedPoly reduce_mod(const IntPolynomial& f, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("reduce_mod: modulus must be >= 1");
    ReducedPoly reduced;
    reduced.m = m;
    reduced.coeffs.reserve(f.coeffs().size());
    for (const BigInt& c : f.coeffs()) reduced.coeffs.push_back(mod_to_u64(c, m));
    while (!reduced.coeffs.empty() && reduced.coeffs.back() == 0) reduced.coeffs.pop_back();
    return reduced;
}

std::uint64_t ReducedPoly::eval(std::uint64_t x) const {
    x %= m;
    std::uint64_t result = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        result = mulmod(result, x, m);
        result += coeffs[i];
        if (result >= m) result -= m;
    }
    return result;
}

std::uint64_t eval_mod(const IntPolynomial& f, std::uint64_t x, std::uint64_t m) {
    return reduce_mod(f, m).eval(x);
}

std::uint64_t eval_mod(const IntPolynomial& f, const BigInt& x, std::uint64_t m) {
    return reduce_mod(f, m).eval(mod_to_u64(x, m));
}

} // namespace idiv
