#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>

namespace idiv {

using BigInt = boost::multiprecision::mpz_int;

// Number of bits in |v|; 0 for v == 0.
inline std::uint64_t bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

inline BigInt big_abs(const BigInt& v) { return boost::multiprecision::abs(v); }

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// v mod m normalized to [0, m).  m >= 1.
inline std::uint64_t mod_to_u64(const BigInt& v, std::uint64_t m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

} // namespace idiv
