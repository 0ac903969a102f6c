#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "idiv/bigint.hpp"
#include "idiv/poly.hpp"

namespace idiv {

// Exit codes: 0 success, 1 usage error, 2 computation budget exceeded,
// 3 invariant violation detected (a scientific finding, not a crash).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInvariant = 3;

// Flat `key=value` configuration text mirroring the flags; '#' starts a
// comment.  Command-line flags override file values.
std::map<std::string, std::string> parse_kv_config(std::istream& in);

// Polynomial template in the usual grammar where the letter `c` stands for a
// placeholder integer, e.g. "x^3+x+c".
IntPolynomial instantiate_family(const std::string& templ, const BigInt& c);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace idiv
