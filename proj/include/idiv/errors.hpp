#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace idiv {

// Input text could not be parsed; `pos` is the 0-based offset of the offending
// character in the input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// A computation exceeded its configured size budget (orbit terms grow roughly
// like d^n digits).  `last_safe_index` is the largest 1-based orbit index that
// was computed within budget.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::uint64_t last_safe_index)
        : std::runtime_error(what), last_safe_index_(last_safe_index) {}

    std::uint64_t last_safe_index() const { return last_safe_index_; }

private:
    std::uint64_t last_safe_index_;
};

// The primitive-part recursion hit a non-exact division at term `index`.
// This is evidence that the orbit sequence is not rigid, not a crash; callers
// are expected to surface it as a finding.
class rigidity_error : public std::runtime_error {
public:
    rigidity_error(const std::string& what, std::uint64_t index)
        : std::runtime_error(what), index_(index) {}

    std::uint64_t index() const { return index_; }

private:
    std::uint64_t index_;
};

// classify_zero ran out of iteration budget without reaching a verdict.
class undecided_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace idiv
