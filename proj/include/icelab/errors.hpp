#pragma once

#include <stdexcept>
#include <string>

namespace icelab {

// Malformed input (non-square matrix, out-of-range entries, bad flag values).
// Distinct from a predicate returning false.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration request beyond the configured size budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Division by zero, inverse of zero, substitution of zero.
struct ZeroDivisionError : std::domain_error {
    explicit ZeroDivisionError(const std::string& what) : std::domain_error(what) {}
};

} // namespace icelab
