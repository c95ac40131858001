#pragma once

#include <stdexcept>
#include <string>

namespace simcube {

// Shape/index violations (empty matrix, mismatched sizes, bad pivot, ...).
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested Hadamard order has no generation recipe.
struct unsupported_order_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed result failed its numerical tolerance (e.g. orthogonality residual).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction plan cannot be executed as written.
struct invalid_plan_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input object violates its type invariants.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace simcube
