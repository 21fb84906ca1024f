#pragma once

#include <stdexcept>

namespace smps {

// Operand dimensions are incompatible (matrix shapes, chain lengths, ...).
struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input violates a numerical validity requirement (orthonormality,
// hermiticity, normalization, ...).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds the dense-verification size cap.
struct size_cap_error : std::length_error {
    using std::length_error::length_error;
};

} // namespace smps
