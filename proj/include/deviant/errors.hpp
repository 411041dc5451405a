#pragma once

#include <stdexcept>
#include <string>

namespace deviant {

// Extraction produced a negative exponent or a nonzero residual: the input
// series is not the Hilbert series of a Koszul quotient (or the truncation
// is inconsistent).
struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested computation exceeds the configured size limits.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace deviant
