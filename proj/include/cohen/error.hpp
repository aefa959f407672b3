#pragma once

#include <stdexcept>
#include <string>

namespace cohen {

// Base of all library errors. The CLI maps every subclass to exit code 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing scalars or elements over different coefficient rings.
struct ring_mismatch_error : error {
    using error::error;
};

// Malformed element, word, or tensor-input text.
struct parse_error : error {
    using error::error;
};

// Generator or block index outside 1..n, or bad block arity.
struct index_error : error {
    using error::error;
};

// Incompatible matrix/module shapes, or out-of-bounds entry access.
struct shape_error : error {
    using error::error;
};

// Operation needs Z or Z/p but the ring is a composite-modulus quotient,
// or a non-unit was asked for an inverse.
struct unsupported_ring_error : error {
    using error::error;
};

// A nonzero coefficient fell beyond the requested degree cap.
struct truncation_error : error {
    using error::error;
};

// Input violates a documented precondition (e.g. lifting an element that
// is not in the kernel of the restriction map).
struct precondition_error : error {
    using error::error;
};

} // namespace cohen
