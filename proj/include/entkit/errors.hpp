#pragma once

#include <stdexcept>

namespace entkit {

// Base class for all library errors. The CLI maps subclasses onto its
// documented exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension or length mismatch (non-square input, wrong vector length, ...).
struct shape_error : error {
    using error::error;
};

// A result dimension would exceed the configured cap.
struct size_limit_error : error {
    using error::error;
};

// Argument outside the operation's domain (m too small, bad index set, ...).
struct domain_error : error {
    using error::error;
};

// All-zero vector where a usable state was expected.
struct degenerate_error : error {
    using error::error;
};

// Phase specification with missing or superfluous entries.
struct incomplete_spec_error : error {
    using error::error;
};

// Entangler amplitude with non-unit modulus in strict mode.
struct amplitude_error : error {
    using error::error;
};

// Requested dimension is outside what the operation supports.
struct unsupported_error : error {
    using error::error;
};

// Input JSON that does not match the documented schema.
struct schema_error : error {
    using error::error;
};

} // namespace entkit
