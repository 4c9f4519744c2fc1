#pragma once

#include <stdexcept>
#include <string>

namespace gwalk {

/// Malformed construction expression or graph6 input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graph outside the class an operation supports (non-regular, disconnected, ...).
struct UnsupportedGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The characteristic polynomial has an irreducible factor of degree >= 3,
/// so the spectrum does not lie in any single Q(sqrt(D)).
struct IrreducibleCubicOrHigher : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic attempted between elements of Q(sqrt(D1)) and Q(sqrt(D2)), D1 != D2.
struct FieldMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

/// The scalar is not the cosine of any rational multiple of pi
/// (within the degree <= 2 algebraic numbers this library handles).
struct UnrecognizedAngle : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace gwalk
