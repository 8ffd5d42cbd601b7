#ifndef STRENGTHLAB_ERRORS_HPP
#define STRENGTHLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strengthlab {

// Root of the library's error hierarchy. Every condition a caller can
// provoke with bad input or an out-of-scope query throws a subclass;
// internal invariant violations use std::logic_error instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed polynomial text; `position` is a 0-based offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Terms of unequal total degree, or graded operands of incompatible degree.
struct DegreeMismatch : Error {
    using Error::Error;
};

// Variable index at or beyond the declared number of variables.
struct VariableOutOfRange : Error {
    using Error::Error;
};

// The zero polynomial where a nonzero section is required.
struct ZeroSectionError : Error {
    using Error::Error;
};

// More forms than the ambient dimension allows in a regular sequence.
struct TooManyForms : Error {
    using Error::Error;
};

// The auxiliary bundle of a Koszul-bound query is trivial or has no sections.
struct InvalidM : Error {
    using Error::Error;
};

// A decision procedure would exceed its configured size budget; the result
// is unknown, which callers must keep distinct from a negative answer.
struct BudgetExceeded : Error {
    using Error::Error;
};

// No rational point found within the configured height bound.
struct NoRationalPoint : Error {
    using Error::Error;
};

// Realification requested for a target with nonreal coefficients.
struct NotRealTarget : Error {
    using Error::Error;
};

// Effective-cone data whose derivation invariants (z > 0) fail.
struct InvalidConeData : Error {
    using Error::Error;
};

// Parameter outside the domain where the formula is established.
struct OutOfRange : Error {
    using Error::Error;
};

// Every sampled instance of a randomized oracle was degenerate.
struct DegenerateSamples : Error {
    using Error::Error;
};

} // namespace strengthlab

#endif // STRENGTHLAB_ERRORS_HPP
