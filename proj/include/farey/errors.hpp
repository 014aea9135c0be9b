#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments to an arithmetic primitive (k < 1, fraction outside [0,1], ...).
struct DomainError : Error {
    using Error::Error;
};

// A matrix was applied to a fraction outside its map's declared domain:
// the image vector left the set {h/k : k >= 1, 0 <= h <= k}.
struct OutOfDomainError : Error {
    using Error::Error;
};

// Checked 64-bit arithmetic overflowed. Never wraps.
struct OverflowError : Error {
    using Error::Error;
};

// A sequence descriptor or map parameter violates its invariants.
struct SpecError : Error {
    using Error::Error;
};

// Requested order exceeds a configured cap.
struct CapError : Error {
    using Error::Error;
};

// No closed-form count exists for this descriptor; count by generating.
struct NoFormulaError : Error {
    using Error::Error;
};

// An identity law between sequence families failed (names law and parameters).
struct IdentityViolation : Error {
    using Error::Error;
};

// A monotone-map verification found a counterexample.
struct VerificationFailure : Error {
    using Error::Error;
};

// A consecutive-triple check (unimodularity / mediant) failed at some index.
struct NeighborViolation : Error {
    using Error::Error;
};

} // namespace farey
