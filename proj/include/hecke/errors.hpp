#ifndef HECKE_ERRORS_HPP
#define HECKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecke {

// Base of every engine error.  Anything derived from std::logic_error here
// signals a bug in the algebra (a broken invariant), not bad user input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments at a public boundary (CLI exit code 2).
struct UsageError : Error {
    using Error::Error;
};

// A division that must be exact left a remainder.  Always indicates a
// transcription or algebra bug upstream; never recoverable.
struct InexactDivision : Error {
    using Error::Error;
};

// sym_from_multi received a polynomial that is not permutation invariant.
struct SymmetryViolation : Error {
    using Error::Error;
};

// divide_out_scalar on a polynomial with a part below the requested power.
struct NotDivisible : Error {
    using Error::Error;
};

// Undetermined-coefficients target is outside the span of the images.
struct NotInImage : Error {
    using Error::Error;
};

// Linear system columns are dependent; the solver refuses to guess.
struct LinearDependence : Error {
    using Error::Error;
};

// Brute-force enumeration would exceed its stated budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A serialized value failed to parse.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace hecke

#endif
