#pragma once

#include <stdexcept>
#include <string>

namespace isr1 {

/// Base class for every domain error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

/// gcd(a,b) != 1 where a coprime pair is required.
struct NotCoprimeError : Error {
    using Error::Error;
};

/// Conjugation requested with a matrix whose determinant is not +-1.
struct NotUnimodularError : Error {
    using Error::Error;
};

/// Column completion requested for a non-primitive integer vector.
struct NotPrimitiveError : Error {
    using Error::Error;
};

/// rank1_factor needs det = 0 and a nonzero matrix.
struct NotRankOneError : Error {
    using Error::Error;
};

struct NotNilpotentError : Error {
    using Error::Error;
};

/// Terminal witness requested although a !≡ sign (mod b).
struct CriterionFailsError : Error {
    using Error::Error;
};

/// Witness-from-solution requested although z divides neither x-1 nor x+1.
struct DivisibilityFailsError : Error {
    using Error::Error;
};

/// A transported or constructed witness failed its mandatory re-check.
struct VerificationFailedError : Error {
    using Error::Error;
};

struct ModulusTooLargeError : Error {
    using Error::Error;
};

/// Operation precondition not met by the given decision (e.g. clean
/// decomposition of a matrix that is not isr1 with a nontrivial witness).
struct NotApplicableError : Error {
    using Error::Error;
};

}  // namespace isr1
