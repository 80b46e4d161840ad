#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cylcob {

// Base class for everything this library throws on contract violations.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Composition of words whose boundary arities do not line up.
struct ArityMismatch : Error {
    int produced;
    int expected;
    ArityMismatch(int produced_, int expected_)
        : Error("arity mismatch: a word ending on " + std::to_string(produced_) +
                " marked points cannot feed a word starting on " + std::to_string(expected_)),
          produced(produced_),
          expected(expected_) {}
};

// Powers are only defined for endomorphisms.
struct NotEndomorphism : Error {
    using Error::Error;
};

// Diagram composition with mismatched glued periods.
struct PeriodMismatch : Error {
    using Error::Error;
};

// A traced closed loop wound more than once around the cylinder; impossible for
// embedded diagrams, so this always signals an internal bug.
struct WindingViolation : Error {
    using Error::Error;
};

// Equality query across distinct hom-sets.
struct SignatureMismatch : Error {
    using Error::Error;
};

// A cap-start set that admits no non-crossing cap system.
struct InconsistentIndex : Error {
    using Error::Error;
};

// Generator or relation parameters outside their stated domain.
struct OutOfRange : Error {
    using Error::Error;
};

struct DimTooSmall : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

// Syntax error in a textual word; offset/length locate the offending token.
struct ParseError : Error {
    std::size_t offset;
    std::size_t length;
    ParseError(const std::string& what_, std::size_t offset_, std::size_t length_ = 1)
        : Error(what_), offset(offset_), length(length_) {}
};

// Well-formed syntax that fails to type (ill-composed arities, power of a
// non-endomorphism); carries the source location of the offending token.
struct WordTypeError : Error {
    std::size_t offset;
    std::size_t length;
    WordTypeError(const std::string& what_, std::size_t offset_, std::size_t length_ = 1)
        : Error(what_), offset(offset_), length(length_) {}
};

}  // namespace cylcob
