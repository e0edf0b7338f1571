#pragma once

#include <stdexcept>
#include <string>

namespace sinesum {

// Base class for every typed failure raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A fractional-part or distance-to-integer query cannot be answered because the
// input's error bound straddles an integer boundary.
class AmbiguousNearInteger : public Error {
public:
    explicit AmbiguousNearInteger(const std::string& what) : Error(what) {}
};

// The working precision needed to certify a result exceeds the configured
// ceiling, or an input's error bound is too large for the requested tolerance.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

// An operation's stated precondition does not hold for the given arguments.
class PreconditionViolation : public Error {
public:
    explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

// Exhaustive tuple enumeration was requested beyond the supported cap.
class TupleSpaceTooLarge : public Error {
public:
    explicit TupleSpaceTooLarge(const std::string& what) : Error(what) {}
};

// Factoring the argument is beyond the supported integer range.
class FactorizationTooLarge : public Error {
public:
    explicit FactorizationTooLarge(const std::string& what) : Error(what) {}
};

// The hypotheses of the structured-hit count law do not hold for the supplied
// approximation (denominator or offset out of range).
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& what) : Error(what) {}
};

// A coefficient that must be nonzero (as a divisor in a class-constant
// computation) vanished while the quantity it normalizes did not.
class ZeroCoefficient : public Error {
public:
    explicit ZeroCoefficient(const std::string& what) : Error(what) {}
};

// The base index is below the smallness threshold required by the block
// decomposition's strict admissibility gate.
class BaseTooSmall : public Error {
public:
    explicit BaseTooSmall(const std::string& what) : Error(what) {}
};

// A sweep result differs from its frozen baseline beyond the declared
// per-metric tolerance.
class BaselineMismatch : public Error {
public:
    explicit BaselineMismatch(const std::string& what) : Error(what) {}
};

} // namespace sinesum
