#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netsynth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; `position` is a 0-based character offset.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

/// A rational function does not have the k(a0 s^2 + a1 s + 1)/(s(d0 s^2 + d1 s + 1)) shape.
struct ShapeError : Error {
    using Error::Error;
};

/// Evaluation requested at (or numerically indistinguishable from) a pole.
struct PoleError : Error {
    using Error::Error;
};

struct DivideByZeroError : Error {
    using Error::Error;
};

/// Nodal system has no unique solution (disconnected or degenerate network).
struct SingularSystemError : Error {
    using Error::Error;
};

/// Frequency-inverse dual undefined (a0 = 0 or d0 = 0).
struct DegenerateDualError : Error {
    using Error::Error;
};

/// A realization routine was called outside its stated conditions.
struct ConditionError : Error {
    using Error::Error;
};

struct NotPositiveRealError : Error {
    using Error::Error;
};

/// RL realization premise violated: a root discriminant is negative.
struct DiscriminantViolation : Error {
    using Error::Error;
};

/// RL realization premise violated: roots fail the strict interlacing order.
struct OrderingViolation : Error {
    using Error::Error;
};

/// A constructed network failed its recomputed-admittance check; never emitted.
struct VerificationError : Error {
    using Error::Error;
};

/// Netlist file rejected; `line` is 1-based.
struct NetlistFormatError : Error {
    NetlistFormatError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

struct NonPlanarError : Error {
    using Error::Error;
};

} // namespace netsynth
