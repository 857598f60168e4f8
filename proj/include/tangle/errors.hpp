#pragma once

#include <stdexcept>
#include <string>

namespace tangle {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- invalid coordinates / systems (CLI exit code 2) ---------------------

// A coordinate that cannot describe any arc system at all.
class InvalidCoordinate : public Error {
public:
    using Error::Error;
};

// Odd total window weight: the outer-region counts have no integer solution.
class ParityError : public InvalidCoordinate {
public:
    using InvalidCoordinate::InvalidCoordinate;
};

// Structural invariant broken: negative p, or q != 0 while p == 0.
class InvariantError : public InvalidCoordinate {
public:
    using InvalidCoordinate::InvalidCoordinate;
};

// Tracing produced a loop that never reaches a puncture.
class ClosedComponentError : public InvalidCoordinate {
public:
    using InvalidCoordinate::InvalidCoordinate;
};

// Tracing did not produce exactly three puncture-to-puncture arcs.
class ComponentCountError : public InvalidCoordinate {
public:
    using InvalidCoordinate::InvalidCoordinate;
};

// --- misuse of an operation on an otherwise fine input (exit code 2) -----

class UsageError : public Error {
public:
    using Error::Error;
};

// bridge_replace called on a position that is not a normality violation.
class NotAViolation : public UsageError {
public:
    using UsageError::UsageError;
};

// A replacement-pattern prediction needs the arc to cross some window.
class NoWindowIntersection : public UsageError {
public:
    using UsageError::UsageError;
};

class NotNormal : public UsageError {
public:
    using UsageError::UsageError;
};

class NotMinimal : public UsageError {
public:
    using UsageError::UsageError;
};

class ParseError : public UsageError {
public:
    using UsageError::UsageError;
};

// --- scientific alarm channel (CLI exit code 3) ---------------------------
//
// Raised when a structural fact the whole construction depends on fails at
// runtime: a completion set larger than three, two distinct weight-decreasing
// neighbors, a cycle in an explored ball, and so on.  These are never user
// errors; they mean the model itself has been falsified on some input.
class TripwireError : public Error {
public:
    using Error::Error;
};

} // namespace tangle
