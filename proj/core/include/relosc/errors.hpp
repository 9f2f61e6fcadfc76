#pragma once

#include <stdexcept>
#include <string>

namespace relosc {

/// Thrown when a parsed value or input file does not match the expected shape.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficient data violates the model invariants (a < 0, lengths, N >= 2).
class InvalidCoefficientsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested random value range cannot produce valid coefficients.
class InvalidRangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A float-mode sign decision fell inside the zero band and the result of the
/// query is not trustworthy. Exact mode never throws this.
class SignUncertainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Supplied Wronskian signs contradict the angle residual classes. Indicates
/// float-mode sign corruption (or an internal bug in exact mode).
class InconsistentSignsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The iterative eigensolver exceeded its sweep cap.
class NoConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A comparison-theorem precondition (operator ordering) could not be
/// certified from the data.
class PreconditionUnverifiedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relosc
