#pragma once

#include <stdexcept>
#include <string>

namespace genocchi {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A confluent node span needs a derivative order the oracle cannot supply.
class InsufficientDerivativeOrder : public Error {
public:
    using Error::Error;
};

/// Two nodes are bit-equal where distinct nodes are required.
class ConfluentNodes : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature failed to meet its tolerance within the bisection limit.
class MaxDepthExceeded : public Error {
public:
    using Error::Error;
};

/// An interval [a, b] with a >= b where a proper interval is required.
class EmptyInterval : public Error {
public:
    using Error::Error;
};

/// Evaluation hit a domain guard (division by zero, log of a nonpositive
/// value, sqrt of a negative value, fractional power of a negative base).
class EvaluationDomainError : public Error {
public:
    using Error::Error;
};

/// Differentiation of an expression node kind that has no derivative rule.
class NonDifferentiable : public Error {
public:
    using Error::Error;
};

} // namespace genocchi
