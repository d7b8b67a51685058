#pragma once

#include <stdexcept>
#include <string>

namespace swor {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input failed validation (bad sizes, bad parameter ranges, unparsable files).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Population sum is not zero (beyond tolerance in floating-point mode).
class ZeroSumViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Population has fewer than two elements.
class TooShortError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Vectors passed to a majorization comparison have different lengths.
class LengthMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Robin Hood transfer preconditions violated.
class InvalidTransferError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Operation requires a population with positive absolute deviation.
class DegeneratePopulationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Argument outside a function's mathematical domain.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Conditional statistics on the positive part are undefined: P(X > 0) = 0.
class NoPositiveMassError : public Error {
public:
    using Error::Error;
};

/// Exact enumeration would exceed the configured subset budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// A population file could not be parsed.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace swor
