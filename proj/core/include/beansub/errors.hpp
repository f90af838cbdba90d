#pragma once

#include <stdexcept>
#include <string>

namespace beansub {

/// Argument outside the set where a function is defined (e.g. |z| > 1 for the bean map).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke a documented precondition (grid too small, invalid parameter box, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative search did not reach the requested tolerance within its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operator parameters do not satisfy the theorem's threshold condition.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter combination the certification does not cover (complex second-order coefficients).
class UnsupportedParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Grid verdicts inside a bisection bracket were not monotone.
class MonotonicityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace beansub
