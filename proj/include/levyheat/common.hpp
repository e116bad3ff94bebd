#pragma once

#include <stdexcept>
#include <string>

namespace levyheat {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad input: domain violations, malformed specs, out-of-range queries.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Numerical failure: non-finite intermediate values, overflow.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(what) {}
};

/// Quadrature did not reach the requested tolerance.
class QuadratureError : public NumericalError {
public:
    explicit QuadratureError(const std::string& what) : NumericalError(what) {}
};

/// Fixed-point iteration failed; carries the last residual.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double residual, int iterations, bool diverged)
        : NumericalError(what), residual(residual), iterations(iterations), diverged(diverged) {}
    double residual;
    int iterations;
    bool diverged;
};

/// Refusal to solve outside the existence regime (finite Upsilon(beta) required).
class ExistenceGateError : public ValidationError {
public:
    explicit ExistenceGateError(const std::string& what) : ValidationError(what) {}
};

} // namespace levyheat
