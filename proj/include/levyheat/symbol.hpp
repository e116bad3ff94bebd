#pragma once

#include <limits>

namespace levyheat {

/// Symmetric stable Levy exponent Psi(xi) = |xi|^alpha in dimension d.
struct LevySymbolSpec {
    double alpha = 2.0; ///< stability index, in (0, 2]
    int d = 1;          ///< spatial dimension, >= 1

    void validate() const;
};

/// Psi(xi) = |xi|^alpha. Even, nonnegative, Psi(0) = 0.
double symbol_eval(const LevySymbolSpec& spec, double xi);

/// Upsilon(beta) = (1/2pi) integral dxi / (beta + 2 Psi(xi)) over the line.
/// Finite only for alpha > 1 (d = 1); returns +infinity for alpha <= 1.
/// Rejects d != 1, where the integral can never be finite.
double upsilon(const LevySymbolSpec& spec, double beta);

inline constexpr double upsilon_infinite = std::numeric_limits<double>::infinity();

} // namespace levyheat
