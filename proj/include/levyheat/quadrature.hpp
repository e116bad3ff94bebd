#pragma once

#include <functional>

namespace levyheat {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 15;
};

/// Adaptive Gauss-Kronrod integral of f over the finite interval [a, b].
/// Throws QuadratureError when the error estimate misses the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

/// Integral of f over [a, inf), a > 0, via the substitution u = 1/x.
/// f must decay at least like x^{-s} with s > 1.
double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadratureOptions& opt = {});

} // namespace levyheat
