#include "levyheat/symbol.hpp"

#include "levyheat/common.hpp"
#include "levyheat/quadrature.hpp"

#include <cmath>
#include <string>

namespace levyheat {

void LevySymbolSpec::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw ValidationError("symbol: alpha must lie in (0, 2], got " + std::to_string(alpha));
    if (d < 1) throw ValidationError("symbol: dimension d must be >= 1");
}

double symbol_eval(const LevySymbolSpec& spec, double xi) {
    spec.validate();
    return std::pow(std::abs(xi), spec.alpha);
}

double upsilon(const LevySymbolSpec& spec, double beta) {
    spec.validate();
    if (spec.d != 1)
        throw ValidationError("upsilon: finite Upsilon(beta) requires d = 1");
    if (!(beta > 0.0)) throw ValidationError("upsilon: beta must be positive");
    // For alpha <= 1 the integrand decays no faster than 1/xi, so the integral
    // diverges. Decided analytically rather than by a quadrature timeout.
    if (spec.alpha <= 1.0) return upsilon_infinite;

    const double a = spec.alpha;
    auto f = [a, beta](double xi) { return 1.0 / (beta + 2.0 * std::pow(xi, a)); };
    // Split where the symbol term dominates; the tail is handled by u = 1/xi.
    double split = std::max(1.0, std::pow(50.0 * beta, 1.0 / a));
    double head = integrate(f, 0.0, split);
    double tail = integrate_to_infinity(f, split);
    return (head + tail) / M_PI;
}

} // namespace levyheat
