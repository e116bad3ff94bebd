#include "levyheat/stable_sampler.hpp"

#include "levyheat/common.hpp"

#include <cmath>

namespace levyheat {

double sample_stable(const LevySymbolSpec& spec, double t, Rng& rng) {
    spec.validate();
    if (spec.d != 1) throw ValidationError("sample_stable: requires d = 1");
    if (!(t > 0.0)) throw ValidationError("sample_stable: requires t > 0");

    const double a = spec.alpha;
    const double v = M_PI * (rng.uniform01() - 0.5); // uniform on (-pi/2, pi/2)
    if (a == 1.0) {
        // Cauchy: scale t.
        return t * std::tan(v);
    }
    const double w = rng.exponential();
    // Standard symmetric draw (scale 1 = cf exp(-|xi|^a)); valid for a = 2 too,
    // where it reduces to 2 sqrt(w) sin(v) ~ Normal(0, 2).
    double x = std::sin(a * v) / std::pow(std::cos(v), 1.0 / a) *
               std::pow(std::cos((1.0 - a) * v) / w, (1.0 - a) / a);
    return std::pow(t, 1.0 / a) * x;
}

} // namespace levyheat
