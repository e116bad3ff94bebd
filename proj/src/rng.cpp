#include "levyheat/rng.hpp"

#include "levyheat/common.hpp"

#include <cmath>

namespace levyheat {

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw ValidationError("poisson: mean must be finite and nonnegative");
    std::uint64_t count = 0;
    // Poisson(a+b) = Poisson(a) + Poisson(b) for independent chunks.
    while (mean > 0.0) {
        double chunk = mean > 500.0 ? 500.0 : mean;
        mean -= chunk;
        double limit = std::exp(-chunk);
        double prod = uniform01();
        while (prod > limit) {
            ++count;
            prod *= uniform01();
        }
    }
    return count;
}

} // namespace levyheat
