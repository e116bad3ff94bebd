#include "levyheat/quadrature.hpp"

#include "levyheat/common.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace levyheat {

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (!(a <= b)) throw ValidationError("integrate: requires a <= b");
    if (a == b) return 0.0;
    using integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
    double error = 0.0, l1 = 0.0;
    double value = integrator::integrate(f, a, b, opt.max_depth, opt.rel_tol, &error, &l1);
    double scale = std::max(std::abs(value), l1);
    if (!std::isfinite(value))
        throw QuadratureError("integrate: non-finite result");
    if (error > opt.abs_tol && error > 10.0 * opt.rel_tol * scale)
        throw QuadratureError("integrate: error estimate " + std::to_string(error) +
                              " exceeds tolerance on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
    return value;
}

double integrate_to_infinity(const std::function<double(double)>& f, double a,
                             const QuadratureOptions& opt) {
    if (!(a > 0.0)) throw ValidationError("integrate_to_infinity: requires a > 0");
    auto g = [&f](double u) {
        double x = 1.0 / u;
        return f(x) * x * x;
    };
    return integrate(g, 0.0, 1.0 / a, opt);
}

} // namespace levyheat
