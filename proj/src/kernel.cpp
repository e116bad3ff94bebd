#include "levyheat/kernel.hpp"

#include "levyheat/common.hpp"
#include "levyheat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

namespace levyheat {

namespace {

std::uint64_t double_key(double t) {
    std::uint64_t k;
    std::memcpy(&k, &t, sizeof(k));
    return k;
}

// Upper bound on the density constant in p(t,x) <= c * t / |x|^(1+alpha),
// valid for the symmetric stable family on the line. The sharp asymptotic
// constant is Gamma(1+alpha) sin(pi alpha / 2) / pi <= 0.33; factor-4 margin.
constexpr double density_tail_const = 1.4;

// Tail integral of p(t, .) beyond X > 0, one-sided: integral_X^inf p(t,x) dx.
// Large-X series from the characteristic-function expansion; the first three
// terms leave an error well below 1e-7 for X >= 30 and t <= 5.
double stable_tail_integral(double alpha, double t, double X) {
    double sum = 0.0;
    double sign = 1.0;
    double fact = 1.0;
    for (int k = 1; k <= 3; ++k) {
        fact *= k;
        sum += sign * std::tgamma(alpha * k) * std::sin(k * M_PI * alpha / 2.0) / fact *
               std::pow(t, k) * std::pow(X, -alpha * k);
        sign = -sign;
    }
    return sum / M_PI;
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

KernelHandle KernelHandle::make(const LevySymbolSpec& symbol, FourierOptions options) {
    symbol.validate();
    KernelHandle k;
    k.symbol_ = symbol;
    k.fopt_ = options;
    if (symbol.alpha == 2.0) {
        k.method_ = KernelMethod::closed_form;
    } else if (symbol.alpha == 1.0 && symbol.d == 1) {
        k.method_ = KernelMethod::closed_form;
    } else if (symbol.d == 1) {
        k.method_ = KernelMethod::fourier_table;
        if (!(options.x_max > 0.0) || !(options.alias_tol > 0.0))
            throw ValidationError("kernel: fourier options must be positive");
    } else {
        throw ValidationError(
            "kernel: d >= 2 supports only alpha = 2 (closed form); got alpha = " +
            std::to_string(symbol.alpha));
    }
    return k;
}

double KernelHandle::cf(double t, double xi) const {
    return std::exp(-t * std::pow(std::abs(xi), symbol_.alpha));
}

double KernelHandle::density(double t, double x) const {
    if (!(t > 0.0)) throw ValidationError("kernel: density requires t > 0");
    return method_ == KernelMethod::closed_form ? density_closed(t, x)
                                                : density_fourier(t, x);
}

double KernelHandle::density_closed(double t, double x) const {
    if (symbol_.alpha == 2.0) {
        // cf exp(-t xi^2): Gaussian with variance 2t per coordinate.
        double d = symbol_.d;
        return std::pow(4.0 * M_PI * t, -d / 2.0) * std::exp(-x * x / (4.0 * t));
    }
    // alpha = 1, d = 1: Cauchy with scale t.
    return t / (M_PI * (t * t + x * x));
}

KernelHandle::XiTable KernelHandle::build_table(double t) const {
    const double a = symbol_.alpha;
    XiTable tab;
    tab.t = t;

    // Truncation radius: integrand below ~1e-12 past R.
    double R = std::pow(fopt_.tail_log / t, 1.0 / a);

    // Period P = 2pi/h so that the periodization error
    //   sum_{m != 0} p(t, x + mP),  |x| <= x_max,
    // stays below alias_tol, using p(t,y) <= c t |y|^{-1-alpha}.
    double P = 2.0 * fopt_.x_max + 10.0;
    for (;;) {
        double b = P - fopt_.x_max;
        double bound = 2.0 * density_tail_const * t *
                       (std::pow(b, -1.0 - a) + std::pow(b, -a) / (a * P));
        if (bound <= fopt_.alias_tol) break;
        P *= 1.25;
        if (P > 1e9)
            throw NumericalError("kernel: cannot satisfy aliasing tolerance");
    }

    tab.step = 2.0 * M_PI / P;
    std::size_t n = static_cast<std::size_t>(std::ceil(R / tab.step));
    tab.weights.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        double xi = static_cast<double>(j) * tab.step;
        tab.weights[j] = std::exp(-t * std::pow(xi, a));
    }
    return tab;
}

std::shared_ptr<const KernelHandle::XiTable> KernelHandle::table_for(double t) const {
    const std::uint64_t key = double_key(t);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const XiTable>(build_table(t));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, built);
    if (inserted) {
        cache_order_.push_front(key);
        if (cache_order_.size() > fopt_.cache_capacity) {
            cache_.erase(cache_order_.back());
            cache_order_.pop_back();
        }
    }
    return it->second;
}

double KernelHandle::density_fourier(double t, double x) const {
    x = std::abs(x);
    if (x > fopt_.x_max)
        throw ValidationError("kernel: |x| = " + std::to_string(x) +
                              " outside cached range [0, " + std::to_string(fopt_.x_max) + "]");
    auto tab = table_for(t);
    const std::vector<double>& w = tab->weights;
    const double theta = tab->step * x;
    // p = (h/pi) * (w0/2 + sum_j w_j cos(j theta)); cos by Chebyshev recurrence.
    const double twoc = 2.0 * std::cos(theta);
    double cm1 = 1.0;            // cos(0)
    double c = std::cos(theta);  // cos(theta)
    double acc = 0.5 * w[0];
    for (std::size_t j = 1; j < w.size(); ++j) {
        acc += w[j] * c;
        double cn = twoc * c - cm1;
        cm1 = c;
        c = cn;
    }
    double v = tab->step / M_PI * acc;
    // Oscillatory cancellation can leave a value a hair below zero where the
    // true density is smaller than the aliasing budget.
    return v < 0.0 ? 0.0 : v;
}

double kernel_scaling_residual(const KernelHandle& k, double s, double t, double x) {
    if (!(s > 0.0) || !(t > 0.0))
        throw ValidationError("kernel_scaling_residual: requires s > 0 and t > 0");
    double d = k.symbol().d;
    double a = k.symbol().alpha;
    double lhs = k.density(s * t, x);
    double rhs = std::pow(t, -d / a) * k.density(s, std::pow(t, -1.0 / a) * x);
    return std::abs(lhs - rhs);
}

double chapman_kolmogorov_residual(const KernelHandle& k, double t, double s) {
    if (!(t > 0.0) || !(s > 0.0))
        throw ValidationError("chapman_kolmogorov_residual: requires t, s > 0");
    if (k.symbol().d != 1)
        throw ValidationError("chapman_kolmogorov_residual: implemented for d = 1");
    const double a = k.symbol().alpha;
    // Integration window: the product p(t,x)p(s,x) decays like |x|^{-2(1+a)},
    // so a moderate window already leaves a sub-1e-9 tail.
    double spread = std::pow(std::max(t, s), 1.0 / a);
    double X = std::min(40.0 * std::max(1.0, spread), k.method() == KernelMethod::fourier_table
                                                          ? k.fourier_options().x_max
                                                          : 1e12);
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    auto f = [&](double x) { return k.density(t, x) * k.density(s, x); };
    double integral_value = 2.0 * integrate(f, 0.0, X, opt);
    return std::abs(integral_value - k.density(t + s, 0.0));
}

double kernel_normalization_residual(const KernelHandle& k, double t) {
    if (!(t > 0.0)) throw ValidationError("kernel_normalization_residual: requires t > 0");
    if (k.symbol().d != 1)
        throw ValidationError("kernel_normalization_residual: implemented for d = 1");
    const double a = k.symbol().alpha;
    double X, tail;
    if (a == 2.0) {
        X = 14.0 * std::sqrt(2.0 * t);
        tail = std::erfc(X / (2.0 * std::sqrt(t))); // two-sided
    } else if (a == 1.0) {
        X = 1e7 * t;
        tail = 2.0 / M_PI * std::atan(t / X);
    } else {
        X = std::min(40.0 * std::max(1.0, std::pow(t, 1.0 / a)), k.fourier_options().x_max);
        tail = 2.0 * stable_tail_integral(a, t, X);
    }
    QuadratureOptions opt;
    opt.rel_tol = 1e-9;
    auto f = [&](double x) { return k.density(t, x); };
    double integral_value = 2.0 * integrate(f, 0.0, X, opt);
    return std::abs(integral_value + tail - 1.0);
}

bool product_lower_bound_check(const KernelHandle& k, double t, double x, double y, double a,
                               double slack) {
    if (!(a >= 2.0)) throw ValidationError("product_lower_bound_check: requires a >= 2");
    if (k.density(t, 0.0) > 1.0)
        throw ValidationError("product_lower_bound_check: requires p(t,0) <= 1");
    double lhs = k.density(t, (x - y) / a);
    double rhs = k.density(t, x) * k.density(t, y);
    return lhs >= rhs - slack;
}

EnvelopeConstant envelope_fit(const KernelHandle& k, const std::vector<double>& ts,
                              const std::vector<double>& xs) {
    if (ts.empty() || xs.empty())
        throw ValidationError("envelope_fit: grid must be nonempty");
    const double d = k.symbol().d;
    const double a = k.symbol().alpha;
    double c = 1.0;
    for (double t : ts) {
        if (!(t > 0.0)) throw ValidationError("envelope_fit: grid times must be positive");
        for (double x : xs) {
            double p = k.density(t, std::abs(x));
            if (!(p > 0.0))
                throw NumericalError("envelope_fit: nonpositive kernel value at t = " +
                                     std::to_string(t) + ", x = " + std::to_string(x));
            double g = std::pow(t, -d / a);
            if (x != 0.0) g = std::min(g, t / std::pow(std::abs(x), d + a));
            double r = p / g;
            c = std::max({c, r, 1.0 / r});
        }
    }
    EnvelopeConstant out;
    out.c = c;
    out.fit_domain = "t in [" + format_short(ts.front()) + ", " + format_short(ts.back()) +
                     "] x |x| in [" + format_short(std::abs(xs.front())) + ", " +
                     format_short(std::abs(xs.back())) + "], " + std::to_string(ts.size()) +
                     "x" + std::to_string(xs.size()) + " points";
    return out;
}

void standard_envelope_grid(std::vector<double>& ts, std::vector<double>& xs, int refine) {
    int nt = 40 * refine, nx = 40 * refine;
    ts.resize(nt);
    xs.resize(nx);
    double lo = std::log10(0.01), hi = std::log10(10.0);
    for (int i = 0; i < nt; ++i)
        ts[i] = std::pow(10.0, lo + (hi - lo) * i / (nt - 1));
    for (int i = 0; i < nx; ++i)
        xs[i] = 10.0 * i / (nx - 1);
}

} // namespace levyheat
