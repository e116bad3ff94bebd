#pragma once

#include "levyheat/symbol.hpp"

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace levyheat {

enum class KernelMethod {
    closed_form,   ///< alpha = 2 (any d) or alpha = 1 (d = 1)
    fourier_table, ///< trapezoid inversion of exp(-t|xi|^alpha), d = 1
};

/// Tuning for the Fourier-inversion path.
struct FourierOptions {
    /// Evaluation is accurate (and permitted) only for |x| <= x_max; the
    /// cached node tables are sized for this range and queries beyond it are
    /// rejected.
    double x_max = 50.0;
    /// Budget for the periodization (aliasing) error of the trapezoid rule.
    double alias_tol = 1e-8;
    /// xi-grid truncation: cut where t * R^alpha reaches this exponent, which
    /// puts the tail integrand below 1e-12 with a wide margin.
    double tail_log = 27.0;
    /// Number of per-t node tables kept alive (LRU). Eviction never changes
    /// computed values, only their cost.
    std::size_t cache_capacity = 64;
};

/// Transition density p(t, x) of the symmetric alpha-stable process with
/// characteristic function exp(-t |xi|^alpha).
///
/// Immutable after construction and shareable across threads; the node-table
/// cache behind the Fourier path is internally synchronized.
class KernelHandle {
public:
    static KernelHandle make(const LevySymbolSpec& symbol, FourierOptions options = {});

    const LevySymbolSpec& symbol() const { return symbol_; }
    KernelMethod method() const { return method_; }
    const FourierOptions& fourier_options() const { return fopt_; }

    /// p(t, x) for d = 1; for d >= 2 pass the radius as x (radial evaluation).
    /// Rejects t <= 0 and, on the Fourier path, |x| > x_max.
    double density(double t, double x) const;

    /// exp(-t |xi|^alpha), the characteristic function at xi.
    double cf(double t, double xi) const;

private:
    struct XiTable {
        double t = 0.0;
        double step = 0.0;              // xi spacing h (period 2*pi/h)
        std::vector<double> weights;    // exp(-t (j*h)^alpha), j = 0..n
    };

    double density_closed(double t, double x) const;
    double density_fourier(double t, double x) const;
    std::shared_ptr<const XiTable> table_for(double t) const;
    XiTable build_table(double t) const;

    LevySymbolSpec symbol_;
    KernelMethod method_ = KernelMethod::closed_form;
    FourierOptions fopt_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::uint64_t, std::shared_ptr<const XiTable>> cache_;
    mutable std::list<std::uint64_t> cache_order_; // front = most recent
};

/// |p(s*t, x) - t^(-d/alpha) p(s, t^(-1/alpha) x)|, the self-similarity defect.
double kernel_scaling_residual(const KernelHandle& k, double s, double t, double x);

/// |integral p(t,x) p(s,x) dx - p(t+s, 0)|, semigroup defect (d = 1).
double chapman_kolmogorov_residual(const KernelHandle& k, double t, double s);

/// |integral p(t,x) dx - 1| over the line (d = 1). The far tail beyond the
/// quadrature window is added analytically (closed form for alpha in {1,2},
/// three-term large-|x| series otherwise).
double kernel_normalization_residual(const KernelHandle& k, double t);

/// Checks p(t, (x-y)/a) >= p(t,x) p(t,y) - slack. Requires a >= 2 and
/// p(t,0) <= 1; violating either precondition throws.
bool product_lower_bound_check(const KernelHandle& k, double t, double x, double y, double a,
                               double slack = 1e-12);

/// Two-sided comparability constant against g(t,x) = t^(-d/alpha) /\ t/|x|^(d+alpha).
struct EnvelopeConstant {
    double c = 1.0;          ///< minimal c >= 1 with g/c <= p <= c*g on the grid
    std::string fit_domain;  ///< human-readable description of the grid
};

/// Fits the envelope constant over the product grid ts x xs (all t > 0).
/// Aborts if any kernel value on the grid is not strictly positive.
EnvelopeConstant envelope_fit(const KernelHandle& k, const std::vector<double>& ts,
                              const std::vector<double>& xs);

/// Log-spaced t in [0.01, 10] (40 pts) x linear |x| in [0, 10] (40 pts),
/// optionally refined by an integer factor.
void standard_envelope_grid(std::vector<double>& ts, std::vector<double>& xs, int refine = 1);

} // namespace levyheat
