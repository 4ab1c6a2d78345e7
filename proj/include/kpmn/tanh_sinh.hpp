#ifndef KPMN_TANH_SINH_HPP
#define KPMN_TANH_SINH_HPP

#include <cmath>
#include <cstdlib>
#include <limits>

namespace kpmn {

// Double-exponential (tanh-sinh) quadrature over [a,b] for integrands with
// algebraic endpoint singularities.  The integrand is called as
// f(x, da, db) where da = x-a and db = b-x are computed without
// cancellation, so integrands like (x-a)^(-1/2) can be evaluated accurately
// arbitrarily close to the endpoints.
//
// Non-finite integrand samples are treated as zero: they only arise inside
// the vanishing-weight tail of the transformation when the integral itself
// converges, and divergence detection is handled separately by callers.
template <typename F>
double tanh_sinh(F&& f, double a, double b, double rel_tol = 1.0e-12,
                 int max_level = 12) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    constexpr double pi_half = 1.57079632679489661923;
    const double tmax = 6.7; // tanh((pi/2) sinh 6.7) is 1 within double precision

    const auto sample = [&](double t) -> double {
        const double u = pi_half * std::sinh(t);
        const double ch = std::cosh(u);
        const double w = pi_half * std::cosh(t) / (ch * ch);
        // 1 - tanh(u) = 2 e^{-2u}/(1+e^{-2u}) keeps endpoint distances exact.
        const double e2 = std::exp(-2.0 * std::abs(u));
        const double dist = half * (2.0 * e2 / (1.0 + e2)); // to the near endpoint
        const double x = mid + (t >= 0.0 ? half - dist : dist - half);
        const double da = (t >= 0.0) ? (b - a) - dist : dist;
        const double db = (t >= 0.0) ? dist : (b - a) - dist;
        if (dist <= 0.0 || w <= 0.0) return 0.0;
        const double v = f(x, da, db);
        if (!std::isfinite(v)) return 0.0;
        return w * v;
    };

    double h = 1.0;
    double sum = sample(0.0);
    for (double t = h; t <= tmax; t += h) {
        sum += sample(t) + sample(-t);
    }
    double integral = half * h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) {
            add += sample(t) + sample(-t);
        }
        sum += add;
        const double next = half * h * sum;
        const double err = std::abs(next - integral);
        integral = next;
        if (level >= 3 && err <= rel_tol * std::max(std::abs(integral),
                                                    std::numeric_limits<double>::min()))
            break;
    }
    return integral;
}

// Convenience overload for integrands that do not need endpoint distances.
template <typename F>
double tanh_sinh_plain(F&& f, double a, double b, double rel_tol = 1.0e-12,
                       int max_level = 12) {
    return tanh_sinh([&](double x, double, double) { return f(x); }, a, b,
                     rel_tol, max_level);
}

} // namespace kpmn

#endif
