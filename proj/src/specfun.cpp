#include "kpmn/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kpmn {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();
} // namespace

double elliptic_K(double k) {
    if (k < 0.0 || k >= 1.0)
        throw DomainError("elliptic_K: modulus must satisfy 0 <= k < 1");
    if (k == 0.0) return kPi / 2.0;
    // kc computed as sqrt((1-k)(1+k)) to keep precision for k near 1.
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 64 && std::abs(a - b) > kEps * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (2.0 * a);
}

JacobiTriple jacobi_elliptic(double u, double k) {
    if (k < 0.0 || k >= 1.0)
        throw DomainError("jacobi_elliptic: modulus must satisfy 0 <= k < 1");

    const double m = k * k;

    if (m < 1.0e-18) return {std::sin(u), std::cos(u), 1.0};

    if (m < 1.0e-9) {
        // A&S 16.13 small-parameter expansion.
        const double t = std::sin(u);
        const double c = std::cos(u);
        const double ai = 0.25 * m * (u - t * c);
        return {t - ai * c, c + ai * t, 1.0 - 0.5 * m * t * t};
    }

    if (m > 1.0 - 1.0e-12) {
        // A&S 16.15 near the hyperbolic limit.
        const double ai = 0.25 * (1.0 - m);
        const double b = std::cosh(u);
        const double t = std::tanh(u);
        const double phi = 1.0 / b;
        const double twon = b * std::sinh(u);
        const double sn = t + ai * (twon - u) / (b * b);
        const double cn = phi - ai * t * phi * (twon - u);
        const double dn = phi + ai * t * phi * (twon + u);
        return {sn, cn, dn};
    }

    // AGM scale.
    constexpr int kMax = 24;
    double a[kMax + 1], c[kMax + 1];
    a[0] = 1.0;
    c[0] = k;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double twon = 1.0;
    int i = 0;
    while (std::abs(c[i]) > kEps * a[i] && i < kMax) {
        const double ai = a[i];
        ++i;
        c[i] = 0.5 * (ai - b);
        const double t = std::sqrt(ai * b);
        a[i] = 0.5 * (ai + b);
        b = t;
        twon *= 2.0;
    }

    // Backward phase recurrence.
    double phi = twon * a[i] * u;
    double phi_prev = phi;
    while (i > 0) {
        const double t = std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0);
        phi_prev = phi;
        phi = 0.5 * (std::asin(t) + phi);
        --i;
    }

    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = cn / std::cos(phi - phi_prev);
    return {sn, cn, dn};
}

double jacobi_sn(double u, double k) { return jacobi_elliptic(u, k).sn; }
double jacobi_cn(double u, double k) { return jacobi_elliptic(u, k).cn; }
double jacobi_dn(double u, double k) { return jacobi_elliptic(u, k).dn; }

double jacobi_sn_imag(double u, double k) {
    if (!(k > 0.0)) throw DomainError("jacobi_sn_imag: k must be positive");
    const double root = std::sqrt(1.0 + k * k);
    const double k1 = k / root;
    const JacobiTriple j = jacobi_elliptic(u * root, k1);
    return j.sn / (j.dn * root);
}

double elliptic_K_imag(double k) {
    if (!(k > 0.0)) throw DomainError("elliptic_K_imag: k must be positive");
    const double root = std::sqrt(1.0 + k * k);
    return elliptic_K(k / root) / root;
}

double signed_pow(double x, const Rational& r) {
    if (x > 0.0) return std::pow(x, r.value());
    if (x == 0.0) {
        if (r.positive()) return 0.0;
        throw DomainError("signed_pow: 0 raised to a non-positive power");
    }
    if (r.denominator_even())
        throw ParityError("signed_pow: negative base with even-denominator exponent " + r.str());
    const double mag = std::pow(-x, r.value());
    return r.numerator_even() ? mag : -mag;
}

std::vector<double> tan_fixed_points(int count) {
    if (count < 1) throw DomainError("tan_fixed_points: count must be >= 1");
    std::vector<double> roots;
    roots.reserve(count);
    // f(z) = sin z - z cos z is entire and changes sign once per bracket
    // (j*pi, (2j+1)*pi/2).
    const auto f = [](double z) { return std::sin(z) - z * std::cos(z); };
    for (int j = 1; j <= count; ++j) {
        double lo = j * kPi;
        double hi = (2.0 * j + 1.0) * kPi / 2.0;
        double flo = f(lo);
        for (int it = 0; it < 200 && (hi - lo) > 1.0e-15 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((flo <= 0.0) == (fm <= 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        double z = 0.5 * (lo + hi);
        // Newton polish on f.
        for (int it = 0; it < 4; ++it) {
            const double fp = z * std::sin(z); // f'(z)
            if (fp == 0.0) break;
            z -= f(z) / fp;
        }
        roots.push_back(z);
    }
    return roots;
}

} // namespace kpmn
