#include "kpmn/params.hpp"

#include <cmath>

namespace kpmn {

EquationParams make_equation(double a, double b, int s, const Rational& m,
                             const Rational& n, int N) {
    if (a == 0.0) throw ZeroCoefficient("make_equation: a must be nonzero");
    if (b == 0.0) throw ZeroCoefficient("make_equation: b must be nonzero");
    if (s != -1 && s != 0 && s != 1)
        throw DomainError("make_equation: s must be -1, 0 or +1");
    if (!m.positive()) throw NonPositivePower("make_equation: m must be positive");
    if (!n.positive()) throw NonPositivePower("make_equation: n must be positive");
    if (N < 1) throw DimensionMismatch("make_equation: N must be >= 1");
    if (s == 0 && N > 1)
        throw DimensionMismatch("make_equation: s=0 is the N=1 reduction only");
    return EquationParams{a, b, s, m, n, N};
}

void check_wave(const EquationParams& eq, const WaveParams& w) {
    if (static_cast<int>(w.mu.size()) != eq.N - 1)
        throw DimensionMismatch("wave parameters: mu must have length N-1");
}

double kappa_of(const EquationParams& eq, const WaveParams& w) {
    check_wave(eq, w);
    return w.nu - eq.s * w.mu_norm2();
}

Kinematics kinematics(const EquationParams& eq, const WaveParams& w) {
    check_wave(eq, w);
    Kinematics k;
    const double mu2 = w.mu_norm2();
    k.kappa = w.nu - eq.s * mu2;
    k.speed = w.nu / std::sqrt(1.0 + mu2);
    k.theta = std::atan(std::sqrt(mu2));
    if (eq.N == 3) k.phi = std::atan2(w.mu[1], w.mu[0]);
    return k;
}

ReducedConstants reduced_constants_kappa(const EquationParams& eq, double kappa,
                                         double C2, double C3) {
    const double n = eq.n.value();
    const double m = eq.m.value();
    ReducedConstants rc;
    rc.E = 2.0 * C3 / eq.b;
    rc.C = 2.0 * C2 / eq.b;
    rc.B = 2.0 * n * kappa / ((n + 1.0) * eq.b);
    rc.A = 2.0 * n * eq.a / ((m + n) * eq.b);
    rc.C1 = 0.0;
    rc.C2 = C2;
    rc.C3 = C3;
    return rc;
}

ReducedConstants reduced_constants(const EquationParams& eq, const WaveParams& w,
                                   double C2, double C3) {
    return reduced_constants_kappa(eq, kappa_of(eq, w), C2, C3);
}

} // namespace kpmn
