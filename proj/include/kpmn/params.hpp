#ifndef KPMN_PARAMS_HPP
#define KPMN_PARAMS_HPP

#include <optional>
#include <vector>

#include "kpmn/rational.hpp"

namespace kpmn {

// Coefficients and nonlinearity powers of the K_N(m,n) equation
//   (u_t + a(u^m)_x + b(u^n)_xxx)_x + s (Laplacian of u transverse to x) = 0.
// s=0 selects the one-dimensional K(m,n) reduction and is only legal for N=1.
struct EquationParams {
    double a = 0.0;
    double b = 0.0;
    int s = 1;
    Rational m;
    Rational n;
    int N = 2;
};

// Travelling-wave parameters: transverse slopes mu (length N-1) and
// temporal frequency nu; the wave variable is xi = x + mu.y - nu t.
struct WaveParams {
    std::vector<double> mu;
    double nu = 0.0;

    double mu_norm2() const {
        double s2 = 0.0;
        for (double v : mu) s2 += v * v;
        return s2;
    }
};

// Derived kinematic quantities.
struct Kinematics {
    double kappa = 0.0;               // nu - s|mu|^2
    double speed = 0.0;               // nu / sqrt(1+|mu|^2)
    double theta = 0.0;               // arctan(|mu|)
    std::optional<double> phi;        // arctan(mu2/mu1), present only for N=3
};

// Constants of the first-integral quadrature
//   V'^2 = E + C V + B V^(1+1/n) - A V^(1+m/n),  V = U^n,
// together with the integration constants of the reduction chain they came
// from.  C1 is always zero on this branch; C4 is the translation constant
// identified with the half-width L and is not derivable here.
struct ReducedConstants {
    double E = 0.0;
    double C = 0.0;
    double B = 0.0;
    double A = 0.0;
    double C1 = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
    double C4 = 0.0;
};

EquationParams make_equation(double a, double b, int s, const Rational& m,
                             const Rational& n, int N);

double kappa_of(const EquationParams& eq, const WaveParams& w);

Kinematics kinematics(const EquationParams& eq, const WaveParams& w);

ReducedConstants reduced_constants(const EquationParams& eq, const WaveParams& w,
                                   double C2, double C3);

// Same constants from an explicitly supplied kappa (used when the wave
// parameters are not relevant, e.g. direct quadrature experiments).
ReducedConstants reduced_constants_kappa(const EquationParams& eq, double kappa,
                                         double C2, double C3);

void check_wave(const EquationParams& eq, const WaveParams& w);

} // namespace kpmn

#endif
