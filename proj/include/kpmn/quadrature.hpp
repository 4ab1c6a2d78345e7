#ifndef KPMN_QUADRATURE_HPP
#define KPMN_QUADRATURE_HPP

#include <vector>

#include "kpmn/parallel.hpp"
#include "kpmn/params.hpp"
#include "kpmn/rational.hpp"

namespace kpmn {

// Potential of the first-integral quadrature in V = U^n variables,
//   Phi(V) = E + C V + B V^(1+1/n) - A V^(1+m/n),
// with V'^2 = Phi(V) along travelling waves.
struct PotentialSpec {
    ReducedConstants rc;
    Rational m;
    Rational n;
};

// Numeric half-profile on [0, L]: strictly increasing xi grid with
// V(0)=Vmax, V(L)=0 and V strictly decreasing in between.  Extension to
// [-L, 0] is by even reflection about the peak.
struct NumericProfile {
    std::vector<double> xi;
    std::vector<double> V;
    std::vector<double> U;
    double L = 0.0;

    // Monotone cubic (Fritsch-Carlson) interpolation of U; even in xi and
    // exactly zero outside [-L, L].
    double value_at(double x) const;
    double v_at(double x) const;
};

double potential(const PotentialSpec& spec, double V);

// Leading exponent of Phi as V -> 0+ (smallest exponent with a nonzero
// coefficient) together with that coefficient.
struct LeadingTerm {
    double exponent;
    double coefficient;
};
LeadingTerm leading_term(const PotentialSpec& spec);

// Extremum location V* = (B/(mA))^(n/(m-1)) of C - A V^(m/n) + B V^(1/n),
// defined only when sgn(B) = sgn(A) != 0 and m != 1; returns <=0 otherwise.
double vstar(const PotentialSpec& spec);

// Smallest positive root of Phi with Phi > 0 on (0, Vmax), refined to
// ~1e-12 relative.
double find_vmax(const PotentialSpec& spec);

struct HalfWidthResult {
    double L;
    double vmax;
    // Set when the quadrature converged but the case analysis says the
    // profile is not a solution (pn = 1, case E != 0).
    bool not_a_solution_warning;
};

// L = integral_0^Vmax dV / sqrt(Phi), tanh-sinh with a panel split at V*
// when the extremum lies inside (0, Vmax).
HalfWidthResult half_width(const PotentialSpec& spec);

// Inverts the quadrature on a Chebyshev-clustered grid of [0, L]:
// solves integral_0^V dW/sqrt(Phi) = L - xi per grid point.
NumericProfile invert_profile(const PotentialSpec& spec, int samples,
                              Execution exec = Execution::parallel);

// Solitary/heavy-tail quadrature of U'^2 = B U^(3-n) - A U^(2+m-n):
// profile from the turning point outward on a uniform grid of [0, xi_max].
NumericProfile solitary_profile(double Acoef, double Bcoef, const Rational& m,
                                const Rational& n, double xi_max, int samples,
                                Execution exec = Execution::parallel);

} // namespace kpmn

#endif
