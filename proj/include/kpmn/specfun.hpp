#ifndef KPMN_SPECFUN_HPP
#define KPMN_SPECFUN_HPP

#include <vector>

#include "kpmn/rational.hpp"

namespace kpmn {

// Complete elliptic integral of the first kind, modulus convention:
//   K(k) = integral_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t),
// computed by arithmetic-geometric-mean iteration.  0 <= k < 1.
double elliptic_K(double k);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

// Jacobi elliptic functions of real modulus k in [0,1), AGM descending
// Landen recursion (Cephes-style phase recurrence).
JacobiTriple jacobi_elliptic(double u, double k);

double jacobi_sn(double u, double k);
double jacobi_cn(double u, double k);
double jacobi_dn(double u, double k);

// sn(u, i k) for k>0 through the imaginary-modulus transformation
//   sn(u, ik) = sd(u sqrt(1+k^2), k1) / sqrt(1+k^2),  k1 = k/sqrt(1+k^2),
// real-valued and odd in u.
double jacobi_sn_imag(double u, double k);

// Quarter period of sn(., ik): first positive zero is twice this value.
double elliptic_K_imag(double k);

// x^r with exact parity rules for negative bases: defined for x<0 only when
// the (lowest-terms) denominator of r is odd, in which case the sign is
// sign(x)^num(r).  x=0 requires r>0.
double signed_pow(double x, const Rational& r);

// First `count` positive solutions of z = tan(z), each solved to ~1e-13
// from the bracket (j*pi, (2j+1)*pi/2).
std::vector<double> tan_fixed_points(int count);

} // namespace kpmn

#endif
