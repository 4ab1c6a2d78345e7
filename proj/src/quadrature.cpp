#include "kpmn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kpmn/specfun.hpp"
#include "kpmn/tanh_sinh.hpp"

namespace kpmn {

namespace {
constexpr double kPi = 3.14159265358979323846;

double pow_pos(double v, double e) { return std::pow(v, e); }

double falling(double e, int k) {
    double f = 1.0;
    for (int j = 0; j < k; ++j) f *= (e - j);
    return f;
}

// k-th derivative of Phi (k >= 1).
double phi_derivative_k(const PotentialSpec& spec, double V, int k) {
    const double n = spec.n.value(), m = spec.m.value();
    const double e1 = 1.0 + 1.0 / n, e2 = 1.0 + m / n;
    double d = (k == 1) ? spec.rc.C : 0.0;
    if (V > 0.0) {
        d += spec.rc.B * falling(e1, k) * pow_pos(V, e1 - k);
        d -= spec.rc.A * falling(e2, k) * pow_pos(V, e2 - k);
    }
    return d;
}

double phi_derivative(const PotentialSpec& spec, double V) {
    return phi_derivative_k(spec, V, 1);
}

// int_{V_lo}^{vmax} dV/sqrt(Phi) with the turning point resolved by the
// substitution V = vmax - w^2, which makes the integrand analytic at w=0.
// vmax must be a simple root of Phi.  Near the root, Phi(vmax - w^2) is
// evaluated by its Taylor form in w^2 to dodge the cancellation between
// the power terms (direct evaluation there is only O(sqrt(eps)) accurate).
double arc_to_vmax(const PotentialSpec& spec, double V_lo, double vmax) {
    if (!(vmax > V_lo)) return 0.0;
    const double d1 = phi_derivative_k(spec, vmax, 1);
    const double d2 = phi_derivative_k(spec, vmax, 2);
    const double d3 = phi_derivative_k(spec, vmax, 3);
    const double d4 = phi_derivative_k(spec, vmax, 4);
    const double w2_switch = 3.0e-4 * vmax;
    const double w_hi = std::sqrt(vmax - V_lo);
    const auto f = [&](double w) {
        const double w2 = w * w;
        double phi;
        if (w2 <= w2_switch) {
            phi = w2 * (-d1 + w2 * (0.5 * d2 + w2 * (-d3 / 6.0 + w2 * d4 / 24.0)));
        } else {
            const double V = vmax - w2;
            phi = (V <= 0.0) ? spec.rc.E : potential(spec, V);
        }
        if (phi <= 0.0) return (d1 < 0.0) ? 2.0 / std::sqrt(-d1) : 0.0;
        return 2.0 * w / std::sqrt(phi);
    };
    return tanh_sinh_plain(f, 0.0, w_hi, 1.0e-13, 12);
}

// int_0^{V_hi} dV/sqrt(Phi) with the V->0 algebraic singularity removed by
// V = s^(2/(2-e)), e the leading exponent of Phi at 0 (requires e < 2).
double arc_from_zero(const PotentialSpec& spec, double V_hi) {
    if (!(V_hi > 0.0)) return 0.0;
    const LeadingTerm lead = leading_term(spec);
    const double e = lead.exponent;
    const double ks = 2.0 / (2.0 - e);
    const double s_hi = pow_pos(V_hi, 1.0 / ks);
    const auto f = [&](double, double da, double) {
        const double s = da;
        const double V = pow_pos(s, ks);
        if (V <= 0.0) {
            return (lead.coefficient > 0.0) ? ks / std::sqrt(lead.coefficient) : 0.0;
        }
        const double phi = potential(spec, V);
        if (phi <= 0.0) return 0.0;
        const double val = ks * pow_pos(s, ks - 1.0) / std::sqrt(phi);
        return std::isfinite(val) ? val : 0.0;
    };
    return tanh_sinh(f, 0.0, s_hi, 1.0e-13, 12);
}
} // namespace

double potential(const PotentialSpec& spec, double V) {
    if (V < 0.0) throw DomainError("potential: V must be nonnegative");
    const double n = spec.n.value();
    const double m = spec.m.value();
    double phi = spec.rc.E;
    if (V > 0.0) {
        phi += spec.rc.C * V;
        phi += spec.rc.B * pow_pos(V, 1.0 + 1.0 / n);
        phi -= spec.rc.A * pow_pos(V, 1.0 + m / n);
    }
    return phi;
}

LeadingTerm leading_term(const PotentialSpec& spec) {
    const double n = spec.n.value();
    const double m = spec.m.value();
    struct Term {
        double e;
        double c;
    };
    const Term terms[4] = {{0.0, spec.rc.E},
                           {1.0, spec.rc.C},
                           {1.0 + 1.0 / n, spec.rc.B},
                           {1.0 + m / n, -spec.rc.A}};
    LeadingTerm lead{std::numeric_limits<double>::infinity(), 0.0};
    for (const Term& t : terms) {
        if (t.c == 0.0) continue;
        if (t.e < lead.exponent) {
            lead = {t.e, t.c};
        } else if (t.e == lead.exponent) {
            lead.coefficient += t.c;
        }
    }
    return lead;
}

double vstar(const PotentialSpec& spec) {
    const double A = spec.rc.A, B = spec.rc.B;
    const double m = spec.m.value(), n = spec.n.value();
    if (A == 0.0 || B == 0.0 || m == 1.0) return -1.0;
    const double ratio = B / (m * A);
    if (ratio <= 0.0) return -1.0;
    return std::pow(ratio, n / (m - 1.0));
}

double find_vmax(const PotentialSpec& spec) {
    if (spec.rc.A == 0.0) throw DegenerateError("find_vmax: A must be nonzero");

    const LeadingTerm lead = leading_term(spec);
    if (!std::isfinite(lead.exponent) || lead.coefficient <= 0.0)
        throw NoRoot("find_vmax: potential not positive near V=0");

    // Characteristic scales suggested by pairwise coefficient balances.
    std::vector<double> scales{1.0};
    const double vs = vstar(spec);
    if (vs > 0.0) scales.push_back(vs);
    const double n = spec.n.value(), m = spec.m.value();
    if (spec.rc.B != 0.0 && m != 1.0) {
        const double r = spec.rc.B / spec.rc.A;
        if (r > 0.0) scales.push_back(std::pow(r, n / (m - 1.0)));
    }
    if (spec.rc.C != 0.0) {
        const double r = spec.rc.C / std::abs(spec.rc.A);
        if (r > 0.0 && m != 0.0) scales.push_back(std::pow(r, n / m));
    }
    double scale = 0.0;
    for (double s : scales) scale = std::max(scale, s);

    // Geometric scan for the first sign change above V=0.
    const double v_lo_start = scale * 1.0e-14;
    const double v_hi_limit = scale * 1.0e14;
    double prev = v_lo_start;
    double prev_phi = potential(spec, prev);
    if (prev_phi <= 0.0) throw NoRoot("find_vmax: potential not positive near V=0");

    const double ratio = std::pow(v_hi_limit / v_lo_start, 1.0 / 4096.0);
    double lo = -1.0, hi = -1.0;
    for (double v = prev * ratio; v <= v_hi_limit; v *= ratio) {
        const double phi = potential(spec, v);
        if (phi <= 0.0) {
            lo = prev;
            hi = v;
            break;
        }
        prev = v;
        prev_phi = phi;
    }
    if (lo < 0.0) throw NoRoot("find_vmax: no positive root up to overflow guard");

    for (int it = 0; it < 200 && (hi - lo) > 1.0e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (potential(spec, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double root = 0.5 * (lo + hi);
    // Newton polish so the turning-point substitution sees a sharp root.
    for (int it = 0; it < 4; ++it) {
        const double d = phi_derivative(spec, root);
        if (d == 0.0) break;
        const double next = root - potential(spec, root) / d;
        if (next > 0.0 && std::isfinite(next)) root = next;
    }
    return root;
}

HalfWidthResult half_width(const PotentialSpec& spec) {
    const LeadingTerm lead = leading_term(spec);
    if (lead.exponent >= 2.0)
        throw DivergentIntegral("half_width: V=0 endpoint non-integrable (leading exponent " +
                                std::to_string(lead.exponent) + ")");
    const double vmax = find_vmax(spec);
    const double vs = vstar(spec);
    const double mid = (vs > 0.0 && vs < vmax) ? vs : 0.5 * vmax;
    const double L = arc_from_zero(spec, mid) + arc_to_vmax(spec, mid, vmax);
    HalfWidthResult out;
    out.L = L;
    out.vmax = vmax;
    out.not_a_solution_warning = (spec.rc.E != 0.0);
    return out;
}

double NumericProfile::v_at(double x) const {
    const double ax = std::abs(x);
    if (ax >= L) return 0.0;
    const std::size_t nn = xi.size();
    // Locate the bracketing interval.
    auto it = std::upper_bound(xi.begin(), xi.end(), ax);
    std::size_t i = (it == xi.begin()) ? 0 : static_cast<std::size_t>(it - xi.begin()) - 1;
    if (i >= nn - 1) i = nn - 2;

    // Fritsch-Carlson slopes on the local stencil.
    const auto slope = [&](std::size_t j) -> double {
        const auto sec = [&](std::size_t k) {
            return (V[k + 1] - V[k]) / (xi[k + 1] - xi[k]);
        };
        if (j == 0) return sec(0);
        if (j == nn - 1) return sec(nn - 2);
        const double d0 = sec(j - 1), d1 = sec(j);
        if (d0 * d1 <= 0.0) return 0.0;
        const double h0 = xi[j] - xi[j - 1], h1 = xi[j + 1] - xi[j];
        const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
        return (w1 + w2) / (w1 / d0 + w2 / d1);
    };

    const double h = xi[i + 1] - xi[i];
    const double t = (ax - xi[i]) / h;
    const double m0 = slope(i) * h, m1 = slope(i + 1) * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * V[i] + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * V[i + 1] + (t3 - t2) * m1;
}

double NumericProfile::value_at(double x) const {
    const double ax = std::abs(x);
    if (ax >= L) return 0.0;
    const std::size_t nn = xi.size();
    auto it = std::upper_bound(xi.begin(), xi.end(), ax);
    std::size_t i = (it == xi.begin()) ? 0 : static_cast<std::size_t>(it - xi.begin()) - 1;
    if (i >= nn - 1) i = nn - 2;
    const auto slope = [&](std::size_t j) -> double {
        const auto sec = [&](std::size_t k) {
            return (U[k + 1] - U[k]) / (xi[k + 1] - xi[k]);
        };
        if (j == 0) return sec(0);
        if (j == nn - 1) return sec(nn - 2);
        const double d0 = sec(j - 1), d1 = sec(j);
        if (d0 * d1 <= 0.0) return 0.0;
        const double h0 = xi[j] - xi[j - 1], h1 = xi[j + 1] - xi[j];
        const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
        return (w1 + w2) / (w1 / d0 + w2 / d1);
    };
    const double h = xi[i + 1] - xi[i];
    const double t = (ax - xi[i]) / h;
    const double m0 = slope(i) * h, m1 = slope(i + 1) * h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * U[i] + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * U[i + 1] + (t3 - t2) * m1;
}

namespace {
// Regular interior panel of 1/sqrt(Phi); endpoints strictly inside (0,vmax).
double arc_panel(const PotentialSpec& spec, double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    return tanh_sinh(
        [&](double, double da, double db) {
            const double V = (da < db) ? lo + da : hi - db;
            const double phi = potential(spec, V);
            if (phi <= 0.0) return 0.0;
            return 1.0 / std::sqrt(phi);
        },
        lo, hi, 1.0e-13, 12);
}

// int_V^{vmax} dV/sqrt(Phi): equals xi at the point where V is attained.
double arc_top(const PotentialSpec& spec, double V, double vmax, double vs) {
    const double mid = (vs > V && vs < vmax) ? vs : V;
    if (mid > V) return arc_panel(spec, V, mid) + arc_to_vmax(spec, mid, vmax);
    return arc_to_vmax(spec, V, vmax);
}
} // namespace

NumericProfile invert_profile(const PotentialSpec& spec, int samples, Execution exec) {
    if (samples < 16) throw DomainError("invert_profile: samples must be >= 16");
    const HalfWidthResult hw = half_width(spec);
    const double vmax = hw.vmax;
    const double L = hw.L;
    const double vs = vstar(spec);

    NumericProfile prof;
    prof.L = L;
    prof.xi.resize(samples);
    prof.V.resize(samples);
    prof.U.resize(samples);

    // Chebyshev-Lobatto points mapped to [0, L]; clusters at both ends.
    for (int i = 0; i < samples; ++i)
        prof.xi[i] = 0.5 * L * (1.0 - std::cos(kPi * i / (samples - 1)));
    prof.xi.front() = 0.0;
    prof.xi.back() = L;

    const Rational inv_n = Rational(1) / spec.n;

    parallel_for(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
            if (i == 0) {
                prof.V[0] = vmax;
                prof.U[0] = signed_pow(vmax, inv_n);
                return;
            }
            if (i + 1 == static_cast<std::size_t>(samples)) {
                prof.V[i] = 0.0;
                prof.U[i] = 0.0;
                return;
            }
            // Solve arc_top(V) = xi by bisection; arc_top decreases in V.
            const double target = prof.xi[i];
            double lo = 0.0, hi = vmax;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = arc_top(spec, mid, vmax, vs) - target;
                if (std::abs(fm) < 1.0e-12 * std::max(1.0, L)) {
                    lo = hi = mid;
                    break;
                }
                if (fm > 0.0)
                    lo = mid;
                else
                    hi = mid;
                if ((hi - lo) < 4.0e-16 * vmax) break;
            }
            const double V = 0.5 * (lo + hi);
            prof.V[i] = V;
            prof.U[i] = signed_pow(V, inv_n);
        },
        exec);

    return prof;
}

NumericProfile solitary_profile(double Acoef, double Bcoef, const Rational& m,
                                const Rational& n, double xi_max, int samples,
                                Execution exec) {
    if (samples < 16) throw DomainError("solitary_profile: samples must be >= 16");
    if (Acoef == 0.0 || Bcoef == 0.0 || (Acoef > 0.0) != (Bcoef > 0.0))
        throw NoTurningPoint("solitary_profile: potential needs sgn(A)=sgn(B)!=0");

    const double md = m.value(), nd = n.value();
    const double ustar = (md > 1.0) ? std::pow(Bcoef / Acoef, 1.0 / (md - 1.0))
                                    : std::pow(Acoef / Bcoef, 1.0 / (1.0 - md));

    // Phi_sol(U) = B U^(3-n) - A U^(2+m-n) > 0 on (0, U*).
    const double e1 = 3.0 - nd, e2 = 2.0 + md - nd;
    const auto phi_sol = [&](double U) {
        return Bcoef * std::pow(U, e1) - Acoef * std::pow(U, e2);
    };
    const auto phi_sol_k = [&](double U, int k) {
        return Bcoef * falling(e1, k) * std::pow(U, e1 - k) -
               Acoef * falling(e2, k) * std::pow(U, e2 - k);
    };
    const double d1 = phi_sol_k(ustar, 1);
    const double d2 = phi_sol_k(ustar, 2);
    const double d3 = phi_sol_k(ustar, 3);
    const double d4 = phi_sol_k(ustar, 4);
    const double w2_switch = 3.0e-4 * ustar;

    // xi(U) = integral_U^{U*} dW / sqrt(Phi_sol); the turning point is a
    // simple root, removed by W = U* - w^2 (Taylor form of Phi near it).
    const auto arc = [&](double Ulo) {
        const double w_hi = std::sqrt(std::max(ustar - Ulo, 0.0));
        return tanh_sinh_plain(
            [&](double w) {
                const double w2 = w * w;
                double p;
                if (w2 <= w2_switch) {
                    p = w2 * (-d1 + w2 * (0.5 * d2 + w2 * (-d3 / 6.0 + w2 * d4 / 24.0)));
                } else {
                    const double W = ustar - w2;
                    p = (W <= 0.0) ? 0.0 : phi_sol(W);
                }
                if (p <= 0.0) return (d1 < 0.0) ? 2.0 / std::sqrt(-d1) : 0.0;
                return 2.0 * w / std::sqrt(p);
            },
            0.0, w_hi, 1.0e-13, 12);
    };

    NumericProfile prof;
    prof.L = std::numeric_limits<double>::infinity();
    prof.xi.resize(samples);
    prof.V.resize(samples);
    prof.U.resize(samples);
    for (int i = 0; i < samples; ++i)
        prof.xi[i] = xi_max * static_cast<double>(i) / (samples - 1);

    parallel_for(
        static_cast<std::size_t>(samples),
        [&](std::size_t i) {
            if (i == 0) {
                prof.U[0] = ustar;
                prof.V[0] = signed_pow(ustar, n);
                return;
            }
            const double target = prof.xi[i];
            // F(U) = arc(U) is decreasing from 0 at U*; find U with F = target.
            double hi = ustar, lo = ustar;
            double f_lo = 0.0;
            // Expand downward until the bracket covers the target.
            for (int it = 0; it < 2048; ++it) {
                lo *= 0.5;
                f_lo = arc(lo);
                if (f_lo >= target || lo < 1.0e-300) break;
            }
            if (f_lo < target) {
                // Tail extends beyond double range: the profile is
                // numerically zero here.
                prof.U[i] = 0.0;
                prof.V[i] = 0.0;
                return;
            }
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = arc(mid);
                if (std::abs(fm - target) < 1.0e-12 * std::max(1.0, xi_max)) {
                    lo = hi = mid;
                    break;
                }
                if (fm >= target)
                    lo = mid;
                else
                    hi = mid;
                if ((hi - lo) < 1.0e-15 * ustar) break;
            }
            const double U = 0.5 * (lo + hi);
            prof.U[i] = U;
            prof.V[i] = signed_pow(U, n);
        },
        exec);

    return prof;
}

} // namespace kpmn
