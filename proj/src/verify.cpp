#include "kpmn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "kpmn/jet.hpp"
#include "kpmn/specfun.hpp"
#include "kpmn/tanh_sinh.hpp"

namespace kpmn {

namespace {

constexpr double kTiny = 1.0e-300;

// Central-difference stencils on 9 points (k=1..4); orders 8,8,6,6.
template <typename F>
double fd_deriv(F&& f, double x, int k, double h) {
    static const double c1[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
    static const double c2[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0,
                                 -1.0 / 560.0};
    static const double c3[4] = {-61.0 / 30.0, 169.0 / 120.0, -3.0 / 10.0, 7.0 / 240.0};
    static const double c4[5] = {91.0 / 8.0, -122.0 / 15.0, 169.0 / 60.0, -2.0 / 5.0,
                                 7.0 / 240.0};
    double s = 0.0;
    switch (k) {
        case 1:
            for (int j = 1; j <= 4; ++j) s += c1[j - 1] * (f(x + j * h) - f(x - j * h));
            return s / h;
        case 2:
            s = c2[0] * f(x);
            for (int j = 1; j <= 4; ++j) s += c2[j] * (f(x + j * h) + f(x - j * h));
            return s / (h * h);
        case 3:
            for (int j = 1; j <= 4; ++j) s += c3[j - 1] * (f(x + j * h) - f(x - j * h));
            return s / (h * h * h);
        case 4:
            s = c4[0] * f(x);
            for (int j = 1; j <= 4; ++j) s += c4[j] * (f(x + j * h) + f(x - j * h));
            return s / (h * h * h * h);
        default:
            throw DomainError("fd_deriv: order out of range");
    }
}

// 4th-order 5-point second derivative (the reduced-ODE residual contract).
template <typename F>
double fd_second_4th(F&& f, double x, double h) {
    return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) -
            f(x + 2 * h)) /
           (12.0 * h * h);
}

// Sum of signed powers c * z^e with exact combination of equal exponents;
// used for the analytic one-sided limits of the boundary terms.
struct PowerSum {
    std::vector<std::pair<double, double>> terms; // (coefficient, exponent)

    void add(double c, double e) {
        if (c == 0.0) return;
        for (auto& [tc, te] : terms) {
            if (std::abs(te - e) <= 1.0e-12 * std::max(1.0, std::abs(e))) {
                tc += c;
                return;
            }
        }
        terms.push_back({c, e});
    }

    // d/dxi of sum c z^e with z = L -+ xi; sign = -1 at +L, +1 at -L.
    PowerSum derivative(double sign) const {
        PowerSum d;
        for (const auto& [c, e] : terms) d.add(sign * c * e, e - 1.0);
        return d;
    }

    SingularLimit limit() const {
        SingularLimit out{0.0, true};
        double coeff_scale = 0.0;
        for (const auto& [c, e] : terms) {
            (void)e;
            coeff_scale = std::max(coeff_scale, std::abs(c));
        }
        // Coefficients that only survive through rounding of an exact
        // cancellation must not be mistaken for divergent terms.
        const double negligible = 1.0e-10 * coeff_scale;
        double min_neg = 0.0;
        double coeff_neg = 0.0;
        for (const auto& [c, e] : terms) {
            if (std::abs(c) <= negligible) continue;
            if (e < -1.0e-12 && e < min_neg) {
                min_neg = e;
                coeff_neg = c;
            }
        }
        if (min_neg < 0.0) {
            out.finite = false;
            out.value = coeff_neg > 0.0 ? std::numeric_limits<double>::infinity()
                                        : -std::numeric_limits<double>::infinity();
            return out;
        }
        for (const auto& [c, e] : terms)
            if (std::abs(e) <= 1.0e-12 && std::abs(c) > negligible) out.value += c;
        return out;
    }
};

double term_scale(const Profile& pr) {
    const double u0 = std::max(std::abs(pr.U0plus), std::abs(pr.U0minus));
    if (u0 == 0.0) return 1.0;
    const double m = pr.eq.m.value(), n = pr.eq.n.value();
    return std::abs(pr.eq.b) * std::pow(u0, n) + std::abs(pr.eq.a) * std::pow(u0, m) +
           std::abs(pr.kappa) * u0 + kTiny;
}

// Limit estimate for samples at zeta_j = zeta_0 rho^j: Aitken
// extrapolation with detection of power-law divergence (|v| ~ zeta^(-r)).
// Sequences below `floor` are treated as zero.
SingularLimit estimate_limit(const std::vector<double>& v, double rho, double floor) {
    SingularLimit out{0.0, true};
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    if (scale <= floor) return out;
    const std::size_t J = v.size();
    if (J >= 5) {
        const bool monotone_up = std::abs(v[J - 1]) > std::abs(v[J - 2]) &&
                                 std::abs(v[J - 2]) > std::abs(v[J - 3]) &&
                                 std::abs(v[J - 3]) > std::abs(v[J - 4]);
        if (monotone_up && std::abs(v[J - 4]) > 0.0) {
            const double r_est =
                std::log(std::abs(v[J - 1] / v[J - 4])) / (3.0 * std::log(1.0 / rho));
            if (r_est > 0.05) {
                out.finite = false;
                out.value = v[J - 1] > 0 ? std::numeric_limits<double>::infinity()
                                         : -std::numeric_limits<double>::infinity();
                return out;
            }
        }
    }
    const double d1 = v[J - 2] - v[J - 3];
    const double d2 = v[J - 1] - v[J - 2];
    const double dd = d2 - d1;
    if (std::abs(dd) > 1.0e-14 * scale) {
        out.value = v[J - 1] - d2 * d2 / dd;
    } else {
        out.value = v[J - 1];
    }
    return out;
}

struct LawTXY {
    double T = 0.0;
    double X = 0.0;
    std::vector<double> Y;
};

} // namespace

std::array<double, 5> TestFunction::derivatives(double xi) const {
    std::array<double, 5> out{};
    const double t0 = (xi - center) / width;
    if (std::abs(t0) >= 1.0) return out;
    const double one_minus = (1.0 - t0) * (1.0 + t0);
    if (one_minus < 1.0e-12) return out; // exp(-1/eps) is zero to double precision

    Jet4 t = Jet4::variable(t0);
    t.c[1] = 1.0 / width; // d t / d xi

    const Jet4 g = exp(-reciprocal(Jet4(1.0) - t * t));
    Jet4 poly(poly_coeffs.empty() ? 1.0 : poly_coeffs[0]);
    if (poly_degree > 0 && poly_coeffs.size() > 1) {
        // Horner evaluation in jet arithmetic.
        Jet4 acc(poly_coeffs[std::min<std::size_t>(poly_coeffs.size() - 1,
                                                   static_cast<std::size_t>(poly_degree))]);
        for (int d = std::min<int>(poly_degree, static_cast<int>(poly_coeffs.size()) - 1) - 1;
             d >= 0; --d)
            acc = acc * t + poly_coeffs[static_cast<std::size_t>(d)];
        poly = acc;
    }
    const Jet4 psi = poly * g;
    for (int j = 0; j < 5; ++j) out[static_cast<std::size_t>(j)] = psi.c[static_cast<std::size_t>(j)];
    return out;
}

std::string cons_law_name(ConsLawId law) {
    switch (law) {
        case ConsLawId::TopologicalCharge: return "TopologicalCharge";
        case ConsLawId::Mass: return "Mass";
        case ConsLawId::WeightedMassCos: return "WeightedMassCos";
        case ConsLawId::WeightedMassSin: return "WeightedMassSin";
    }
    return "?";
}

bool VerificationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

Tolerances Tolerances::scaled(double scale) const {
    Tolerances t = *this;
    t.residual *= scale;
    t.solitary_residual *= scale;
    t.singular *= scale;
    t.weak_form *= scale;
    t.first_integral *= scale;
    t.divergence *= scale;
    t.power_fit *= scale;
    return t;
}

double residual_reduced(const Profile& pr, double C1, double C2, int grid_points,
                        double interior_fraction) {
    if (grid_points < 8) throw DomainError("residual_reduced: too few grid points");
    const double span = pr.compact() ? interior_fraction * pr.L
                                     : 5.0 * pr.scale_length();
    const double h = 1.0e-4 * (pr.compact() ? pr.L : pr.scale_length());
    const double kap = pr.kappa;
    const auto V = [&](double x) { return evaluate_V(pr, x); };

    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double xi = -span + 2.0 * span * i / (grid_points - 1);
        const double u = evaluate(pr, xi);
        const double um = evaluate_power(pr, xi, pr.eq.m);
        const double vpp = fd_second_4th(V, xi, h);
        const double lhs = -kap * u + pr.eq.a * um + pr.eq.b * vpp;
        const double rhs = C1 * xi + C2;
        worst = std::max(worst, std::abs(lhs - rhs));
        scale = std::max({scale, std::abs(kap * u), std::abs(pr.eq.a * um),
                          std::abs(pr.eq.b * vpp), std::abs(rhs)});
    }
    return worst / std::max(scale, kTiny);
}

double residual_solitary(const Profile& pr, double xi_max, int grid_points) {
    if (pr.compact()) throw DomainError("residual_solitary: profile is compact");
    const double A = pr.solitary_A, B = pr.solitary_B;
    const double m = pr.eq.m.value(), n = pr.eq.n.value();
    const double h = 1.0e-3 * pr.scale_length();
    const auto U = [&](double x) { return evaluate(pr, x); };

    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double xi = -xi_max + 2.0 * xi_max * i / (grid_points - 1);
        const double u = U(xi);
        if (u <= 0.0) continue;
        const double du = fd_deriv(U, xi, 1, h);
        const double r = du * du - B * std::pow(u, 3.0 - n) + A * std::pow(u, 2.0 + m - n);
        worst = std::max(worst, std::abs(r));
        scale = std::max({scale, du * du, std::abs(B) * std::pow(u, 3.0 - n),
                          std::abs(A) * std::pow(u, 2.0 + m - n)});
    }
    return worst / std::max(scale, kTiny);
}

std::array<SingularLimit, 4> singular_limits_asymptotic(double p, double U0,
                                                        const Rational& m,
                                                        const Rational& n, double a,
                                                        double b, double kappa,
                                                        int side) {
    const double md = m.value(), nd = n.value();
    const double u0m = signed_pow(U0, m);
    const double u0n = signed_pow(U0, n);
    const double pn = p * nd, pm = p * md;
    const double dsign = (side >= 0) ? -1.0 : 1.0; // d/dxi z^e with z = L -+ xi

    PowerSum A3, A2, A1;
    A3.add(b * u0n, pn);
    A2.add(dsign * b * u0n * pn, pn - 1.0);
    A1.add(-kappa * U0, p);
    A1.add(a * u0m, pm);
    A1.add(b * u0n * pn * (pn - 1.0), pn - 2.0);
    const PowerSum A0 = A1.derivative(dsign);

    return {A0.limit(), A1.limit(), A2.limit(), A3.limit()};
}

std::array<SingularLimit, 4> singular_estimates_numeric(
    const std::function<double(double)>& u, const Rational& m, const Rational& n,
    double a, double b, double kappa, double L, bool plus_side, double scale_hint) {
    const double sgn = plus_side ? 1.0 : -1.0;
    const auto V = [&](double x) { return signed_pow(u(x), n); };
    const auto Um = [&](double x) { return signed_pow(u(x), m); };

    const auto A_at = [&](int idx, double zeta, double h) -> double {
        const double x = sgn * (L - zeta);
        switch (idx) {
            case 3: return b * V(x);
            case 2: return b * fd_deriv(V, x, 1, h);
            case 1: return -kappa * u(x) + a * Um(x) + b * fd_deriv(V, x, 2, h);
            default: // A0 = (-kappa u + a u^m)' + b (u^n)'''
                return -kappa * fd_deriv(u, x, 1, h) + a * fd_deriv(Um, x, 1, h) +
                       b * fd_deriv(V, x, 3, h);
        }
    };

    std::array<SingularLimit, 4> out;
    for (int idx = 0; idx < 4; ++idx) {
        // The higher derivatives in A0 and A1 need h proportional to zeta,
        // so their roundoff grows as zeta shrinks; keep those sequences at
        // moderate distances.
        const double rho = (idx <= 1) ? 0.8 : 0.5;
        const int steps = (idx <= 1) ? 8 : 10;
        std::vector<double> vals;
        double zeta = 2.0e-2 * L;
        for (int j = 0; j < steps; ++j, zeta *= rho)
            vals.push_back(A_at(idx, zeta, zeta / 8.0));
        out[static_cast<std::size_t>(idx)] =
            estimate_limit(vals, rho, 1.0e-4 * scale_hint);
    }
    return out;
}

SingularTerms singular_terms(const Profile& pr) {
    if (!pr.compact()) throw NonCompact("singular_terms: profile has infinite support");

    SingularTerms st;
    st.at_plus = singular_limits_asymptotic(pr.p.value(), pr.U0plus, pr.eq.m, pr.eq.n,
                                            pr.eq.a, pr.eq.b, pr.kappa, +1);
    st.at_minus = singular_limits_asymptotic(pr.p.value(), pr.U0minus, pr.eq.m, pr.eq.n,
                                             pr.eq.a, pr.eq.b, pr.kappa, -1);
    // Along an exact profile the reduced ODE holds identically, so A1 and
    // A0 are known without the leading-order asymptotic model.
    st.at_plus[1] = {pr.C1 * pr.L + pr.C2, true};
    st.at_minus[1] = {-pr.C1 * pr.L + pr.C2, true};
    st.at_plus[0] = {pr.C1, true};
    st.at_minus[0] = {pr.C1, true};

    const double S = term_scale(pr);
    const auto u = [&](double x) { return evaluate(pr, x); };
    st.numeric_plus = singular_estimates_numeric(u, pr.eq.m, pr.eq.n, pr.eq.a, pr.eq.b,
                                                 pr.kappa, pr.L, true, S);
    st.numeric_minus = singular_estimates_numeric(u, pr.eq.m, pr.eq.n, pr.eq.a, pr.eq.b,
                                                  pr.kappa, pr.L, false, S);
    const auto check_side = [&](const std::array<SingularLimit, 4>& ana,
                                const std::array<SingularLimit, 4>& num) {
        for (int i = 0; i < 4; ++i) {
            const auto& A = ana[static_cast<std::size_t>(i)];
            const auto& N = num[static_cast<std::size_t>(i)];
            if (!A.finite) {
                if (N.finite && std::abs(N.value) < 10.0 * S) st.consistent = false;
                continue;
            }
            if (!N.finite) {
                st.consistent = false;
                continue;
            }
            const double dev = std::abs(N.value - A.value) / std::max(S, std::abs(A.value));
            st.max_deviation = std::max(st.max_deviation, dev);
            if (std::abs(A.value) <= 1.0e-9 * S) {
                if (std::abs(N.value) > 2.0e-2 * S) st.consistent = false;
            } else if (dev > 0.05) {
                st.consistent = false;
            }
        }
    };
    check_side(st.at_plus, st.numeric_plus);
    check_side(st.at_minus, st.numeric_minus);
    return st;
}

std::vector<TestFunction> random_test_functions(const Profile& pr, int count,
                                                unsigned seed) {
    std::mt19937_64 rng(seed);
    const double S = pr.compact() ? pr.L : 4.0 * pr.scale_length();
    std::uniform_real_distribution<double> center(-1.2 * S, 1.2 * S);
    std::uniform_real_distribution<double> width(0.25 * S, 0.8 * S);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(0, 2);

    std::vector<TestFunction> tests;
    tests.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        TestFunction tf;
        tf.center = center(rng);
        tf.width = width(rng);
        tf.poly_degree = deg(rng);
        tf.poly_coeffs = {1.0 + 0.5 * coef(rng)};
        for (int d = 0; d < tf.poly_degree; ++d) tf.poly_coeffs.push_back(coef(rng));
        tests.push_back(tf);
    }
    return tests;
}

std::vector<TestFunction> straddling_test_functions(const Profile& pr) {
    if (!pr.compact()) return {};
    TestFunction plus{pr.L, 0.4 * pr.L, 1, {1.0, 0.5}};
    TestFunction minus{-pr.L, 0.4 * pr.L, 1, {1.0, -0.5}};
    return {plus, minus};
}

double weak_form_residual(const Profile& pr, const std::vector<TestFunction>& tests,
                          WeakFormOrder order, Execution exec) {
    const double kap = pr.kappa;
    const int dpsi_lo = (order == WeakFormOrder::fourth) ? 2 : 0;
    const int dpsi_hi = (order == WeakFormOrder::fourth) ? 4 : 2;

    std::vector<double> rel(tests.size(), 0.0);
    parallel_for(
        tests.size(),
        [&](std::size_t ti) {
            const TestFunction& tf = tests[ti];
            double lo = tf.lo(), hi = tf.hi();
            if (pr.compact()) {
                lo = std::max(lo, -pr.L);
                hi = std::min(hi, pr.L);
            }
            if (!(hi > lo)) return;

            // Panel breakpoints: cutoffs and interior nodes.
            std::vector<double> brk = {lo, hi};
            for (double node : pr.nodes)
                if (node > lo && node < hi) brk.push_back(node);
            if (pr.compact()) {
                for (double edge : {-pr.L, pr.L})
                    if (edge > lo && edge < hi) brk.push_back(edge);
            }
            std::sort(brk.begin(), brk.end());

            // The second-order form tests the twice-integrated ODE, whose
            // right side C1 xi + C2 lives on the support (the weak classes
            // carry a nonzero C).  The fourth-order form needs no source:
            // (C1 xi + C2)'' = 0.
            const auto source = [&](double x) {
                if (order != WeakFormOrder::second) return 0.0;
                if (pr.compact() && std::abs(x) >= pr.L) return 0.0;
                return pr.C1 * x + pr.C2;
            };
            const auto term1 = [&](double x) {
                return -kap * evaluate(pr, x) + pr.eq.a * evaluate_power(pr, x, pr.eq.m);
            };
            const auto term2 = [&](double x) { return pr.eq.b * evaluate_V(pr, x); };

            double integral = 0.0, normalizer = 0.0;
            for (std::size_t k = 0; k + 1 < brk.size(); ++k) {
                integral += tanh_sinh_plain(
                    [&](double x) {
                        const auto d = tf.derivatives(x);
                        return (term1(x) - source(x)) * d[static_cast<std::size_t>(dpsi_lo)] +
                               term2(x) * d[static_cast<std::size_t>(dpsi_hi)];
                    },
                    brk[k], brk[k + 1], 1.0e-11, 10);
                normalizer += tanh_sinh_plain(
                    [&](double x) {
                        const auto d = tf.derivatives(x);
                        return std::abs(term1(x) * d[static_cast<std::size_t>(dpsi_lo)]) +
                               std::abs(source(x) * d[static_cast<std::size_t>(dpsi_lo)]) +
                               std::abs(term2(x) * d[static_cast<std::size_t>(dpsi_hi)]);
                    },
                    brk[k], brk[k + 1], 1.0e-9, 9);
            }
            rel[ti] = std::abs(integral) / std::max(normalizer, kTiny);
        },
        exec);

    double worst = 0.0;
    for (double r : rel) worst = std::max(worst, r);
    return worst;
}

namespace {

// Travelling-wave state needed by the first-integral reduction.
struct XiState {
    double U, dU, Um, dUm, V2, V3; // U, U', U^m, (U^m)', (U^n)'', (U^n)'''
};

XiState xi_state(const Profile& pr, double xi, double h) {
    XiState s;
    const auto U = [&](double x) { return evaluate(pr, x); };
    const auto Um = [&](double x) { return evaluate_power(pr, x, pr.eq.m); };
    const auto V = [&](double x) { return evaluate_V(pr, x); };
    s.U = U(xi);
    s.dU = fd_deriv(U, xi, 1, h);
    s.Um = Um(xi);
    s.dUm = fd_deriv(Um, xi, 1, h);
    s.V2 = fd_deriv(V, xi, 2, h);
    s.V3 = fd_deriv(V, xi, 3, h);
    return s;
}

void check_law_applicable(const Profile& pr, ConsLawId law) {
    if (law == ConsLawId::WeightedMassCos || law == ConsLawId::WeightedMassSin) {
        const double ktol =
            1.0e-9 * std::max(1.0, std::abs(pr.wave.nu));
        if (!(pr.eq.m == pr.eq.n) || std::abs(pr.kappa) > ktol || pr.eq.a / pr.eq.b <= 0.0)
            throw LawNotApplicable(cons_law_name(law) +
                                   ": requires m=n and nu = s|mu|^2 (and a/b > 0)");
    }
}

// X + mu.Y - nu T of the law on the travelling wave, from xi-derivatives.
double law_first_integral(const Profile& pr, ConsLawId law, double xi,
                          const XiState& s, double* scale_out) {
    const double nu = pr.wave.nu;
    const double a = pr.eq.a, b = pr.eq.b;
    const double ss = pr.eq.s;
    const double mu2 = pr.wave.mu_norm2();

    double T = 0.0, X = 0.0, muY = 0.0;
    switch (law) {
        case ConsLawId::TopologicalCharge: {
            X = -nu * s.dU + a * s.dUm + b * s.V3;
            muY = ss * mu2 * s.dU;
            break;
        }
        case ConsLawId::Mass: {
            const double w = -nu * s.dU + a * s.dUm + b * s.V3;
            T = -s.U;
            X = xi * w - a * s.Um - b * s.V2;
            muY = ss * (xi * mu2 * s.dU - mu2 * s.U);
            break;
        }
        case ConsLawId::WeightedMassCos: {
            const double om = std::sqrt(a / b);
            const double Ch = std::cos(om * xi), Sh = std::sin(om * xi);
            T = om * Ch * s.U;
            X = -Sh * (-nu * s.dU + b * s.V3) + b * om * Ch * s.V2;
            muY = ss * mu2 * (om * Ch * s.U - Sh * s.dU);
            break;
        }
        case ConsLawId::WeightedMassSin: {
            const double om = std::sqrt(a / b);
            const double Ch = std::cos(om * xi), Sh = std::sin(om * xi);
            T = om * Sh * s.U;
            X = Ch * (-nu * s.dU + b * s.V3) + b * om * Sh * s.V2;
            muY = ss * mu2 * (Ch * s.dU + om * Sh * s.U);
            break;
        }
    }
    if (scale_out) *scale_out = std::abs(X) + std::abs(muY) + std::abs(nu * T);
    return X + muY - nu * T;
}

std::vector<double> interior_grid(const Profile& pr, int grid_points, double margin) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(grid_points));
    const double span = pr.compact() ? margin * pr.L : 5.0 * pr.scale_length();
    const double guard = pr.compact() ? 0.06 * pr.L : 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double xi = -span + 2.0 * span * i / (grid_points - 1);
        bool near_node = false;
        for (double node : pr.nodes)
            if (std::abs(xi - node) < guard) near_node = true;
        if (!near_node) grid.push_back(xi);
    }
    return grid;
}

} // namespace

double first_integral_check(const Profile& pr, ConsLawId law, int grid_points) {
    check_law_applicable(pr, law);
    if (grid_points < 8) throw DomainError("first_integral_check: too few grid points");

    const double h = 4.0e-3 * pr.scale_length();
    const std::vector<double> grid = interior_grid(pr, grid_points, 0.85);

    double fmin = std::numeric_limits<double>::infinity();
    double fmax = -std::numeric_limits<double>::infinity();
    double mean_abs = 0.0, max_scale = 0.0;
    for (double xi : grid) {
        const XiState s = xi_state(pr, xi, h);
        double scale = 0.0;
        const double F = law_first_integral(pr, law, xi, s, &scale);
        fmin = std::min(fmin, F);
        fmax = std::max(fmax, F);
        mean_abs += std::abs(F);
        max_scale = std::max(max_scale, scale);
    }
    mean_abs /= static_cast<double>(grid.size());
    // Relative to the integral's own magnitude, floored at 1% of the
    // largest constituent term so the zero-constant cases stay meaningful.
    const double denom = std::max({mean_abs, 1.0e-2 * max_scale, kTiny});
    return (fmax - fmin) / denom;
}

double divergence_check(const Profile& pr, ConsLawId law, int points, unsigned seed) {
    check_law_applicable(pr, law);
    if (points < 1) throw DomainError("divergence_check: points must be >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const std::size_t NY = pr.wave.mu.size();
    const double SL = pr.scale_length();
    const double h_in = 5.0e-3 * SL;
    const double h_out = 2.0e-2 * SL;

    // xi positions away from the cutoff and from interior nodes.
    const auto draw_xi = [&]() -> double {
        for (int attempt = 0; attempt < 64; ++attempt) {
            const double xi = pr.compact() ? 0.85 * pr.L * unit(rng) : 4.0 * SL * unit(rng);
            bool ok = true;
            for (double node : pr.nodes)
                if (pr.compact() && std::abs(xi - node) < 0.08 * pr.L) ok = false;
            if (ok) return xi;
        }
        return 0.3 * SL;
    };

    // u^r as a field map; all partials below go through evaluate_field-like
    // composition xi(t,x,y).
    const auto upow_at = [&](double t, double x, const std::vector<double>& y,
                             const Rational& r) {
        double xi = x - pr.wave.nu * t;
        for (std::size_t i = 0; i < NY; ++i) xi += pr.wave.mu[i] * y[i];
        return evaluate_power(pr, xi, r);
    };
    const auto u_at = [&](double t, double x, const std::vector<double>& y) {
        return evaluate_field(pr, t, x, y);
    };

    const Rational one(1);
    const double a = pr.eq.a, b = pr.eq.b, ss = pr.eq.s;
    const double om = std::sqrt(std::abs(a / b));

    // T, X, Y_i of the selected law at a spacetime point; inner partials by
    // central differences along the respective coordinates.
    const auto law_txy = [&](double t, double x, const std::vector<double>& y) -> LawTXY {
        LawTXY out;
        out.Y.assign(NY, 0.0);
        const auto ux = [&](int k, const Rational& r) {
            return fd_deriv([&](double xx) { return upow_at(t, xx, y, r); }, x, k, h_in);
        };
        const double ut =
            fd_deriv([&](double tt) { return u_at(tt, x, y); }, t, 1, h_in);
        const auto uy = [&](std::size_t i) {
            std::vector<double> yy = y;
            return fd_deriv(
                [&](double v) {
                    yy[i] = v;
                    return u_at(t, x, yy);
                },
                y[i], 1, h_in);
        };
        const double u = u_at(t, x, y);
        double xi = x - pr.wave.nu * t;
        for (std::size_t i = 0; i < NY; ++i) xi += pr.wave.mu[i] * y[i];

        switch (law) {
            case ConsLawId::TopologicalCharge: {
                out.T = 0.0;
                out.X = ut + a * ux(1, pr.eq.m) + b * ux(3, pr.eq.n);
                for (std::size_t i = 0; i < NY; ++i) out.Y[i] = ss * uy(i);
                break;
            }
            case ConsLawId::Mass: {
                const double w = ut + a * ux(1, pr.eq.m) + b * ux(3, pr.eq.n);
                out.T = -u;
                out.X = xi * w - a * upow_at(t, x, y, pr.eq.m) - b * ux(2, pr.eq.n);
                for (std::size_t i = 0; i < NY; ++i)
                    out.Y[i] = ss * (xi * uy(i) - pr.wave.mu[i] * u);
                break;
            }
            case ConsLawId::WeightedMassCos: {
                const double Ch = std::cos(om * xi), Sh = std::sin(om * xi);
                out.T = om * Ch * u;
                out.X = -Sh * (ut + b * ux(3, pr.eq.n)) + b * om * Ch * ux(2, pr.eq.n);
                for (std::size_t i = 0; i < NY; ++i)
                    out.Y[i] = ss * (pr.wave.mu[i] * om * Ch * u - Sh * uy(i));
                break;
            }
            case ConsLawId::WeightedMassSin: {
                const double Ch = std::cos(om * xi), Sh = std::sin(om * xi);
                out.T = om * Sh * u;
                out.X = Ch * (ut + b * ux(3, pr.eq.n)) + b * om * Sh * ux(2, pr.eq.n);
                for (std::size_t i = 0; i < NY; ++i)
                    out.Y[i] = ss * (Ch * uy(i) + pr.wave.mu[i] * om * Sh * u);
                break;
            }
        }
        (void)one;
        return out;
    };

    double worst = 0.0, scale = 0.0;
    for (int pt = 0; pt < points; ++pt) {
        const double xi0 = draw_xi();
        const double t0 = unit(rng);
        std::vector<double> y0(NY);
        for (std::size_t i = 0; i < NY; ++i) y0[i] = unit(rng);
        double x0 = xi0 + pr.wave.nu * t0;
        for (std::size_t i = 0; i < NY; ++i) x0 -= pr.wave.mu[i] * y0[i];

        const double dT = fd_deriv(
            [&](double tt) { return law_txy(tt, x0, y0).T; }, t0, 1, h_out);
        const double dX = fd_deriv(
            [&](double xx) { return law_txy(t0, xx, y0).X; }, x0, 1, h_out);
        double div = dT + dX;
        double sc = std::abs(dT) + std::abs(dX);
        for (std::size_t i = 0; i < NY; ++i) {
            std::vector<double> yy = y0;
            const double dY = fd_deriv(
                [&](double v) {
                    yy[i] = v;
                    return law_txy(t0, x0, yy).Y[i];
                },
                y0[i], 1, h_out);
            div += dY;
            sc += std::abs(dY);
        }
        worst = std::max(worst, std::abs(div));
        scale = std::max(scale, sc);
    }
    return worst / std::max(scale, 1.0);
}

PowerFit estimate_cutoff_power(const Profile& pr) {
    if (!pr.compact()) throw NonCompact("estimate_cutoff_power: infinite support");
    const double zeta_lo = std::max(1.0e-6, 1.0e-9 * pr.L);
    const double zeta_hi = std::min(1.0e-3, 0.05 * pr.L);
    const int N = 40;

    std::vector<double> xs, ys;
    for (int i = 0; i < N; ++i) {
        const double zeta =
            zeta_lo * std::pow(zeta_hi / zeta_lo, static_cast<double>(i) / (N - 1));
        const double u = std::abs(evaluate(pr, pr.L - zeta));
        if (u <= 0.0) continue;
        xs.push_back(std::log(zeta));
        ys.push_back(std::log(u));
    }
    if (xs.size() < 8) throw DomainError("estimate_cutoff_power: profile vanished on the window");

    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double nn = static_cast<double>(n);
    const double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    const double num = (nn * sxy - sx * sy);
    const double den = std::sqrt((nn * sxx - sx * sx) * (nn * syy - sy * sy));
    PowerFit fit;
    fit.p_hat = slope;
    fit.r_squared = (den > 0.0) ? (num / den) * (num / den) : 1.0;
    return fit;
}

bool is_known_check(const std::string& name) {
    return name == "residual" || name == "singular" || name == "weakform2" ||
           name == "weakform4" || name == "conslaw" || name == "power";
}

VerificationReport run_verification(const Profile& pr,
                                    const std::vector<std::string>& checks,
                                    unsigned seed, const Tolerances& tol) {
    VerificationReport rep;
    const auto selected = [&](const std::string& name) {
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    };
    const auto add = [&](const std::string& name, double measured, double tolerance,
                         const std::string& details) {
        rep.entries.push_back({name, measured, tolerance, measured <= tolerance, details});
    };

    if (selected("residual")) {
        if (pr.compact()) {
            const double r = residual_reduced(pr, pr.C1, pr.C2, 801);
            add("residual", r, tol.residual, "reduced second-order ODE, 90% interior");
        } else {
            const double r = residual_solitary(pr);
            add("residual", r, tol.solitary_residual, "first-order solitary ODE, |xi|<=10");
        }
    }
    if (selected("singular") && pr.compact()) {
        const SingularTerms st = singular_terms(pr);
        std::ostringstream os;
        os << "A0..A3 at +L:";
        for (int i = 0; i < 4; ++i) {
            const auto& lim = st.at_plus[static_cast<std::size_t>(i)];
            os << ' ';
            if (lim.finite)
                os << lim.value;
            else
                os << "divergent";
        }
        const double measured = st.consistent ? st.max_deviation : 1.0;
        add("singular", measured, tol.singular, os.str());
    }
    if (selected("weakform2")) {
        auto tests = random_test_functions(pr, 12, seed);
        const double r = weak_form_residual(pr, tests, WeakFormOrder::second);
        add("weakform2", r, tol.weak_form, "second-order weak form, 12 random bumps");
    }
    if (selected("weakform4")) {
        auto tests = random_test_functions(pr, 12, seed);
        for (const auto& tf : straddling_test_functions(pr)) tests.push_back(tf);
        const double r = weak_form_residual(pr, tests, WeakFormOrder::fourth);
        add("weakform4", r, tol.weak_form,
            "fourth-order weak form, 12 random + straddling bumps (A1 discriminator)");
    }
    if (selected("conslaw")) {
        std::vector<ConsLawId> laws = {ConsLawId::TopologicalCharge, ConsLawId::Mass};
        try {
            check_law_applicable(pr, ConsLawId::WeightedMassCos);
            laws.push_back(ConsLawId::WeightedMassCos);
            laws.push_back(ConsLawId::WeightedMassSin);
        } catch (const LawNotApplicable&) {
        }
        for (ConsLawId law : laws) {
            const double fi = first_integral_check(pr, law, 101);
            add(cons_law_name(law) + ".first_integral", fi, tol.first_integral,
                "variation of X + mu.Y - nu T along the profile");
            const double dv = divergence_check(pr, law, 100, seed);
            add(cons_law_name(law) + ".divergence", dv, tol.divergence,
                "|D_t T + D_x X + D_y.Y| at 100 random interior points");
        }
    }
    if (selected("power") && pr.compact()) {
        const PowerFit fit = estimate_cutoff_power(pr);
        const double expected = pr.p.value();
        const double measured = std::abs(fit.p_hat - expected) / expected;
        std::ostringstream os;
        os << "p_hat=" << fit.p_hat << " expected=" << expected << " r2=" << fit.r_squared;
        add("power", measured, tol.power_fit, os.str());
    }
    return rep;
}

} // namespace kpmn
