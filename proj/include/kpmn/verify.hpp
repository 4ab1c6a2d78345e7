#ifndef KPMN_VERIFY_HPP
#define KPMN_VERIFY_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "kpmn/classify.hpp"
#include "kpmn/families.hpp"

namespace kpmn {

// Smooth compactly supported test function: polynomial times the bump
// exp(-1/(1-t^2)) with t = (xi-center)/width; vanishes with all derivatives
// at the support boundary.
struct TestFunction {
    double center = 0.0;
    double width = 1.0;
    int poly_degree = 0;
    std::vector<double> poly_coeffs = {1.0};

    // psi and its first four derivatives at xi (exact via order-4 jets).
    std::array<double, 5> derivatives(double xi) const;
    double lo() const { return center - width; }
    double hi() const { return center + width; }
};

enum class ConsLawId { TopologicalCharge, Mass, WeightedMassCos, WeightedMassSin };
std::string cons_law_name(ConsLawId law);

enum class WeakFormOrder { fourth, second };

struct VerificationEntry {
    std::string check_name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string details;
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;
    bool all_pass() const;
};

// Max residual of the twice-integrated travelling-wave ODE
//   (s|mu|^2-nu)U + aU^m + b(U^n)'' = C1 xi + C2
// over the interior grid, relative to the largest term magnitude;
// (U^n)'' by 4th-order central differences.
double residual_reduced(const Profile& profile, double C1, double C2,
                        int grid_points, double interior_fraction = 0.9);

// Max residual of the first-order solitary ODE
//   U'^2 - B U^(3-n) + A U^(2+m-n) = 0  on |xi| <= xi_max (relative).
double residual_solitary(const Profile& profile, double xi_max = 10.0,
                         int grid_points = 401);

struct SingularLimit {
    double value = 0.0;
    bool finite = true; // false: the one-sided limit diverges
};

struct SingularTerms {
    // Index 0..3 = A0..A3.
    std::array<SingularLimit, 4> at_plus;
    std::array<SingularLimit, 4> at_minus;
    std::array<SingularLimit, 4> numeric_plus;
    std::array<SingularLimit, 4> numeric_minus;
    // Numeric estimates agree with the analytic vanishing pattern.
    bool consistent = true;
    double max_deviation = 0.0;
};

// One-sided limits of the boundary terms
//   A3 = bU^n, A2 = b(U^n)', A1 = (s|mu|^2-nu)U + aU^m + b(U^n)'',
//   A0 = A1',
// cross-checked by Richardson extrapolation.  For catalog profiles A1 and
// A0 are exact (A1 = C1 xi + C2 along the solution); A2 and A3 come from
// the stored asymptotics.
SingularTerms singular_terms(const Profile& profile);

// Limits from the asymptotic form U ~ U0 (L -+ xi)^p alone (the model of
// the existence theorem); side = +1 for +L, -1 for -L.
std::array<SingularLimit, 4> singular_limits_asymptotic(double p, double U0,
                                                        const Rational& m,
                                                        const Rational& n, double a,
                                                        double b, double kappa,
                                                        int side = +1);

// Numeric estimates for an arbitrary evaluator (used for synthetic
// profiles in tests as well as the cross-check above).  `scale_hint` sets
// the magnitude below which a sequence counts as zero rather than a
// divergence candidate (finite-difference roundoff grows near the cutoff).
std::array<SingularLimit, 4> singular_estimates_numeric(
    const std::function<double(double)>& u, const Rational& m, const Rational& n,
    double a, double b, double kappa, double L, bool plus_side, double scale_hint);

// Max over the test set of |weak-form integral| / (sum of term magnitudes).
// order=fourth:  int ((s|mu|^2-nu)U_c + aU_c^m) psi'' + b U_c^n psi'''' dxi
// order=second:  int ((s|mu|^2-nu)U_c + aU_c^m) psi   + b U_c^n psi''   dxi
double weak_form_residual(const Profile& profile,
                          const std::vector<TestFunction>& tests, WeakFormOrder order,
                          Execution exec = Execution::parallel);

// Deterministic test batteries.
std::vector<TestFunction> random_test_functions(const Profile& profile, int count,
                                                unsigned seed);
// Bumps straddling +L and -L (their supports cross the cutoff).
std::vector<TestFunction> straddling_test_functions(const Profile& profile);

// Relative variation of the first integral X + mu.Y - nu T along the
// profile (max-min over the interior grid, normalized by the integral's
// own magnitude floored at 1% of the constituent term scale).
double first_integral_check(const Profile& profile, ConsLawId law, int grid_points);

// Max |D_t T + D_x X + D_y.Y| at random interior spacetime points,
// normalized by the largest single-term magnitude; all partial derivatives
// by central differences on the evaluate_field map.
double divergence_check(const Profile& profile, ConsLawId law, int points,
                        unsigned seed = 0);

struct PowerFit {
    double p_hat = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log|U| vs log(L-xi) over (L-xi) in [1e-6, 1e-3].
PowerFit estimate_cutoff_power(const Profile& profile);

// Named tolerances used by the CLI verify command; `scale` multiplies all
// of them (COMPACTON_LAB_TOLERANCE environment override).
struct Tolerances {
    double residual = 1.0e-5;
    double solitary_residual = 1.0e-8;
    double singular = 5.0e-2;
    double weak_form = 1.0e-6;
    double first_integral = 1.0e-6;
    double divergence = 1.0e-4;
    double power_fit = 2.0e-2;

    Tolerances scaled(double scale) const;
};

// Runs the selected checks ("residual", "singular", "weakform2",
// "weakform4", "conslaw", "power") and assembles a deterministic report.
VerificationReport run_verification(const Profile& profile,
                                    const std::vector<std::string>& checks,
                                    unsigned seed, const Tolerances& tol);

bool is_known_check(const std::string& name);

} // namespace kpmn

#endif
