#ifndef KPMN_FAMILIES_HPP
#define KPMN_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpmn/parallel.hpp"
#include "kpmn/params.hpp"
#include "kpmn/rational.hpp"

namespace kpmn {

// Closed enumeration of the explicit travelling-wave families.
enum class FamilyId {
    LinCos,          // power of a cosine, m=n, kappa=0
    LinSin,          // power of a sine, m=n, kappa=0
    LinMixed,        // power of (linear-in-xi minus sine), m=n, kappa=0
    SolitarySech,    // sech line soliton, n=1, m>1
    HeavyTailHi,     // reciprocal-quadratic heavy tail, n=2-m, 1<m<2
    SolitarySechSub, // sech profile with sublinear powers, n=m<1
    HeavyTailSub,    // heavy tail with sublinear powers, n=2m-1, 1/2<m<1
    CosCompacton,    // cosine compacton, m=n, kappa!=0
    SinCompacton,    // sine compacton, m=n, kappa!=0
    CnZeroKappa,     // Jacobi cn compacton, m=2n, kappa=0
    SnZeroKappa,     // Jacobi sn (imaginary modulus) compacton, m=2n, kappa=0
    AlgZeroKappa,    // quadratic compacton, m=n/2, kappa=0
    CnGeneral,       // cn compacton, m=2n-1, b>0
    SnGeneral,       // sn compacton, m=2n-1, b>0
    CnNegB,          // cn compacton, m=2n-1, b<0, sublinear window
    SnNegB,          // sn compacton, m=2n-1, b<0, sublinear window
    AlgGeneral,      // quadratic compacton, m=(n+1)/2
    AlgNonconvex,    // quadratic compacton, m=2-n, sgn(a)=-sgn(b)
};

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

enum class SignClass { nonnegative, squared_node, sign_changing };
std::string sign_class_name(SignClass sc);

enum class ModulusKind { none, real, imaginary };

struct EllipticModulus {
    ModulusKind kind = ModulusKind::none;
    double k = 0.0; // for imaginary kind, the magnitude of ik
};

// A concrete travelling-wave solution with all derived constants frozen at
// construction.  Immutable after make_profile; evaluation is pure.
struct Profile {
    FamilyId family{};
    EquationParams eq;
    WaveParams wave;

    double alpha = 1.0;     // amplitude
    double beta = 0.0;      // argument scale (for LinMixed: omega)
    Rational q;             // profile exponent
    EllipticModulus modulus;
    double L = 0.0;         // half-width; +infinity for solitary families
    Rational p;             // cutoff power (meaningful only for finite L)
    double U0plus = 0.0;    // leading coefficient of U ~ U0 (L-xi)^p at +L
    double U0minus = 0.0;   // same at -L
    SignClass sign_class = SignClass::nonnegative;

    double kappa = 0.0;
    double C1 = 0.0;        // right side C1*xi + C2 of the reduced ODE
    double C2 = 0.0;

    // Solitary first-integral constants (U'^2 = B U^(3-n) - A U^(2+m-n)).
    double solitary_A = 0.0;
    double solitary_B = 0.0;

    // Extras actually used at construction.
    double extra_C3 = 0.0;      // LinMixed amplitude constant
    double extra_phase = 1.0;   // LinMixed phase sign (+1: C4=+pi/2)
    int extra_root_index = 1;   // LinMixed tan fixed-point index
    double tan_root = 0.0;      // the selected z with z = tan z

    std::vector<double> nodes;  // interior zeros (odd families: {0})

    bool compact() const;
    // Characteristic length used to pick finite-difference steps.
    double scale_length() const;
};

// Construct and validate a profile.  `extras` may carry "alpha", "C3",
// "phase" (+-1) and "root_index" depending on the family; unknown keys are
// rejected.
Profile make_profile(FamilyId family, const EquationParams& eq,
                     const WaveParams& wave,
                     const std::map<std::string, double>& extras = {});

// U_c(xi): exactly zero outside [-L, L].
double evaluate(const Profile& profile, double xi);

// V(xi) = U^n computed directly from the family base (no nested fractional
// powers, exact for sign-changing profiles).
double evaluate_V(const Profile& profile, double xi);

// U^r computed directly from the family base; used for the U^m and U^n
// terms of the ODE and the conservation-law fluxes.
double evaluate_power(const Profile& profile, double xi, const Rational& r);

// u(t, x, y) = U(x + mu.y - nu t).
double evaluate_field(const Profile& profile, double t, double x,
                      const std::vector<double>& y);

// Batch sampler (OpenMP kernel with a serial reference path).
void sample_profile(const Profile& profile, const std::vector<double>& xi,
                    std::vector<double>& out,
                    Execution exec = Execution::parallel);

struct AdmissibleFamily {
    FamilyId family;
    std::string note; // free extras / parameter ranges making it valid
};

// Every family whose validity predicate is satisfiable for (eq, wave).
std::vector<AdmissibleFamily> catalog_admissible(const EquationParams& eq,
                                                 const WaveParams& wave);

} // namespace kpmn

#endif
