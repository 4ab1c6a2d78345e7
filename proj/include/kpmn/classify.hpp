#ifndef KPMN_CLASSIFY_HPP
#define KPMN_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kpmn/families.hpp"
#include "kpmn/params.hpp"
#include "kpmn/quadrature.hpp"

namespace kpmn {

enum class SolutionKind { Classical, Compacton, WeakCompacton, NotASolution };

struct SolutionClass {
    SolutionKind kind = SolutionKind::NotASolution;
    // For Compacton: the lowest-numbered satisfied case of the four
    // pointwise-distributional condition sets, plus every satisfied case
    // (the cases are alternatives, not a partition).
    int compacton_case = 0;
    std::vector<int> all_cases;
    double pn = 0.0;

    bool operator==(const SolutionClass& o) const {
        return kind == o.kind && compacton_case == o.compacton_case;
    }
};

std::string solution_class_name(const SolutionClass& sc);

// Pointwise-distributional classification of a cutoff profile with
// asymptotic power p: tests the classical conditions, the four compacton
// condition sets, then the weak condition pn > 1.  Numeric equality pins
// are tested at relative tolerance `tol` (default 1e-9).
SolutionClass classify_pointwise(double p, const EquationParams& eq,
                                 const WaveParams& wave, double tol = 1.0e-9);

// Exact-rational variant: avoids false negatives on p = 2/(n-1) tests.
SolutionClass classify_pointwise(const Rational& p, const EquationParams& eq,
                                 const WaveParams& wave, double tol = 1.0e-9);

// Applies classify_pointwise to the profile's stored cutoff power.
SolutionClass classify_profile(const Profile& profile, double tol = 1.0e-9);

// The class each catalog family carries per the existence theorems.
SolutionKind expected_class(FamilyId family);

enum class QuadratureCase { E_nonzero, C_leading, B_leading, A_leading, degenerate };
std::string quadrature_case_name(QuadratureCase c);

struct CaseReport {
    QuadratureCase leading = QuadratureCase::degenerate;
    double pn_value = 0.0;          // pn induced by the leading small-V term
    bool exists_weak = false;
    bool exists_compacton = false;
    std::vector<int> compacton_cases;
    std::optional<double> vmax;
    std::optional<double> vstar;
    bool pstar_condition = false;   // C below the negative-minimum threshold
    std::string detail;
};

// Case analysis of the compacton quadrature for given first-integral
// constants: determines the leading small-V term, the induced pn, and the
// existence of weak/pointwise compactons.
CaseReport quadrature_case(const ReducedConstants& rc, const EquationParams& eq,
                           double tol = 1.0e-9);

// Threshold on C for a positive root when the potential needs a negative
// minimum: (m-1)/m^(m/(m-1)) * (|B|^m/|A|)^(1/(m-1)) for m>1 (and the
// m<1 counterpart); algebraically equal to (1-m)/m * B * Vstar^(1/n).
double weak_root_threshold(double A, double B, double m);

} // namespace kpmn

#endif
