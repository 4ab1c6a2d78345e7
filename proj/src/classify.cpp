#include "kpmn/classify.hpp"

#include <algorithm>
#include <cmath>

namespace kpmn {

namespace {

bool rel_equal(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

// Shared case evaluation; p supplied as double, with an optional exact
// rational form for the equality-structured cases 2-4.
SolutionClass classify_impl(double p, const Rational* p_exact, const EquationParams& eq,
                            const WaveParams& wave, double tol) {
    if (p <= 0.0) throw DomainError("classify_pointwise: p must be positive");
    const double m = eq.m.value(), n = eq.n.value();
    if (eq.m == Rational(1) || eq.n == Rational(1))
        throw DomainError("classify_pointwise: requires m != 1 and n != 1");

    const double kappa = kappa_of(eq, wave);
    const double pm = p * m, pn = p * n;

    SolutionClass out;
    out.pn = pn;

    // Classical (strong) conditions: U and its first four derivatives vanish
    // at the cutoff (p > 4 for the asymptotic form) with m >= 2, n >= 4.
    if (p > 4.0 && m >= 2.0 && n >= 4.0) {
        out.kind = SolutionKind::Classical;
        return out;
    }

    const auto p_is = [&](const Rational& target) {
        if (p_exact) return *p_exact == target;
        return rel_equal(p, target.value(), tol);
    };

    std::vector<int> cases;
    // Case 1: p>1, pm>1, pn>3.
    if (p > 1.0 && pm > 1.0 && pn > 3.0) cases.push_back(1);
    // Case 2: p = 2/(n-1) > 0, pm>1, 2n(n+1)/(n-1)^2 = (s|mu|^2-nu)/b.
    if (n > 1.0 && p_is(Rational(2) / (eq.n - Rational(1))) && pm > 1.0) {
        const double lhs = 2.0 * n * (n + 1.0) / ((n - 1.0) * (n - 1.0));
        if (rel_equal(lhs, -kappa / eq.b, tol)) cases.push_back(2);
    }
    // Case 3: p = 2/(n-m) > 0, 2n(n+m)/(n-m)^2 = -a/b, nu = s|mu|^2.
    if (n > m && p_is(Rational(2) / (eq.n - eq.m))) {
        const double lhs = 2.0 * n * (n + m) / ((n - m) * (n - m));
        if (rel_equal(lhs, -eq.a / eq.b, tol) &&
            std::abs(kappa) <= tol * std::max(1.0, std::abs(wave.nu)))
            cases.push_back(3);
    }
    // Case 4: p = 2/(n-m) > 1.
    if (n > m && p_is(Rational(2) / (eq.n - eq.m)) && p > 1.0) cases.push_back(4);

    if (!cases.empty()) {
        out.kind = SolutionKind::Compacton;
        out.compacton_case = cases.front();
        out.all_cases = cases;
        return out;
    }
    if (pn > 1.0) {
        out.kind = SolutionKind::WeakCompacton;
        return out;
    }
    out.kind = SolutionKind::NotASolution;
    return out;
}

} // namespace

std::string solution_class_name(const SolutionClass& sc) {
    switch (sc.kind) {
        case SolutionKind::Classical: return "Classical";
        case SolutionKind::Compacton:
            return "Compacton(case " + std::to_string(sc.compacton_case) + ")";
        case SolutionKind::WeakCompacton: return "WeakCompacton";
        case SolutionKind::NotASolution: return "NotASolution";
    }
    return "?";
}

SolutionClass classify_pointwise(double p, const EquationParams& eq,
                                 const WaveParams& wave, double tol) {
    return classify_impl(p, nullptr, eq, wave, tol);
}

SolutionClass classify_pointwise(const Rational& p, const EquationParams& eq,
                                 const WaveParams& wave, double tol) {
    return classify_impl(p.value(), &p, eq, wave, tol);
}

SolutionClass classify_profile(const Profile& profile, double tol) {
    if (!profile.compact())
        throw NonCompact("classify_profile: profile has infinite support");
    return classify_pointwise(profile.p, profile.eq, profile.wave, tol);
}

SolutionKind expected_class(FamilyId family) {
    switch (family) {
        case FamilyId::LinCos:
        case FamilyId::LinSin:
        case FamilyId::LinMixed:
        case FamilyId::CnZeroKappa:
        case FamilyId::SnZeroKappa:
        case FamilyId::AlgZeroKappa:
            return SolutionKind::WeakCompacton;
        case FamilyId::CosCompacton:
        case FamilyId::SinCompacton:
        case FamilyId::CnGeneral:
        case FamilyId::SnGeneral:
        case FamilyId::CnNegB:
        case FamilyId::SnNegB:
        case FamilyId::AlgGeneral:
        case FamilyId::AlgNonconvex:
            return SolutionKind::Compacton;
        default:
            return SolutionKind::NotASolution; // solitary waves are not cutoff profiles
    }
}

std::string quadrature_case_name(QuadratureCase c) {
    switch (c) {
        case QuadratureCase::E_nonzero: return "E_nonzero";
        case QuadratureCase::C_leading: return "C_leading";
        case QuadratureCase::B_leading: return "B_leading";
        case QuadratureCase::A_leading: return "A_leading";
        case QuadratureCase::degenerate: return "degenerate";
    }
    return "?";
}

double weak_root_threshold(double A, double B, double m) {
    if (m > 1.0)
        return (m - 1.0) / std::pow(m, m / (m - 1.0)) *
               std::pow(std::pow(std::abs(B), m) / std::abs(A), 1.0 / (m - 1.0));
    return (1.0 - m) / std::pow(m, m / (m - 1.0)) *
           std::pow(A / std::pow(B, m), 1.0 / (1.0 - m));
}

CaseReport quadrature_case(const ReducedConstants& rc, const EquationParams& eq,
                           double tol) {
    if (rc.A == 0.0) throw DegenerateError("quadrature_case: A must be nonzero (a != 0)");
    const double n = eq.n.value(), m = eq.m.value();
    const double A = rc.A, B = rc.B, C = rc.C, E = rc.E;

    CaseReport rep;
    PotentialSpec spec{rc, eq.m, eq.n};

    const double vs = kpmn::vstar(spec);
    if (vs > 0.0) rep.vstar = vs;

    const auto try_vmax = [&]() {
        try {
            rep.vmax = find_vmax(spec);
        } catch (const Error&) {
            rep.vmax.reset();
        }
    };

    if (E != 0.0) {
        rep.leading = QuadratureCase::E_nonzero;
        rep.pn_value = 1.0;
        rep.exists_weak = false;
        rep.exists_compacton = false;
        rep.detail = "constant term leads: pn=1, below the weak threshold pn>1";
        if (E > 0.0) try_vmax();
        return rep;
    }

    if (C != 0.0) {
        rep.leading = QuadratureCase::C_leading;
        rep.pn_value = 2.0;
        // Existence of a positive root V_max with C > 0.
        bool root = false;
        if (C > 0.0) {
            if (m > 1.0) {
                if (A > 0.0) {
                    root = true;
                } else if (B < 0.0) {
                    rep.pstar_condition = C < weak_root_threshold(A, B, m);
                    root = rep.pstar_condition;
                }
            } else { // m < 1
                if (B < 0.0) {
                    root = true;
                } else if (B == 0.0 && A > 0.0) {
                    root = true;
                } else if (B > 0.0 && A > 0.0) {
                    rep.pstar_condition = C < weak_root_threshold(A, B, m);
                    root = rep.pstar_condition;
                }
            }
        }
        rep.exists_weak = root; // pn=2>1 holds for any n>0
        rep.exists_compacton = false;
        rep.detail = root ? "linear term leads: pn=2, weak-compacton for any n>0"
                          : "linear term leads but the potential has no positive root";
        if (root) try_vmax();
        return rep;
    }

    if (B != 0.0) {
        if (m > 1.0) {
            rep.leading = QuadratureCase::B_leading;
            rep.pn_value = 2.0 * n / (n - 1.0);
            const bool shape_ok = (B > 0.0) && n > 1.0;
            const bool root = shape_ok && A > 0.0;
            rep.exists_weak = root;
            if (root) {
                if (n > 1.0 && n < 3.0) rep.compacton_cases.push_back(1);
                const double pin = -2.0 * eq.b * n * (n + 1.0) / ((n - 1.0) * (n - 1.0));
                const double kappa = B * (n + 1.0) * eq.b / (2.0 * n);
                if (n < 2.0 * m + 1.0 && rel_equal(kappa, pin, tol))
                    rep.compacton_cases.push_back(2);
                rep.exists_compacton = !rep.compacton_cases.empty();
                try_vmax();
            }
            rep.detail = "B-term leads (m>1): pn=2n/(n-1)";
            return rep;
        }
        // m < 1: the A-term has the smaller exponent.
        rep.leading = QuadratureCase::A_leading;
        rep.pn_value = 2.0 * n / (n - m);
        const bool shape_ok = (A < 0.0) && n > m;
        const bool root = shape_ok && B < 0.0;
        rep.exists_weak = root;
        if (root) {
            if (n < m + 2.0) rep.compacton_cases.push_back(4);
            if (n < m + 2.0 && n < 3.0 * m) rep.compacton_cases.push_back(1);
            const double ratio_pin = -2.0 * n * (n + m) / ((n - m) * (n - m));
            if (rel_equal(eq.a / eq.b, ratio_pin, tol)) rep.compacton_cases.push_back(3);
            std::sort(rep.compacton_cases.begin(), rep.compacton_cases.end());
            rep.exists_compacton = !rep.compacton_cases.empty();
            try_vmax();
        }
        rep.detail = "A-term leads (m<1): pn=2n/(n-m)";
        return rep;
    }

    // E = C = B = 0: single term, no positive root.
    rep.leading = QuadratureCase::degenerate;
    rep.pn_value = 0.0;
    rep.exists_weak = false;
    rep.exists_compacton = false;
    rep.detail = "only the A-term survives: no positive root exists";
    return rep;
}

} // namespace kpmn
