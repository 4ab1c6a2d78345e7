#include "kpmn/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kpmn/specfun.hpp"

namespace kpmn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double kappa_zero_tol(const EquationParams& eq, const WaveParams& w) {
    return 1.0e-12 * std::max({1.0, std::abs(w.nu), std::abs(eq.s) * w.mu_norm2()});
}

bool same_sign(double x, double y) { return (x > 0.0) == (y > 0.0) && x != 0.0 && y != 0.0; }

void require(bool cond, const std::string& what) {
    if (!cond) throw ValidityError(what);
}

double get_extra(const std::map<std::string, double>& extras, const std::string& key,
                 double fallback) {
    auto it = extras.find(key);
    return it == extras.end() ? fallback : it->second;
}

void check_extra_keys(const std::map<std::string, double>& extras,
                      std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : extras) {
        (void)value;
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end())
            throw DomainError("make_profile: unknown extra '" + key + "'");
    }
}

// Sign class of u = base^q on a sign-changing base; throws when the power
// is undefined for negative bases.
SignClass node_sign_class(const Rational& q, const std::string& family) {
    if (q.denominator_even())
        throw ParityError(family + ": exponent " + q.str() +
                          " undefined for the negative part of the profile");
    return q.numerator_even() ? SignClass::squared_node : SignClass::sign_changing;
}

// Window shared by the kappa!=0 compacton families of quadrature class
// B>0, A>0: 1<n<3, or n>=3 with kappa pinned to -2bn(n+1)/(n-1)^2.
void check_upper_window(double n, double kappa, double b, const std::string& family) {
    if (n > 1.0 && n < 3.0) return;
    if (n >= 3.0) {
        const double pin = -2.0 * b * n * (n + 1.0) / ((n - 1.0) * (n - 1.0));
        if (std::abs(kappa - pin) <= 1.0e-10 * std::abs(pin)) return;
        throw ValidityError(family + ": requires 1<n<3, or n>=3 with kappa = -2bn(n+1)/(n-1)^2");
    }
    throw ValidityError(family + ": requires 1<n<3");
}

// Solitary first-integral constants of U'^2 - B U^(3-n) + A U^(2+m-n) = 0.
void solitary_AB(const EquationParams& eq, double kappa, double& A, double& B) {
    const double n = eq.n.value();
    const double m = eq.m.value();
    B = 2.0 * kappa / (n * (n + 1.0) * eq.b);
    A = 2.0 * eq.a / (n * (m + n) * eq.b);
}

} // namespace

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> ids = {
        FamilyId::LinCos,       FamilyId::LinSin,       FamilyId::LinMixed,
        FamilyId::SolitarySech, FamilyId::HeavyTailHi,  FamilyId::SolitarySechSub,
        FamilyId::HeavyTailSub, FamilyId::CosCompacton, FamilyId::SinCompacton,
        FamilyId::CnZeroKappa,  FamilyId::SnZeroKappa,  FamilyId::AlgZeroKappa,
        FamilyId::CnGeneral,    FamilyId::SnGeneral,    FamilyId::CnNegB,
        FamilyId::SnNegB,       FamilyId::AlgGeneral,   FamilyId::AlgNonconvex};
    return ids;
}

std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::LinCos: return "LinCos";
        case FamilyId::LinSin: return "LinSin";
        case FamilyId::LinMixed: return "LinMixed";
        case FamilyId::SolitarySech: return "SolitarySech";
        case FamilyId::HeavyTailHi: return "HeavyTailHi";
        case FamilyId::SolitarySechSub: return "SolitarySechSub";
        case FamilyId::HeavyTailSub: return "HeavyTailSub";
        case FamilyId::CosCompacton: return "CosCompacton";
        case FamilyId::SinCompacton: return "SinCompacton";
        case FamilyId::CnZeroKappa: return "CnZeroKappa";
        case FamilyId::SnZeroKappa: return "SnZeroKappa";
        case FamilyId::AlgZeroKappa: return "AlgZeroKappa";
        case FamilyId::CnGeneral: return "CnGeneral";
        case FamilyId::SnGeneral: return "SnGeneral";
        case FamilyId::CnNegB: return "CnNegB";
        case FamilyId::SnNegB: return "SnNegB";
        case FamilyId::AlgGeneral: return "AlgGeneral";
        case FamilyId::AlgNonconvex: return "AlgNonconvex";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (FamilyId id : all_families())
        if (family_name(id) == name) return id;
    return std::nullopt;
}

std::string sign_class_name(SignClass sc) {
    switch (sc) {
        case SignClass::nonnegative: return "nonnegative";
        case SignClass::squared_node: return "squared-node";
        case SignClass::sign_changing: return "sign-changing";
    }
    return "?";
}

bool Profile::compact() const { return std::isfinite(L); }

double Profile::scale_length() const {
    if (compact()) return L;
    return (beta > 0.0) ? 1.0 / beta : 1.0;
}

Profile make_profile(FamilyId family, const EquationParams& eq, const WaveParams& wave,
                     const std::map<std::string, double>& extras) {
    check_wave(eq, wave);
    const double kappa = kappa_of(eq, wave);
    const double ktol = kappa_zero_tol(eq, wave);
    const double a = eq.a, b = eq.b;
    const double n = eq.n.value(), m = eq.m.value();
    const Rational rn = eq.n, rm = eq.m;

    Profile pr;
    pr.family = family;
    pr.eq = eq;
    pr.wave = wave;
    pr.kappa = kappa;

    const auto lin_common = [&](const char* name) {
        require(rm == rn, std::string(name) + ": requires m=n");
        require(std::abs(kappa) <= ktol, std::string(name) + ": requires nu = s|mu|^2 (kappa=0)");
        require(same_sign(a, b), std::string(name) + ": requires sgn(a)=sgn(b)");
    };

    switch (family) {
        case FamilyId::LinCos: {
            check_extra_keys(extras, {"alpha"});
            lin_common("LinCos");
            const double alpha = get_extra(extras, "alpha", 1.0);
            require(alpha > 0.0, "LinCos: requires alpha > 0");
            const double omega = std::sqrt(a / b);
            pr.alpha = alpha;
            pr.beta = 0.5 * omega;
            pr.q = Rational(2) / rn;
            pr.L = kPi / omega;
            pr.p = pr.q;
            pr.U0plus = pr.U0minus = alpha * std::pow(pr.beta, pr.q.value());
            pr.sign_class = SignClass::nonnegative;
            pr.C2 = 0.5 * a * std::pow(alpha, n);
            break;
        }
        case FamilyId::LinSin: {
            check_extra_keys(extras, {"alpha"});
            lin_common("LinSin");
            const double alpha = get_extra(extras, "alpha", 1.0);
            require(alpha > 0.0, "LinSin: requires alpha > 0");
            const double omega = std::sqrt(a / b);
            pr.alpha = alpha;
            pr.beta = 0.5 * omega;
            pr.q = Rational(2) / rn;
            pr.sign_class = node_sign_class(pr.q, "LinSin");
            pr.L = 2.0 * kPi / omega;
            pr.p = pr.q;
            pr.U0plus = alpha * std::pow(pr.beta, pr.q.value());
            pr.U0minus = alpha * signed_pow(-1.0, pr.q) * std::pow(pr.beta, pr.q.value());
            pr.nodes = {0.0};
            pr.C2 = 0.5 * a * std::pow(alpha, n);
            break;
        }
        case FamilyId::LinMixed: {
            check_extra_keys(extras, {"alpha", "C3", "phase", "root_index"});
            lin_common("LinMixed");
            double alpha = get_extra(extras, "alpha", 1.0);
            double phase = get_extra(extras, "phase", 1.0);
            require(phase == 1.0 || phase == -1.0, "LinMixed: phase must be +1 or -1");
            if (extras.count("C3")) {
                require(!extras.count("alpha"), "LinMixed: give either alpha or C3, not both");
                const double C3 = extras.at("C3");
                require(C3 != 0.0, "LinMixed: requires C3 != 0");
                phase = (C3 > 0.0) ? phase : -phase;
                alpha = std::pow(std::abs(C3), 1.0 / n);
            }
            require(alpha > 0.0, "LinMixed: requires alpha > 0");
            const int root_index = static_cast<int>(get_extra(extras, "root_index", 1.0));
            require(root_index >= 1, "LinMixed: root_index must be >= 1");
            const double z = tan_fixed_points(root_index).back();
            const double omega = std::sqrt(a / b);
            pr.alpha = alpha;
            pr.beta = omega;
            pr.extra_phase = phase;
            pr.extra_root_index = root_index;
            pr.tan_root = z;
            pr.q = Rational(1) / rn;
            pr.sign_class = node_sign_class(pr.q, "LinMixed");
            pr.L = z / omega;
            pr.p = Rational(2) / rn;
            const double W0 = phase * 0.5 * omega * omega * std::sin(z);
            pr.U0plus = alpha * signed_pow(W0, pr.q);
            pr.U0minus = alpha * signed_pow(-W0, pr.q);
            pr.nodes = {0.0};
            pr.extra_C3 = phase * std::pow(alpha, n);
            pr.C1 = pr.extra_C3 * a * omega * std::cos(z);
            pr.C2 = 0.0;
            break;
        }
        case FamilyId::SolitarySech: {
            check_extra_keys(extras, {});
            require(rn == Rational(1), "SolitarySech: requires n=1");
            require(m > 1.0, "SolitarySech: requires m>1");
            double A, B;
            solitary_AB(eq, kappa, A, B);
            require(A > 0.0 && B > 0.0, "SolitarySech: requires sgn(A)=sgn(B)>0");
            pr.solitary_A = A;
            pr.solitary_B = B;
            pr.alpha = std::pow(B / A, 1.0 / (m - 1.0));
            pr.beta = 0.5 * (m - 1.0) * std::sqrt(B);
            pr.q = Rational(2) / (rm - Rational(1));
            pr.L = kInf;
            break;
        }
        case FamilyId::HeavyTailHi: {
            check_extra_keys(extras, {});
            require(rn == Rational(2) - rm, "HeavyTailHi: requires n=2-m");
            require(m > 1.0 && m < 2.0, "HeavyTailHi: requires 1<m<2");
            double A, B;
            solitary_AB(eq, kappa, A, B);
            require(A > 0.0 && B > 0.0, "HeavyTailHi: requires A>0 and B>0");
            pr.solitary_A = A;
            pr.solitary_B = B;
            pr.alpha = std::pow(B / A, 1.0 / (m - 1.0));
            // u = (A/B + gamma xi^2)^(-1/(m-1)), gamma = (m-1)^2 B / 4.
            pr.beta = 0.5 * (m - 1.0) * std::sqrt(B); // sqrt(gamma): tail scale
            pr.q = Rational(2) / (rm - Rational(1));  // algebraic decay power
            pr.L = kInf;
            break;
        }
        case FamilyId::SolitarySechSub: {
            check_extra_keys(extras, {});
            require(rn == rm, "SolitarySechSub: requires n=m");
            require(m < 1.0, "SolitarySechSub: requires m<1");
            double A, B;
            solitary_AB(eq, kappa, A, B);
            require(A < 0.0 && B < 0.0, "SolitarySechSub: requires A<0 and B<0");
            pr.solitary_A = A;
            pr.solitary_B = B;
            pr.alpha = std::pow(std::abs(A / B), 1.0 / (1.0 - m));
            pr.beta = 0.5 * (1.0 - m) * std::sqrt(std::abs(A));
            pr.q = Rational(2) / (Rational(1) - rm);
            pr.L = kInf;
            break;
        }
        case FamilyId::HeavyTailSub: {
            check_extra_keys(extras, {});
            require(rn == Rational(2) * rm - Rational(1), "HeavyTailSub: requires n=2m-1");
            require(m > 0.5 && m < 1.0, "HeavyTailSub: requires 1/2<m<1");
            double A, B;
            solitary_AB(eq, kappa, A, B);
            require(A < 0.0 && B < 0.0, "HeavyTailSub: requires A<0 and B<0");
            pr.solitary_A = A;
            pr.solitary_B = B;
            pr.alpha = std::pow(std::abs(A / B), 1.0 / (1.0 - m));
            // u = (|B/A| + gamma xi^2)^(-1/(1-m)), gamma = (1-m)^2 |A| / 4.
            pr.beta = 0.5 * (1.0 - m) * std::sqrt(std::abs(A));
            pr.q = Rational(2) / (Rational(1) - rm);
            pr.L = kInf;
            break;
        }
        case FamilyId::CosCompacton:
        case FamilyId::SinCompacton: {
            const char* name = (family == FamilyId::CosCompacton) ? "CosCompacton" : "SinCompacton";
            check_extra_keys(extras, {});
            require(rm == rn, std::string(name) + ": requires m=n");
            require(std::abs(kappa) > ktol, std::string(name) + ": requires kappa != 0");
            require(same_sign(kappa, a), std::string(name) + ": requires sgn(kappa)=sgn(a)");
            require(same_sign(a, b), std::string(name) + ": requires sgn(a)=sgn(b)");
            check_upper_window(n, kappa, b, name);
            const double omega = std::sqrt(a / b);
            pr.alpha = std::pow(2.0 * n * kappa / ((n + 1.0) * a), 1.0 / (n - 1.0));
            pr.beta = 0.5 * omega * (n - 1.0) / n;
            pr.q = Rational(2) / (rn - Rational(1));
            pr.p = pr.q;
            if (family == FamilyId::CosCompacton) {
                pr.L = 0.5 * kPi / pr.beta;
                pr.sign_class = SignClass::nonnegative;
                pr.U0plus = pr.U0minus = pr.alpha * std::pow(pr.beta, pr.q.value());
            } else {
                pr.sign_class = node_sign_class(pr.q, name);
                pr.L = kPi / pr.beta;
                pr.U0plus = pr.alpha * std::pow(pr.beta, pr.q.value());
                pr.U0minus = pr.alpha * signed_pow(-1.0, pr.q) * std::pow(pr.beta, pr.q.value());
                pr.nodes = {0.0};
            }
            break;
        }
        case FamilyId::CnZeroKappa:
        case FamilyId::SnZeroKappa: {
            const char* name = (family == FamilyId::CnZeroKappa) ? "CnZeroKappa" : "SnZeroKappa";
            check_extra_keys(extras, {"alpha"});
            require(rm == Rational(2) * rn, std::string(name) + ": requires m=2n");
            require(std::abs(kappa) <= ktol,
                    std::string(name) + ": requires nu = s|mu|^2 (kappa=0)");
            require(same_sign(a, b), std::string(name) + ": requires sgn(a)=sgn(b)");
            const double alpha = get_extra(extras, "alpha", 1.0);
            require(alpha != 0.0, std::string(name) + ": requires alpha != 0");
            const double alpha_n = signed_pow(alpha, rn);
            const double denom = (family == FamilyId::CnZeroKappa) ? 3.0 : 6.0;
            const double beta2 = a * alpha_n / (denom * b);
            require(beta2 > 0.0, std::string(name) + ": requires a*alpha^n/b > 0");
            pr.alpha = alpha;
            pr.beta = std::sqrt(beta2);
            pr.q = Rational(2) / rn;
            pr.p = pr.q;
            pr.C2 = a * alpha_n * alpha_n / 3.0;
            if (family == FamilyId::CnZeroKappa) {
                pr.modulus = {ModulusKind::real, kInvSqrt2};
                pr.L = elliptic_K(kInvSqrt2) / pr.beta;
                pr.sign_class = SignClass::nonnegative;
                pr.U0plus = pr.U0minus = alpha * std::pow(pr.beta * kInvSqrt2, pr.q.value());
            } else {
                pr.modulus = {ModulusKind::imaginary, 1.0};
                pr.sign_class = node_sign_class(pr.q, name);
                pr.L = 2.0 * elliptic_K_imag(1.0) / pr.beta;
                pr.U0plus = alpha * std::pow(pr.beta, pr.q.value());
                pr.U0minus = alpha * signed_pow(-1.0, pr.q) * std::pow(pr.beta, pr.q.value());
                pr.nodes = {0.0};
            }
            break;
        }
        case FamilyId::AlgZeroKappa: {
            check_extra_keys(extras, {"alpha"});
            require(rm == rn / Rational(2), "AlgZeroKappa: requires m=n/2");
            require(std::abs(kappa) <= ktol, "AlgZeroKappa: requires nu = s|mu|^2 (kappa=0)");
            require(same_sign(a, b), "AlgZeroKappa: requires sgn(a)=sgn(b)");
            const double alpha = get_extra(extras, "alpha", 1.0);
            require(alpha != 0.0, "AlgZeroKappa: requires alpha != 0");
            const double alpha_half_n = signed_pow(alpha, rn / Rational(2));
            const double beta = a / (12.0 * b * alpha_half_n);
            require(beta > 0.0, "AlgZeroKappa: requires a/(b*alpha^(n/2)) > 0");
            pr.alpha = alpha;
            pr.beta = beta;
            pr.q = Rational(2) / rn;
            pr.p = pr.q;
            pr.L = 1.0 / std::sqrt(beta);
            pr.sign_class = SignClass::nonnegative;
            pr.U0plus = pr.U0minus = alpha * std::pow(2.0 * std::sqrt(beta), pr.q.value());
            pr.C2 = 2.0 * a * alpha_half_n / 3.0;
            break;
        }
        case FamilyId::CnGeneral:
        case FamilyId::SnGeneral: {
            const char* name = (family == FamilyId::CnGeneral) ? "CnGeneral" : "SnGeneral";
            check_extra_keys(extras, {});
            require(rm == Rational(2) * rn - Rational(1), std::string(name) + ": requires m=2n-1");
            require(b > 0.0, std::string(name) + ": requires b > 0");
            require(std::abs(kappa) > ktol, std::string(name) + ": requires kappa != 0");
            require(same_sign(kappa, a), std::string(name) + ": requires sgn(kappa)=sgn(a)");
            require(same_sign(kappa, b), std::string(name) + ": requires sgn(kappa)=sgn(b) (B>0)");
            check_upper_window(n, kappa, b, name);
            const double amp_base = (3.0 * n - 1.0) * kappa / ((n + 1.0) * a);
            pr.alpha = std::pow(amp_base, 1.0 / (2.0 * (n - 1.0)));
            const double quartic = std::pow(a * kappa / ((n + 1.0) * (3.0 * n - 1.0)), 0.25);
            pr.q = Rational(2) / (rn - Rational(1));
            pr.p = pr.q;
            if (family == FamilyId::CnGeneral) {
                pr.beta = (n - 1.0) / std::sqrt(n * b) * quartic;
                pr.modulus = {ModulusKind::real, kInvSqrt2};
                pr.L = elliptic_K(kInvSqrt2) / pr.beta;
                pr.sign_class = SignClass::nonnegative;
                pr.U0plus = pr.U0minus = pr.alpha * std::pow(pr.beta * kInvSqrt2, pr.q.value());
            } else {
                pr.beta = (n - 1.0) / std::sqrt(2.0 * n * b) * quartic;
                pr.modulus = {ModulusKind::imaginary, 1.0};
                pr.sign_class = node_sign_class(pr.q, name);
                pr.L = 2.0 * elliptic_K_imag(1.0) / pr.beta;
                pr.U0plus = pr.alpha * std::pow(pr.beta, pr.q.value());
                pr.U0minus = pr.alpha * signed_pow(-1.0, pr.q) * std::pow(pr.beta, pr.q.value());
                pr.nodes = {0.0};
            }
            break;
        }
        case FamilyId::CnNegB:
        case FamilyId::SnNegB: {
            const char* name = (family == FamilyId::CnNegB) ? "CnNegB" : "SnNegB";
            check_extra_keys(extras, {});
            require(rm == Rational(2) * rn - Rational(1), std::string(name) + ": requires m=2n-1");
            require(b < 0.0, std::string(name) + ": requires b < 0");
            require(n < 1.0, std::string(name) + ": requires 1>n>m");
            require(std::abs(kappa) > ktol, std::string(name) + ": requires kappa != 0");
            const double sign_prod = (kappa > 0.0 ? 1.0 : -1.0) * (a > 0.0 ? 1.0 : -1.0);
            const double sign_n13 = (n > 1.0 / 3.0) ? 1.0 : -1.0;
            require(sign_prod == sign_n13,
                    std::string(name) + ": requires sgn(kappa)sgn(a)=sgn(n-1/3)");
            require(kappa > 0.0, std::string(name) + ": requires kappa>0 (B<0 with b<0)");
            require(a > 0.0, std::string(name) + ": requires a>0 (A<0 with b<0)");
            const double amp_base = (3.0 * n - 1.0) * kappa / ((n + 1.0) * a);
            pr.alpha = std::pow(amp_base, 1.0 / (2.0 * (n - 1.0)));
            const double quartic = std::pow(a * kappa / ((n + 1.0) * (3.0 * n - 1.0)), 0.25);
            pr.q = Rational(2) / (Rational(1) - rn);
            pr.p = pr.q;
            if (family == FamilyId::CnNegB) {
                pr.beta = (1.0 - n) / std::sqrt(n * std::abs(b)) * quartic;
                pr.modulus = {ModulusKind::real, kInvSqrt2};
                pr.L = elliptic_K(kInvSqrt2) / pr.beta;
                pr.sign_class = SignClass::nonnegative;
                pr.U0plus = pr.U0minus = pr.alpha * std::pow(pr.beta * kInvSqrt2, pr.q.value());
            } else {
                pr.beta = (1.0 - n) / std::sqrt(2.0 * n * std::abs(b)) * quartic;
                pr.modulus = {ModulusKind::imaginary, 1.0};
                pr.sign_class = node_sign_class(pr.q, name);
                pr.L = 2.0 * elliptic_K_imag(1.0) / pr.beta;
                pr.U0plus = pr.alpha * std::pow(pr.beta, pr.q.value());
                pr.U0minus = pr.alpha * signed_pow(-1.0, pr.q) * std::pow(pr.beta, pr.q.value());
                pr.nodes = {0.0};
            }
            break;
        }
        case FamilyId::AlgGeneral: {
            check_extra_keys(extras, {});
            require(rm == (rn + Rational(1)) / Rational(2), "AlgGeneral: requires m=(n+1)/2");
            require(std::abs(kappa) > ktol, "AlgGeneral: requires kappa != 0");
            require(same_sign(kappa, a), "AlgGeneral: requires sgn(kappa)=sgn(a)");
            require(same_sign(a, b), "AlgGeneral: requires sgn(a)=sgn(b)");
            check_upper_window(n, kappa, b, "AlgGeneral");
            const double t = 3.0 * n + 1.0;
            pr.alpha = std::pow(t * kappa / (2.0 * (n + 1.0) * a), 2.0 / (n - 1.0));
            pr.beta = (n - 1.0) * (n - 1.0) * (n + 1.0) * a * a /
                      (2.0 * t * t * kappa * n * b);
            require(pr.beta > 0.0, "AlgGeneral: requires kappa*b > 0");
            pr.q = Rational(2) / (rn - Rational(1));
            pr.p = pr.q;
            pr.L = 1.0 / std::sqrt(pr.beta);
            pr.sign_class = SignClass::nonnegative;
            pr.U0plus = pr.U0minus = pr.alpha * std::pow(2.0 * std::sqrt(pr.beta), pr.q.value());
            break;
        }
        case FamilyId::AlgNonconvex: {
            check_extra_keys(extras, {});
            require(rm == Rational(2) - rn, "AlgNonconvex: requires m=2-n");
            require(n > 1.0 && n < 2.0, "AlgNonconvex: requires 2>n>1");
            require(std::abs(kappa) > ktol, "AlgNonconvex: requires kappa != 0");
            require(same_sign(kappa, a), "AlgNonconvex: requires sgn(kappa)=sgn(a)");
            require(!same_sign(a, b), "AlgNonconvex: requires sgn(a)=-sgn(b)");
            pr.alpha = std::pow((n + 1.0) * a / (2.0 * kappa), 1.0 / (n - 1.0));
            pr.beta = (n - 1.0) * (n - 1.0) * kappa * kappa /
                      (n * (n + 1.0) * (n + 1.0) * std::abs(a * b));
            pr.q = Rational(1) / (rn - Rational(1));
            pr.p = pr.q;
            pr.L = 1.0 / std::sqrt(pr.beta);
            pr.sign_class = SignClass::nonnegative;
            pr.U0plus = pr.U0minus = pr.alpha * std::pow(2.0 * std::sqrt(pr.beta), pr.q.value());
            break;
        }
    }

    return pr;
}

namespace {

// Raw oscillator base f(xi) whose q-th power gives u/alpha.
double family_base(const Profile& pr, double xi) {
    switch (pr.family) {
        case FamilyId::LinCos:
        case FamilyId::CosCompacton:
            return std::cos(pr.beta * xi);
        case FamilyId::LinSin:
        case FamilyId::SinCompacton:
            return std::sin(pr.beta * xi);
        case FamilyId::CnZeroKappa:
        case FamilyId::CnGeneral:
        case FamilyId::CnNegB:
            return jacobi_cn(pr.beta * xi, kInvSqrt2);
        case FamilyId::SnZeroKappa:
        case FamilyId::SnGeneral:
        case FamilyId::SnNegB:
            return jacobi_sn_imag(pr.beta * xi, 1.0);
        case FamilyId::AlgZeroKappa:
        case FamilyId::AlgGeneral:
        case FamilyId::AlgNonconvex:
            return 1.0 - pr.beta * xi * xi;
        case FamilyId::LinMixed: {
            const double omega = pr.beta;
            return pr.extra_phase *
                   (std::cos(pr.tan_root) * omega * xi - std::sin(omega * xi));
        }
        default:
            return 0.0;
    }
}

bool has_nodes(const Profile& pr) { return !pr.nodes.empty(); }

} // namespace

double evaluate(const Profile& pr, double xi) {
    switch (pr.family) {
        case FamilyId::SolitarySech:
        case FamilyId::SolitarySechSub: {
            const double s = 1.0 / std::cosh(pr.beta * xi);
            return pr.alpha * std::pow(s, pr.q.value());
        }
        case FamilyId::HeavyTailHi: {
            const double m = pr.eq.m.value();
            const double A = pr.solitary_A, B = pr.solitary_B;
            const double g = 0.25 * (m - 1.0) * (m - 1.0) * B;
            return std::pow(A / B + g * xi * xi, -1.0 / (m - 1.0));
        }
        case FamilyId::HeavyTailSub: {
            const double m = pr.eq.m.value();
            const double A = std::abs(pr.solitary_A), B = std::abs(pr.solitary_B);
            const double g = 0.25 * (1.0 - m) * (1.0 - m) * A;
            return std::pow(B / A + g * xi * xi, -1.0 / (1.0 - m));
        }
        default:
            break;
    }

    if (std::abs(xi) >= pr.L) return 0.0;
    double base = family_base(pr, xi);
    if (!has_nodes(pr) && base < 0.0) {
        // Analytically base >= 0 inside the support; a negative value can
        // only be edge rounding.
        return 0.0;
    }
    return pr.alpha * signed_pow(base, pr.q);
}

double evaluate_power(const Profile& pr, double xi, const Rational& r) {
    if (!pr.compact()) {
        const double u = evaluate(pr, xi);
        return (u == 0.0 && r.positive()) ? 0.0 : std::pow(u, r.value());
    }
    if (std::abs(xi) >= pr.L) return 0.0;
    double base = family_base(pr, xi);
    if (!has_nodes(pr) && base < 0.0) return 0.0;
    const Rational qr = pr.q * r;
    return signed_pow(pr.alpha, r) * signed_pow(base, qr);
}

double evaluate_V(const Profile& pr, double xi) { return evaluate_power(pr, xi, pr.eq.n); }

double evaluate_field(const Profile& pr, double t, double x, const std::vector<double>& y) {
    if (y.size() != pr.wave.mu.size())
        throw DimensionMismatch("evaluate_field: y must have length N-1");
    double xi = x - pr.wave.nu * t;
    for (std::size_t i = 0; i < y.size(); ++i) xi += pr.wave.mu[i] * y[i];
    return evaluate(pr, xi);
}

void sample_profile(const Profile& pr, const std::vector<double>& xi,
                    std::vector<double>& out, Execution exec) {
    out.resize(xi.size());
    parallel_for(xi.size(), [&](std::size_t i) { out[i] = evaluate(pr, xi[i]); }, exec);
}

std::vector<AdmissibleFamily> catalog_admissible(const EquationParams& eq,
                                                 const WaveParams& wave) {
    std::vector<AdmissibleFamily> result;
    for (FamilyId id : all_families()) {
        try {
            (void)make_profile(id, eq, wave);
        } catch (const Error&) {
            continue;
        }
        std::string note;
        switch (id) {
            case FamilyId::LinCos:
            case FamilyId::LinSin:
                note = "alpha > 0 free";
                break;
            case FamilyId::LinMixed:
                note = "alpha > 0, phase = +-1, root_index >= 1 free";
                break;
            case FamilyId::CnZeroKappa:
            case FamilyId::SnZeroKappa:
            case FamilyId::AlgZeroKappa:
                note = "alpha != 0 free (a*alpha^n/b > 0)";
                break;
            default:
                note = "fully determined by equation and wave parameters";
                break;
        }
        result.push_back({id, note});
    }
    return result;
}

} // namespace kpmn
