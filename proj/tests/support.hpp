#ifndef KPMN_TESTS_SUPPORT_HPP
#define KPMN_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "kpmn/families.hpp"
#include "kpmn/params.hpp"

namespace kpmn::testsupport {

struct Draw {
    EquationParams eq;
    WaveParams wave;
    std::map<std::string, double> extras;
};

inline double uni(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

template <typename T>
inline T pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline int pick_sign(std::mt19937_64& rng) {
    return std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
}

// Wave parameters with the requested kappa: nu = s|mu|^2 + kappa.
// Dimension N in {1,2,3} per `dim`.
inline WaveParams wave_with_kappa(std::mt19937_64& rng, int s, double kappa, int dim) {
    WaveParams w;
    if (dim >= 2) w.mu.push_back(uni(rng, 0.1, 1.4));
    if (dim >= 3) w.mu.push_back(uni(rng, 0.1, 1.4));
    w.nu = s * w.mu_norm2() + kappa;
    return w;
}

inline int draw_dim(std::mt19937_64& rng) {
    const int r = std::uniform_int_distribution<int>(0, 3)(rng);
    return (r == 0) ? 3 : 2;
}

// A valid random parameter set for the family; every returned draw
// constructs successfully.
inline Draw draw_valid(FamilyId family, std::mt19937_64& rng) {
    using R = Rational;
    Draw d;
    const int s = pick_sign(rng);
    const int dim = draw_dim(rng);
    const double mag_a = uni(rng, 0.5, 2.0);
    const double mag_b = uni(rng, 0.5, 2.0);
    const double mag_k = uni(rng, 0.3, 1.5);

    switch (family) {
        case FamilyId::LinCos: {
            const R n = pick<R>(rng, {{1, 3}, {2, 5}, {1, 2}, {2, 3}, {2, 1}, {5, 2}, {3, 1}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, n, n, dim);
            d.wave = wave_with_kappa(rng, s, 0.0, dim);
            d.extras["alpha"] = uni(rng, 0.5, 2.0);
            break;
        }
        case FamilyId::LinSin: {
            // den(2/n) must be odd: numerator of n odd, or = 2 mod 4.
            const R n = pick<R>(rng, {{1, 3}, {3, 5}, {2, 5}, {2, 3}, {5, 3}, {2, 1}, {3, 1}, {6, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, n, n, dim);
            d.wave = wave_with_kappa(rng, s, 0.0, dim);
            d.extras["alpha"] = uni(rng, 0.5, 2.0);
            break;
        }
        case FamilyId::LinMixed: {
            // den(1/n) = num(n) must be odd.
            const R n = pick<R>(rng, {{1, 3}, {1, 5}, {3, 7}, {5, 3}, {1, 2}, {3, 1}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, n, n, dim);
            d.wave = wave_with_kappa(rng, s, 0.0, dim);
            d.extras["alpha"] = uni(rng, 0.5, 2.0);
            d.extras["phase"] = pick_sign(rng);
            d.extras["root_index"] = std::uniform_int_distribution<int>(1, 3)(rng);
            break;
        }
        case FamilyId::CosCompacton: {
            const R n = pick<R>(rng, {{6, 5}, {4, 3}, {3, 2}, {2, 1}, {5, 2}, {7, 3}, {14, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, n, n, dim);
            d.wave = wave_with_kappa(rng, s, sg * mag_k, dim);
            break;
        }
        case FamilyId::SinCompacton: {
            // den(2/(n-1)) must be odd.
            const R n = pick<R>(rng, {{2, 1}, {3, 2}, {5, 3}, {7, 5}, {12, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, n, n, dim);
            d.wave = wave_with_kappa(rng, s, sg * mag_k, dim);
            break;
        }
        case FamilyId::CnZeroKappa: {
            const R n = pick<R>(rng, {{2, 3}, {3, 2}, {2, 1}, {3, 1}, {4, 3}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, R(2) * n, n, dim);
            d.wave = wave_with_kappa(rng, s, 0.0, dim);
            d.extras["alpha"] = uni(rng, 0.5, 2.0);
            break;
        }
        case FamilyId::SnZeroKappa: {
            // den(2/n) odd and n != 1/2 (m=2n must differ from 1).
            const R n = pick<R>(rng, {{2, 3}, {3, 2}, {2, 1}, {3, 1}, {6, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, R(2) * n, n, dim);
            d.wave = wave_with_kappa(rng, s, 0.0, dim);
            d.extras["alpha"] = uni(rng, 0.5, 2.0);
            break;
        }
        case FamilyId::AlgZeroKappa: {
            const R n = pick<R>(rng, {{4, 1}, {3, 1}, {4, 3}, {8, 3}, {6, 1}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, n / R(2), n, dim);
            d.wave = wave_with_kappa(rng, s, 0.0, dim);
            d.extras["alpha"] = uni(rng, 0.5, 2.0);
            break;
        }
        case FamilyId::CnGeneral:
        case FamilyId::SnGeneral: {
            const R n = pick<R>(rng, {{6, 5}, {4, 3}, {3, 2}, {2, 1}, {5, 2}, {5, 3}});
            d.eq = make_equation(mag_a, mag_b, s, R(2) * n - R(1), n, dim);
            d.wave = wave_with_kappa(rng, s, mag_k, dim);
            break;
        }
        case FamilyId::CnNegB:
        case FamilyId::SnNegB: {
            const R n = pick<R>(rng, {{3, 5}, {2, 3}, {3, 4}, {4, 5}});
            d.eq = make_equation(mag_a, -mag_b, s, R(2) * n - R(1), n, dim);
            d.wave = wave_with_kappa(rng, s, mag_k, dim);
            break;
        }
        case FamilyId::AlgGeneral: {
            const R n = pick<R>(rng, {{4, 3}, {3, 2}, {2, 1}, {5, 2}, {7, 3}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, (n + R(1)) / R(2), n, dim);
            d.wave = wave_with_kappa(rng, s, sg * mag_k, dim);
            break;
        }
        case FamilyId::AlgNonconvex: {
            const R n = pick<R>(rng, {{6, 5}, {4, 3}, {3, 2}, {5, 3}, {9, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, -sg * mag_b, s, R(2) - n, n, dim);
            d.wave = wave_with_kappa(rng, s, sg * mag_k, dim);
            break;
        }
        case FamilyId::SolitarySech: {
            const R m = pick<R>(rng, {{3, 2}, {2, 1}, {5, 2}, {3, 1}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, m, R(1), dim);
            d.wave = wave_with_kappa(rng, s, sg * mag_k, dim);
            break;
        }
        case FamilyId::HeavyTailHi: {
            const R m = pick<R>(rng, {{6, 5}, {3, 2}, {9, 5}, {7, 4}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(sg * mag_a, sg * mag_b, s, m, R(2) - m, dim);
            d.wave = wave_with_kappa(rng, s, sg * mag_k, dim);
            break;
        }
        case FamilyId::SolitarySechSub: {
            const R m = pick<R>(rng, {{1, 3}, {1, 2}, {2, 3}, {4, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(-sg * mag_a, sg * mag_b, s, m, m, dim);
            d.wave = wave_with_kappa(rng, s, -sg * mag_k, dim);
            break;
        }
        case FamilyId::HeavyTailSub: {
            const R m = pick<R>(rng, {{3, 5}, {2, 3}, {3, 4}, {4, 5}});
            const int sg = pick_sign(rng);
            d.eq = make_equation(-sg * mag_a, sg * mag_b, s, m, R(2) * m - R(1), dim);
            d.wave = wave_with_kappa(rng, s, -sg * mag_k, dim);
            break;
        }
    }
    return d;
}

inline Profile draw_profile(FamilyId family, std::mt19937_64& rng) {
    const Draw d = draw_valid(family, rng);
    return make_profile(family, d.eq, d.wave, d.extras);
}

inline const std::vector<FamilyId>& compact_families() {
    static const std::vector<FamilyId> ids = {
        FamilyId::LinCos,      FamilyId::LinSin,      FamilyId::LinMixed,
        FamilyId::CosCompacton, FamilyId::SinCompacton, FamilyId::CnZeroKappa,
        FamilyId::SnZeroKappa, FamilyId::AlgZeroKappa, FamilyId::CnGeneral,
        FamilyId::SnGeneral,   FamilyId::CnNegB,       FamilyId::SnNegB,
        FamilyId::AlgGeneral,  FamilyId::AlgNonconvex};
    return ids;
}

inline const std::vector<FamilyId>& solitary_families() {
    static const std::vector<FamilyId> ids = {
        FamilyId::SolitarySech, FamilyId::HeavyTailHi, FamilyId::SolitarySechSub,
        FamilyId::HeavyTailSub};
    return ids;
}

} // namespace kpmn::testsupport

#endif
