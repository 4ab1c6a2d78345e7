#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kpmn/families.hpp"
#include "kpmn/params.hpp"
#include "kpmn/specfun.hpp"
#include "support.hpp"

using namespace kpmn;
using namespace kpmn::testsupport;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("cosine compacton: paper instance a=b=1, m=n=2, kappa=3/4") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
    const WaveParams w{{1.0}, 1.75};
    const auto pr = make_profile(FamilyId::CosCompacton, eq, w);
    CHECK(pr.alpha == doctest::Approx(1.0));
    CHECK(pr.L == doctest::Approx(2.0 * kPi));
    CHECK(pr.p.value() == doctest::Approx(2.0));
    CHECK(evaluate(pr, 0.0) == doctest::Approx(1.0));
    // u = cos(xi/4)^2 on the support
    for (double xi : {0.4, 1.7, 4.0})
        CHECK(evaluate(pr, xi) ==
              doctest::Approx(std::pow(std::cos(xi / 4.0), 2.0)).epsilon(1e-14));
    CHECK(evaluate(pr, 2.0 * pr.L) == 0.0);
    CHECK(evaluate(pr, -2.0 * pr.L) == 0.0);
    CHECK(std::abs(evaluate(pr, pr.L * (1.0 - 1e-12))) < 1e-10);
}

TEST_CASE("solitary sech: a=b=1, n=1, m=2, kappa=1 gives 1.5 sech^2(xi/2)") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(1), 2);
    const WaveParams w{{1.0}, 2.0};
    const auto pr = make_profile(FamilyId::SolitarySech, eq, w);
    CHECK(pr.solitary_B == doctest::Approx(1.0));
    CHECK(pr.solitary_A == doctest::Approx(2.0 / 3.0));
    CHECK(evaluate(pr, 0.0) == doctest::Approx(1.5));
    CHECK(evaluate(pr, 3.0) ==
          doctest::Approx(1.5 / std::pow(std::cosh(1.5), 2.0)).epsilon(1e-14));
    CHECK_FALSE(pr.compact());
}

TEST_CASE("heavy tail peaks") {
    SUBCASE("m=9/5, A=1/2, B=2 gives U(0) = 4^(5/4)") {
        // A = 5a/b, B = 25 kappa/(3b) for n = 1/5.
        const auto eq = make_equation(0.1, 1.0, 1, Rational(9, 5), Rational(1, 5), 2);
        const WaveParams w{{0.5}, 0.25 + 0.24};
        const auto pr = make_profile(FamilyId::HeavyTailHi, eq, w);
        CHECK(pr.solitary_A == doctest::Approx(0.5));
        CHECK(pr.solitary_B == doctest::Approx(2.0));
        CHECK(evaluate(pr, 0.0) == doctest::Approx(std::pow(4.0, 1.25)).epsilon(1e-12));
    }
    SUBCASE("m=1/3, A=-3/2, B=-1 gives the sub-linear sech peak |A/B|^(1/(1-m))") {
        const auto eq = make_equation(-1.0 / 6.0, 1.0, 1, Rational(1, 3), Rational(1, 3), 2);
        const WaveParams w{{0.5}, 0.25 - 2.0 / 9.0};
        const auto pr = make_profile(FamilyId::SolitarySechSub, eq, w);
        CHECK(pr.solitary_A == doctest::Approx(-1.5));
        CHECK(pr.solitary_B == doctest::Approx(-1.0));
        CHECK(evaluate(pr, 0.0) == doctest::Approx(std::pow(1.5, 1.5)).epsilon(1e-12));
    }
}

TEST_CASE("sign classes") {
    const WaveParams w{{1.0}, 1.75};
    SUBCASE("SinCompacton n=2: q=2 even numerator -> squared node") {
        const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
        const auto pr = make_profile(FamilyId::SinCompacton, eq, w);
        CHECK(pr.sign_class == SignClass::squared_node);
        CHECK(evaluate(pr, -0.7 * pr.L) >= 0.0);
        CHECK(evaluate(pr, 0.7 * pr.L) >= 0.0);
        CHECK(evaluate(pr, 0.0) == 0.0);
    }
    SUBCASE("SinCompacton n=5/3: q=3 odd/odd -> sign-changing") {
        const auto eq = make_equation(1, 1, 1, Rational(5, 3), Rational(5, 3), 2);
        const auto pr = make_profile(FamilyId::SinCompacton, eq, w);
        CHECK(pr.sign_class == SignClass::sign_changing);
        CHECK(evaluate(pr, 0.3 * pr.L) > 0.0);
        CHECK(evaluate(pr, -0.3 * pr.L) < 0.0);
    }
    SUBCASE("LinSin n=9/5: q=10/9 even denominator -> ParityError") {
        const auto eq = make_equation(1, 1, 1, Rational(9, 5), Rational(9, 5), 2);
        CHECK_THROWS_AS(make_profile(FamilyId::LinSin, eq, WaveParams{{1.0}, 1.0}),
                        ParityError);
    }
}

TEST_CASE("validity errors name the violated predicate") {
    const auto eq22 = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
    SUBCASE("CnZeroKappa with kappa != 0") {
        const auto eq = make_equation(1, 1, 1, Rational(4), Rational(2), 2);
        CHECK_THROWS_WITH_AS(make_profile(FamilyId::CnZeroKappa, eq, WaveParams{{1.0}, 1.5}),
                             doctest::Contains("kappa=0"), ValidityError);
    }
    SUBCASE("CosCompacton sign condition") {
        CHECK_THROWS_WITH_AS(
            make_profile(FamilyId::CosCompacton, eq22, WaveParams{{1.0}, 1.0 - 0.5}),
            doctest::Contains("sgn(kappa)=sgn(a)"), ValidityError);
    }
    SUBCASE("CosCompacton window") {
        const auto eq5 = make_equation(1, 1, 1, Rational(5), Rational(5), 2);
        CHECK_THROWS_WITH_AS(
            make_profile(FamilyId::CosCompacton, eq5, WaveParams{{1.0}, 1.75}),
            doctest::Contains("1<n<3"), ValidityError);
    }
    SUBCASE("wrong power relation") {
        CHECK_THROWS_AS(make_profile(FamilyId::CnZeroKappa, eq22, WaveParams{{1.0}, 1.0}),
                        ValidityError);
        CHECK_THROWS_AS(make_profile(FamilyId::HeavyTailHi, eq22, WaveParams{{1.0}, 1.75}),
                        ValidityError);
    }
    SUBCASE("unknown extras are rejected") {
        CHECK_THROWS_AS(
            make_profile(FamilyId::CosCompacton, eq22, WaveParams{{1.0}, 1.75},
                         {{"bogus", 1.0}}),
            DomainError);
    }
}

TEST_CASE("field evaluation") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
    const WaveParams w{{1.0}, 1.75};
    const auto pr = make_profile(FamilyId::CosCompacton, eq, w);

    SUBCASE("t=0, y=0 reduces to the profile") {
        for (double x : {0.0, 0.5, 2.0})
            CHECK(evaluate_field(pr, 0.0, x, {0.0}) == doctest::Approx(evaluate(pr, x)));
    }
    SUBCASE("translation invariance along the wave") {
        for (double d : {0.1, 0.7}) {
            CHECK(evaluate_field(pr, 0.3 + d, 1.0 + w.nu * d, {0.4}) ==
                  doctest::Approx(evaluate_field(pr, 0.3, 1.0, {0.4})).epsilon(1e-12));
        }
    }
    SUBCASE("N=3: xi = x + mu.y - nu t") {
        const auto eq3 = make_equation(1, 1, 1, Rational(2), Rational(2), 3);
        const WaveParams w3{{1.0, 1.0}, 2.0 + 0.75};
        const auto pr3 = make_profile(FamilyId::CosCompacton, eq3, w3);
        CHECK(evaluate_field(pr3, 0.0, 1.0, {1.0, 1.0}) ==
              doctest::Approx(evaluate(pr3, 3.0)));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(evaluate_field(pr, 0.0, 1.0, {1.0, 2.0}), DimensionMismatch);
    }
}

TEST_CASE("symmetry per family") {
    std::mt19937_64 rng(21);
    const std::vector<FamilyId> even = {FamilyId::LinCos, FamilyId::CosCompacton,
                                        FamilyId::CnZeroKappa, FamilyId::CnGeneral,
                                        FamilyId::CnNegB, FamilyId::AlgZeroKappa,
                                        FamilyId::AlgGeneral, FamilyId::AlgNonconvex};
    for (FamilyId id : even) {
        const auto pr = draw_profile(id, rng);
        for (double f : {0.2, 0.5, 0.8})
            CHECK(evaluate(pr, f * pr.L) ==
                  doctest::Approx(evaluate(pr, -f * pr.L)).epsilon(1e-12));
    }
    const std::vector<FamilyId> oddish = {FamilyId::LinSin, FamilyId::SinCompacton,
                                          FamilyId::SnZeroKappa, FamilyId::SnGeneral,
                                          FamilyId::SnNegB, FamilyId::LinMixed};
    for (FamilyId id : oddish) {
        const auto pr = draw_profile(id, rng);
        const double parity =
            (pr.sign_class == SignClass::sign_changing) ? -1.0 : 1.0;
        for (double f : {0.2, 0.5, 0.8})
            CHECK(evaluate(pr, f * pr.L) ==
                  doctest::Approx(parity * evaluate(pr, -f * pr.L)).epsilon(1e-12));
    }
}

TEST_CASE("kappa-invariance: equal kappa gives pointwise-identical profiles") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
    const double kappa = 0.6;
    const WaveParams w1{{0.5}, 0.25 + kappa};
    const WaveParams w2{{1.5}, 2.25 + kappa};
    const auto p1 = make_profile(FamilyId::CosCompacton, eq, w1);
    const auto p2 = make_profile(FamilyId::CosCompacton, eq, w2);
    CHECK(p1.L == doctest::Approx(p2.L).epsilon(1e-14));
    for (double xi = -p1.L; xi <= p1.L; xi += p1.L / 7.0)
        CHECK(evaluate(p1, xi) == doctest::Approx(evaluate(p2, xi)).epsilon(1e-14));
}

TEST_CASE("scaling relations in kappa") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
    SUBCASE("cosine: height ~ kappa^(1/(n-1)), width independent of kappa") {
        const auto p1 = make_profile(FamilyId::CosCompacton, eq, {{0.5}, 0.25 + 0.4});
        const auto p2 = make_profile(FamilyId::CosCompacton, eq, {{0.5}, 0.25 + 1.2});
        CHECK(p2.L == doctest::Approx(p1.L));
        CHECK(evaluate(p2, 0.0) / evaluate(p1, 0.0) ==
              doctest::Approx(std::pow(1.2 / 0.4, 1.0)).epsilon(1e-12)); // 1/(n-1)=1
    }
    SUBCASE("general algebraic: width ~ sqrt(kappa)") {
        const auto eqa = make_equation(1, 1, 1, Rational(3, 2), Rational(2), 2);
        const auto p1 = make_profile(FamilyId::AlgGeneral, eqa, {{0.5}, 0.25 + 0.4});
        const auto p2 = make_profile(FamilyId::AlgGeneral, eqa, {{0.5}, 0.25 + 1.6});
        CHECK(p2.L / p1.L == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("cn general: width ~ kappa^(-1/4)") {
        const auto eqc = make_equation(1, 1, 1, Rational(9, 5), Rational(7, 5), 2);
        const auto p1 = make_profile(FamilyId::CnGeneral, eqc, {{0.5}, 0.25 + 0.4});
        const auto p2 = make_profile(FamilyId::CnGeneral, eqc, {{0.5}, 0.25 + 6.4});
        CHECK(p1.L / p2.L == doctest::Approx(2.0).epsilon(1e-12)); // 16^(1/4)
    }
    SUBCASE("kappa=0 types: height ~ 1/L^(2/n) (cn) and 1/L^(4/n) (algebraic)") {
        const auto eqz = make_equation(1, 1, 1, Rational(4), Rational(2), 2);
        const auto c1 = make_profile(FamilyId::CnZeroKappa, eqz, {{1.0}, 1.0}, {{"alpha", 1.0}});
        const auto c2 = make_profile(FamilyId::CnZeroKappa, eqz, {{1.0}, 1.0}, {{"alpha", 2.0}});
        // alpha = height; L ~ alpha^(-n/2): height ratio = (L1/L2)^(2/n)
        CHECK(c2.alpha / c1.alpha ==
              doctest::Approx(std::pow(c1.L / c2.L, 2.0 / 2.0)).epsilon(1e-12));
        const auto eqa = make_equation(1, 1, 1, Rational(2), Rational(4), 2);
        const auto a1 = make_profile(FamilyId::AlgZeroKappa, eqa, {{1.0}, 1.0}, {{"alpha", 1.0}});
        const auto a2 = make_profile(FamilyId::AlgZeroKappa, eqa, {{1.0}, 1.0}, {{"alpha", 2.0}});
        CHECK(a2.alpha / a1.alpha ==
              doctest::Approx(std::pow(a1.L / a2.L, 4.0 / 4.0)).epsilon(1e-12));
    }
}

TEST_CASE("LinMixed structure") {
    const auto eq = make_equation(1, 1, 1, Rational(1, 3), Rational(1, 3), 2);
    const WaveParams w{{1.0}, 1.0};
    const auto pr = make_profile(FamilyId::LinMixed, eq, w,
                                 {{"alpha", 1.0}, {"root_index", 1.0}});
    CHECK(pr.L == doctest::Approx(4.4934094579).epsilon(1e-9));
    CHECK(std::abs(evaluate(pr, pr.L * (1 - 1e-13))) < 1e-12);
    CHECK(std::abs(evaluate(pr, -pr.L * (1 - 1e-13))) < 1e-12);
    CHECK(evaluate(pr, 0.0) == 0.0); // interior node at the origin
    SUBCASE("second root index scales L") {
        const auto pr2 = make_profile(FamilyId::LinMixed, eq, w, {{"root_index", 2.0}});
        CHECK(pr2.L == doctest::Approx(7.7252518369).epsilon(1e-9));
    }
    SUBCASE("phase flips the profile") {
        const auto prm = make_profile(FamilyId::LinMixed, eq, w, {{"phase", -1.0}});
        for (double f : {0.3, 0.6})
            CHECK(evaluate(prm, f * pr.L) == doctest::Approx(-evaluate(pr, f * pr.L)));
    }
    SUBCASE("C3 extra sets the amplitude") {
        const auto prc = make_profile(FamilyId::LinMixed, eq, w, {{"C3", 8.0}});
        CHECK(prc.alpha == doctest::Approx(std::pow(8.0, 3.0)));
    }
}

TEST_CASE("catalog admissibility") {
    SUBCASE("m=n, kappa=0 lists the linear-case families") {
        const auto eq = make_equation(1, 1, 1, Rational(1, 3), Rational(1, 3), 2);
        const auto fams = catalog_admissible(eq, {{1.0}, 1.0});
        REQUIRE(fams.size() == 3);
        CHECK(fams[0].family == FamilyId::LinCos);
        CHECK(fams[1].family == FamilyId::LinSin);
        CHECK(fams[2].family == FamilyId::LinMixed);
    }
    SUBCASE("m=2n, kappa=0 includes the cn/sn kappa=0 families") {
        const auto eq = make_equation(1, 1, 1, Rational(4), Rational(2), 2);
        const auto fams = catalog_admissible(eq, {{1.0}, 1.0});
        bool cn = false, sn = false;
        for (const auto& f : fams) {
            cn |= (f.family == FamilyId::CnZeroKappa);
            sn |= (f.family == FamilyId::SnZeroKappa);
        }
        CHECK(cn);
        CHECK(sn);
    }
    SUBCASE("m=n=2, kappa != 0 includes cosine/sine compactons") {
        const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
        const auto fams = catalog_admissible(eq, {{1.0}, 1.75});
        bool cosc = false, sinc = false;
        for (const auto& f : fams) {
            cosc |= (f.family == FamilyId::CosCompacton);
            sinc |= (f.family == FamilyId::SinCompacton);
        }
        CHECK(cosc);
        CHECK(sinc);
    }
}

TEST_CASE("random draws construct and evaluate everywhere in the window") {
    std::mt19937_64 rng(77);
    for (FamilyId id : all_families()) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto pr = draw_profile(id, rng);
            const double span = pr.compact() ? 1.2 * pr.L : 8.0 * pr.scale_length();
            for (int i = 0; i <= 64; ++i) {
                const double xi = -span + 2.0 * span * i / 64.0;
                const double u = evaluate(pr, xi);
                CHECK(std::isfinite(u));
                if (pr.compact() && std::abs(xi) > pr.L) CHECK(u == 0.0);
            }
        }
    }
}
