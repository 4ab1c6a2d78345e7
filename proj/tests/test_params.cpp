#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kpmn/families.hpp"
#include "kpmn/params.hpp"

using namespace kpmn;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("make_equation validates") {
    CHECK_NOTHROW(make_equation(1, 1, 1, Rational(2), Rational(1), 2)); // KP itself
    CHECK_NOTHROW(make_equation(1, 1, 1, Rational(2), Rational(2), 2)); // KP(2,2)
    CHECK_THROWS_AS(make_equation(1, 0, 1, Rational(2), Rational(1), 2), ZeroCoefficient);
    CHECK_THROWS_AS(make_equation(0, 1, 1, Rational(2), Rational(1), 2), ZeroCoefficient);
    CHECK_THROWS_AS(make_equation(1, 1, 1, Rational(0), Rational(1), 2), NonPositivePower);
    CHECK_THROWS_AS(make_equation(1, 1, 1, Rational(-1, 2), Rational(1), 2),
                    NonPositivePower);
    CHECK_THROWS_AS(make_equation(1, 1, 0, Rational(2), Rational(1), 2), DimensionMismatch);
    CHECK_NOTHROW(make_equation(1, 1, 0, Rational(2), Rational(1), 1));
    CHECK_THROWS_AS(make_equation(1, 1, 2, Rational(2), Rational(1), 2), DomainError);
}

TEST_CASE("kinematics examples") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);

    SUBCASE("kappa=0 when nu = s|mu|^2") {
        const Kinematics k = kinematics(eq, {{1.0}, 1.0});
        CHECK(k.kappa == doctest::Approx(0.0));
        CHECK(k.speed == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(k.theta == doctest::Approx(kPi / 4.0));
    }
    SUBCASE("direct arithmetic") {
        const Kinematics k = kinematics(eq, {{1.0}, 1.75});
        CHECK(k.kappa == doctest::Approx(0.75));
    }
    SUBCASE("s=0 reduction: kappa = nu") {
        const auto eq1 = make_equation(1, 1, 0, Rational(2), Rational(2), 1);
        const Kinematics k = kinematics(eq1, {{}, 2.0});
        CHECK(k.kappa == doctest::Approx(2.0));
        CHECK(k.speed == doctest::Approx(2.0));
        CHECK(k.theta == doctest::Approx(0.0));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(kinematics(eq, {{1.0, 2.0}, 1.0}), DimensionMismatch);
    }
    SUBCASE("N=3 polar angle") {
        const auto eq3 = make_equation(1, 1, 1, Rational(2), Rational(2), 3);
        const Kinematics k = kinematics(eq3, {{1.0, 1.0}, 2.0});
        REQUIRE(k.phi.has_value());
        CHECK(*k.phi == doctest::Approx(kPi / 4.0));
        CHECK(k.kappa == doctest::Approx(0.0));
    }
}

TEST_CASE("kinematic relation at kappa=0: c = s sin^2(theta)/|cos(theta)|") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const int s = (i % 2) ? 1 : -1;
        const auto eq = make_equation(1, 1, s, Rational(2), Rational(2), 2);
        const double mu = 0.1 + 2.0 * (i / 50.0);
        const Kinematics k = kinematics(eq, {{mu}, s * mu * mu});
        const double rel = s * std::sin(k.theta) * std::sin(k.theta) / std::abs(std::cos(k.theta));
        CHECK(k.speed == doctest::Approx(rel).epsilon(1e-12));
    }
}

TEST_CASE("reduced constants examples") {
    SUBCASE("KP(2,2) with kappa=3/4") {
        const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
        const ReducedConstants rc = reduced_constants(eq, {{1.0}, 1.75}, 0.0, 0.0);
        CHECK(rc.B == doctest::Approx(1.0));
        CHECK(rc.A == doctest::Approx(1.0));
        CHECK(rc.E == 0.0);
        CHECK(rc.C == 0.0);
        CHECK(rc.C1 == 0.0);
    }
    SUBCASE("m=1/2 example") {
        const auto eq = make_equation(1, 2, 1, Rational(1, 2), Rational(1), 2);
        const ReducedConstants rc = reduced_constants_kappa(eq, 2.0, 1.0, 0.0);
        CHECK(rc.B == doctest::Approx(1.0));
        CHECK(rc.A == doctest::Approx(2.0 / 3.0));
        CHECK(rc.C == doctest::Approx(1.0));
        CHECK(rc.E == 0.0);
    }
}

TEST_CASE("kappa + s|mu|^2 = nu to ulp scale") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const int s = (i % 3 == 0) ? -1 : 1;
        const auto eq = make_equation(1, 1, s, Rational(2), Rational(3), 2);
        const WaveParams w{{U(rng)}, U(rng)};
        const double kap = kappa_of(eq, w);
        CHECK(kap + s * w.mu_norm2() ==
              doctest::Approx(w.nu).epsilon(1e-15));
    }
}

TEST_CASE("reduced constants round-trip to 1e-14 relative") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(0.2, 2.0);
    for (int i = 0; i < 100; ++i) {
        const auto eq = make_equation(U(rng), U(rng), 1, Rational(9, 5), Rational(7, 5), 2);
        const WaveParams w{{U(rng)}, U(rng)};
        const double C2 = U(rng), C3 = U(rng);
        const ReducedConstants rc = reduced_constants(eq, w, C2, C3);
        const ReducedConstants rc2 = reduced_constants(eq, w, rc.C2, rc.C3);
        CHECK(rc2.E == doctest::Approx(rc.E).epsilon(1e-14));
        CHECK(rc2.C == doctest::Approx(rc.C).epsilon(1e-14));
        CHECK(rc2.B == doctest::Approx(rc.B).epsilon(1e-14));
        CHECK(rc2.A == doctest::Approx(rc.A).epsilon(1e-14));
    }
}

TEST_CASE("kappa=0 family lists invariant under the (mu,nu) one-parameter set") {
    const auto eq = make_equation(1, 1, 1, Rational(2), Rational(2), 2);
    const auto list1 = catalog_admissible(eq, {{0.5}, 0.25});
    const auto list2 = catalog_admissible(eq, {{1.5}, 2.25});
    REQUIRE(list1.size() == list2.size());
    for (std::size_t i = 0; i < list1.size(); ++i)
        CHECK(list1[i].family == list2[i].family);
}
