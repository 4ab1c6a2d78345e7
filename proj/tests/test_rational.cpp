#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpmn/rational.hpp"

using namespace kpmn;

TEST_CASE("normalization to lowest terms") {
    CHECK(Rational(4, 2) == Rational(2, 1));
    CHECK(Rational(4, 2).num() == 2);
    CHECK(Rational(4, 2).den() == 1);
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(0, 7).den() == 1);
}

TEST_CASE("parse forms") {
    CHECK(Rational::parse("9/5") == Rational(9, 5));
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("1.75") == Rational(7, 4));
    CHECK(Rational::parse("0.2") == Rational(1, 5));
    CHECK(Rational::parse(" 4/2 ") == Rational(2));
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("parse-normalize-value is idempotent") {
    for (const char* s : {"4/2", "9/5", "-14/6", "1.25", "3"}) {
        const Rational r = Rational::parse(s);
        const Rational again = Rational::parse(r.str());
        CHECK(r == again);
        CHECK(r.value() == again.value());
    }
}

TEST_CASE("arithmetic") {
    const Rational a(2, 3), b(5, 6);
    CHECK(a + b == Rational(3, 2));
    CHECK(b - a == Rational(1, 6));
    CHECK(a * b == Rational(5, 9));
    CHECK(a / b == Rational(4, 5));
    CHECK(-a == Rational(-2, 3));
    CHECK(a < b);
    CHECK(b > a);
    CHECK(a.reciprocal() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("parity accessors") {
    CHECK(Rational(2, 5).numerator_even());
    CHECK(Rational(2, 5).denominator_odd());
    CHECK(Rational(1, 2).denominator_even());
    CHECK(Rational(3, 7).numerator_odd());
    // 6/4 reduces to 3/2: parity of the reduced form.
    CHECK(Rational(6, 4).numerator_odd());
    CHECK(Rational(6, 4).denominator_even());
}
