#include <doctest.h>

#include "g2calc/rational.hpp"

using g2calc::Rational;

TEST_CASE("rationals canonicalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(3, 5).reciprocal() == Rational(5, 3));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("rational parsing and errors") {
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK_THROWS_AS(Rational(1, 0), g2calc::Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), g2calc::Error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), g2calc::Error);
    CHECK_THROWS_AS(Rational::from_string("abc"), g2calc::Error);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) >= Rational(7, 3));
    CHECK(Rational(1, 2).sign() == 1);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}
