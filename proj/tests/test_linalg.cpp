#include <doctest.h>

#include "g2calc/linalg.hpp"

using namespace g2calc;

TEST_CASE("exact determinant, rank, inverse") {
    const RatMat a{{Rational(2), Rational(1)}, {Rational(7), Rational(4)}};
    CHECK(rat_determinant(a) == Rational(1));
    CHECK(rat_rank(a) == 2);

    const auto inv = rat_inverse(a);
    REQUIRE(inv.has_value());
    CHECK(rat_mul(a, *inv) == rat_identity(2));
    CHECK(rat_mul(*inv, a) == rat_identity(2));

    const RatMat sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(rat_determinant(sing) == Rational(0));
    CHECK(rat_rank(sing) == 1);
    CHECK_FALSE(rat_inverse(sing).has_value());
}

TEST_CASE("rectangular solve finds exact solutions and flags inconsistency") {
    // Overdetermined but consistent.
    const RatMat a{{Rational(1), Rational(0)},
                   {Rational(0), Rational(1)},
                   {Rational(1), Rational(1)}};
    const RatVec b{Rational(2), Rational(3), Rational(5)};
    const auto x = rat_solve(a, b);
    REQUIRE(x.has_value());
    CHECK(rat_apply(a, *x) == b);

    const RatVec bad{Rational(2), Rational(3), Rational(6)};
    CHECK_FALSE(rat_solve(a, bad).has_value());

    // Underdetermined: free variables pinned to zero, still an exact solution.
    const RatMat u{{Rational(1), Rational(1), Rational(1)}};
    const RatVec rhs{Rational(3)};
    const auto y = rat_solve(u, rhs);
    REQUIRE(y.has_value());
    CHECK(rat_apply(u, *y) == rhs);
}

TEST_CASE("positive definiteness by leading minors") {
    const RatMat pd{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
    CHECK(rat_positive_definite(pd));
    const RatMat nd{{Rational(1), Rational(3)}, {Rational(3), Rational(1)}};
    CHECK_FALSE(rat_positive_definite(nd));
}

TEST_CASE("double-precision helpers agree with the exact path") {
    const DMat a{{2.0, 1.0}, {7.0, 4.0}};
    CHECK(d_determinant(a) == doctest::Approx(1.0).epsilon(1e-12));
    const auto inv = d_inverse(a);
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == doctest::Approx(4.0).epsilon(1e-12));
    const auto x = d_solve(a, DVec{1.0, 2.0});
    REQUIRE(x.has_value());
    CHECK(2.0 * (*x)[0] + 1.0 * (*x)[1] == doctest::Approx(1.0).epsilon(1e-12));
}
