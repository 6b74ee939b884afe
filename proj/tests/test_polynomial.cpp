#include <doctest.h>

#include <array>
#include <vector>

#include "g2calc/polynomial.hpp"
#include "support/test_support.hpp"

using namespace g2calc;
namespace gt = g2calc::testing;

namespace {
Polynomial var(int dim, int i) { return Polynomial::variable(dim, i); }
Polynomial cst(int dim, Rational c) { return Polynomial::constant(dim, c); }
}  // namespace

TEST_CASE("addition cancels and respects identities") {
    const Polynomial x1 = var(3, 1);
    CHECK((x1 + cst(3, 1)) + (-x1) == cst(3, 1));
    const Polynomial p = gt::random_polynomial(3, 4);
    CHECK(Polynomial(3) + p == p);
    const Polynomial x2 = var(3, 2);
    CHECK(Rational(1, 2) * (x2 * x2) + Rational(1, 3) * (x2 * x2) ==
          Rational(5, 6) * (x2 * x2));
}

TEST_CASE("multiplication expands exactly") {
    const Polynomial x1 = var(2, 1), x2 = var(2, 2);
    CHECK(x1 * x2 == Polynomial::from_term(Monomial({1, 1}), Rational(1)));
    CHECK((x1 + cst(2, 1)) * (x1 - cst(2, 1)) == x1 * x1 - cst(2, 1));
    CHECK(gt::random_polynomial(2, 3) * Polynomial(2) == Polynomial(2));
}

TEST_CASE("partial derivatives") {
    const Polynomial p = var(3, 1) * var(3, 1) * var(3, 3);
    CHECK(p.partial(1) == Rational(2) * (var(3, 1) * var(3, 3)));
    CHECK(cst(3, Rational(9, 4)).partial(2) == Polynomial(3));
    const Polynomial q = var(3, 2) * var(3, 2) * var(3, 2);
    CHECK(q.partial(2) == Rational(3) * (var(3, 2) * var(3, 2)));
    CHECK_THROWS_AS(p.partial(4), IndexOutOfRange);
    CHECK_THROWS_AS(p.partial(0), IndexOutOfRange);
}

TEST_CASE("evaluation") {
    const Polynomial p = var(2, 1) * var(2, 1) + var(2, 2);
    const std::array<Rational, 2> pt{Rational(2), Rational(3)};
    CHECK(p.eval(pt) == Rational(7));

    const Polynomial q = gt::random_polynomial(3, 4);
    const std::array<Rational, 3> origin{Rational(0), Rational(0), Rational(0)};
    CHECK(q.eval(origin) == q.constant_term());
    CHECK(Polynomial(3).eval(origin) == Rational(0));

    const std::array<double, 2> dpt{0.5, 0.25};
    CHECK(p.eval(dpt) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("composition substitutes exactly") {
    const Polynomial x1 = var(1, 1);
    const std::vector<Polynomial> shift{x1 + cst(1, Rational(5, 2))};
    CHECK(x1.compose(shift) == x1 + cst(1, Rational(5, 2)));

    const Polynomial prod = var(2, 1) * var(2, 2);
    const std::vector<Polynomial> swap{var(2, 2), var(2, 1)};
    CHECK(prod.compose(swap) == prod);

    const std::vector<Polynomial> dbl{Rational(2) * x1};
    CHECK((x1 * x1).compose(dbl) == Rational(4) * (x1 * x1));
}

TEST_CASE("ring axioms on random polynomials") {
    for (int it = 0; it < 40; ++it) {
        const int dim = gt::uniform_int(1, 7);
        const Polynomial p = gt::random_polynomial(dim, 4);
        const Polynomial q = gt::random_polynomial(dim, 4);
        const Polynomial r = gt::random_polynomial(dim, 4);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("mixed partials commute") {
    for (int it = 0; it < 100; ++it) {
        const int dim = gt::uniform_int(2, 7);
        const Polynomial p = gt::random_polynomial(dim, 5);
        const int i = gt::uniform_int(1, dim);
        const int j = gt::uniform_int(1, dim);
        CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    for (int it = 0; it < 20; ++it) {
        const int dim = gt::uniform_int(1, 5);
        const Polynomial p = gt::random_polynomial(dim, 3);
        const Polynomial q = gt::random_polynomial(dim, 3);
        const RatVec pt = gt::random_point(dim);
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
}

TEST_CASE("canonical representation makes equality structural") {
    Polynomial a(2);
    a.add_term(Monomial({1, 0}), Rational(1, 2));
    a.add_term(Monomial({0, 1}), Rational(3));
    a.add_term(Monomial({1, 0}), Rational(1, 2));

    Polynomial b(2);
    b.add_term(Monomial({0, 1}), Rational(3));
    b.add_term(Monomial({1, 0}), Rational(1));
    CHECK(a == b);
    CHECK(a.terms() == b.terms());

    // Cancellation removes the stored term entirely.
    b.add_term(Monomial({1, 0}), Rational(-1));
    CHECK(b.term_count() == 1);
}

TEST_CASE("printing is deterministic graded-lex") {
    Polynomial p(3);
    p.add_term(Monomial({2, 0, 0}), Rational(2));
    p.add_term(Monomial({0, 1, 0}), Rational(-1, 3));
    p.add_term(Monomial({0, 0, 0}), Rational(4));
    CHECK(p.str() == "2*x1*x1 - 1/3*x2 + 4");
    CHECK(Polynomial(3).str() == "0");
    CHECK(var(3, 2).str() == "x2");
    CHECK((-var(3, 2)).str() == "-x2");
}

TEST_CASE("limits are enforced") {
    CHECK_THROWS_AS(Polynomial(15), LimitExceeded);
    CHECK_THROWS_AS(Monomial(std::vector<int>{17}), LimitExceeded);
    const Polynomial big = Polynomial::from_term(Monomial(std::vector<int>{9}), Rational(1));
    CHECK_THROWS_AS(big * big, LimitExceeded);
    Polynomial p(2);
    Polynomial q(3);
    CHECK_THROWS_AS(p + q, DimensionMismatch);
}
