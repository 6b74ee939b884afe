#include <cmath>

#include "doctest.h"
#include "g2calc/numeric.hpp"
#include "support/test_support.hpp"

using namespace g2calc;
using namespace g2calc::testing;

namespace {

DVec basis_vec(int dim, int i) {
    DVec v(static_cast<std::size_t>(dim), 0.0);
    v[static_cast<std::size_t>(i - 1)] = 1.0;
    return v;
}

DVec to_double(const RatVec& p) {
    DVec v;
    v.reserve(p.size());
    for (const auto& r : p) v.push_back(r.to_double());
    return v;
}

}  // namespace

TEST_CASE("multilinear evaluation of the model form") {
    const DifferentialForm phi = make_phi0();
    const DVec origin(7, 0.0);
    CHECK(eval_form(phi, origin, {basis_vec(7, 1), basis_vec(7, 2), basis_vec(7, 3)}) ==
          doctest::Approx(1.0));
    CHECK(eval_form(phi, origin, {basis_vec(7, 1), basis_vec(7, 1), basis_vec(7, 3)}) ==
          doctest::Approx(0.0));
    CHECK(eval_form(phi, origin, {basis_vec(7, 2), basis_vec(7, 1), basis_vec(7, 3)}) ==
          doctest::Approx(-1.0));
    CHECK(eval_form(phi, origin, {basis_vec(7, 2), basis_vec(7, 5), basis_vec(7, 7)}) ==
          doctest::Approx(-1.0));
    CHECK_THROWS_AS(eval_form(phi, origin, {basis_vec(7, 1)}), DimensionMismatch);
}

TEST_CASE("exact and floating evaluation agree") {
    for (int trial = 0; trial < 10; ++trial) {
        const int degree = uniform_int(1, 3);
        const DifferentialForm a = random_form(5, degree, 2, 3);
        const RatVec point = random_point(5);
        std::vector<RatVec> vectors;
        for (int v = 0; v < degree; ++v) vectors.push_back(random_point(5));
        const Rational exact = eval_form_exact(a, point, vectors);
        std::vector<DVec> dvectors;
        for (const auto& v : vectors) dvectors.push_back(to_double(v));
        CHECK(std::abs(eval_form(a, to_double(point), dvectors) - exact.to_double()) < 1e-9);
    }
}

TEST_CASE("central differences recover the exterior derivative") {
    const Tolerances tol;

    SUBCASE("worked value") {
        DifferentialForm a(7, 1);
        a.add_term({3}, Polynomial::variable(7, 2));
        const auto fd = finite_difference_d(a, DVec(7, 0.5), 1e-4);
        CHECK(std::abs(fd.at(MultiIndex({2, 3}, 7)) - 1.0) < 1e-7);
        for (const auto& [idx, value] : fd)
            if (!(idx == MultiIndex({2, 3}, 7))) CHECK(std::abs(value) < 1e-7);
    }

    SUBCASE("constant forms have zero derivative") {
        const auto fd = finite_difference_d(make_phi0(), DVec(7, 0.25), 1e-4);
        for (const auto& [idx, value] : fd) CHECK(std::abs(value) < 1e-10);
    }

    SUBCASE("agreement with the symbolic derivative") {
        for (int trial = 0; trial < 20; ++trial) {
            const int dim = uniform_int(3, 6);
            const DifferentialForm a = random_form(dim, uniform_int(0, dim - 1), 2, 3);
            const DifferentialForm da = exterior_derivative(a);
            for (int pt = 0; pt < 5; ++pt) {
                DVec p;
                for (int i = 0; i < dim; ++i) p.push_back(uniform_int(-8, 8) / 8.0);
                const auto fd = finite_difference_d(a, p, 1e-5);
                for (const auto& [idx, value] : fd)
                    CHECK(std::abs(value - da.coefficient(idx).eval(p)) <
                          tol.finite_difference);
            }
        }
    }

    CHECK_THROWS_AS(finite_difference_d(make_phi0(), DVec(7, 0.0), 0.0), Error);
}

TEST_CASE("flows of preserving fields show only integrator drift") {
    const G2Structure g2 = preset_phi0();
    const Tolerances tol;
    const DVec start{0.4, -0.3, 0.7, 0.1, -0.6, 0.2, 0.5};

    SUBCASE("translation flow is exact") {
        const FlowResult r = integrate_flow(g2, VectorField::basis(7, 1), start, 1.0, 100);
        REQUIRE(r.trajectory.size() == 101);
        CHECK(r.trajectory.back().first == doctest::Approx(1.0));
        CHECK(r.trajectory.back().second[0] == doctest::Approx(start[0] + 1.0));
        for (double d : r.pullback_drift) CHECK(d <= tol.translation_drift);
    }

    SUBCASE("rotation flow drift is bounded by the integrator") {
        const FlowResult r = integrate_flow(g2, make_rotation_generator(), start, 1.0, 1000);
        for (double d : r.pullback_drift) CHECK(d <= tol.preserving_drift);
    }

    SUBCASE("a non-preserving field drifts measurably") {
        std::vector<Polynomial> comps(7, Polynomial(7));
        comps[0] = Polynomial::variable(7, 1);
        const FlowResult r = integrate_flow(g2, VectorField(comps), start, 1.0, 1000);
        CHECK(r.pullback_drift.back() > tol.breaking_drift);
    }

    SUBCASE("times are strictly increasing and drift nonnegative") {
        const FlowResult r = integrate_flow(g2, make_rotation_generator(), start, 2.0, 50);
        for (std::size_t i = 1; i < r.trajectory.size(); ++i)
            CHECK(r.trajectory[i].first > r.trajectory[i - 1].first);
        for (double d : r.pullback_drift) CHECK(d >= 0.0);
    }
}

TEST_CASE("runge-kutta drift shrinks at fourth order") {
    const G2Structure g2 = preset_phi0();
    const Tolerances tol;
    const DVec start{0.4, -0.3, 0.7, 0.1, -0.6, 0.2, 0.5};
    const VectorField rot = make_rotation_generator();

    const FlowResult coarse = integrate_flow(g2, rot, start, 1.0, 25);
    const FlowResult fine = integrate_flow(g2, rot, start, 1.0, 50);
    const double ratio = coarse.pullback_drift.back() / fine.pullback_drift.back();
    CHECK(ratio > tol.rk4_factor_low);
    CHECK(ratio < tol.rk4_factor_high);
}

TEST_CASE("sampled flow constancy matches the symbolic kernel verdict") {
    const G2Structure g2 = preset_phi0();
    const Tolerances tol;
    const DVec start{0.4, -0.3, 0.7, 0.1, -0.6, 0.2, 0.5};

    const DifferentialForm alpha1 =
        poincare_primitive(interior_product(VectorField::basis(7, 1), g2.phi()));
    const DifferentialForm alpha2 =
        poincare_primitive(interior_product(VectorField::basis(7, 2), g2.phi()));
    const DifferentialForm alpha_rot =
        poincare_primitive(interior_product(make_rotation_generator(), g2.phi()));

    SUBCASE("constant fields transport exactly") {
        CHECK(flow_constancy_sample(g2, alpha1, alpha2, start, 1.0, 100) <=
              tol.constancy_constant);
    }

    SUBCASE("a certified kernel pair stays constant") {
        REQUIRE(flow_constancy_check(g2, alpha1, alpha_rot).in_kernel);
        CHECK(flow_constancy_sample(g2, alpha1, alpha_rot, start, 1.0, 1000) <=
              tol.constancy_kernel);
    }

    SUBCASE("a certified non-kernel pair moves") {
        REQUIRE_FALSE(flow_constancy_check(g2, alpha2, alpha_rot).in_kernel);
        CHECK(flow_constancy_sample(g2, alpha2, alpha_rot, start, 1.0, 1000) >
              tol.constancy_moving);
    }

    SUBCASE("non-rochesterian input is rejected") {
        DifferentialForm bad(7, 1);
        bad.add_term({3}, Polynomial::variable(7, 2));
        CHECK_THROWS_AS(flow_constancy_sample(g2, bad, alpha2, start, 1.0, 10),
                        NotRochesterian);
    }
}

TEST_CASE("sampled identities agree with the exact engine") {
    const G2Structure g2 = preset_phi0();
    const Tolerances tol;
    for (int trial = 0; trial < 5; ++trial) {
        const DifferentialForm a = random_form(7, 2, 2, 3);
        const DifferentialForm b = random_form(7, 1, 2, 3);
        const DifferentialForm product = wedge(a, b);
        const VectorField x = random_field(7, 1);
        const DifferentialForm contracted = interior_product(x, a);

        DVec p;
        for (int i = 0; i < 7; ++i) p.push_back(uniform_int(-8, 8) / 8.0);
        std::vector<DVec> frame3, frame1, frame2;
        for (int v = 0; v < 3; ++v) {
            DVec w;
            for (int i = 0; i < 7; ++i) w.push_back(uniform_int(-8, 8) / 8.0);
            frame3.push_back(w);
        }
        frame1.assign(frame3.begin(), frame3.begin() + 1);
        frame2.assign(frame3.begin(), frame3.begin() + 2);

        // Contraction evaluated numerically equals the form fed the field value.
        DVec xval;
        for (int i = 1; i <= 7; ++i) xval.push_back(x.component(i).eval(p));
        std::vector<DVec> with_x{xval, frame1[0]};
        CHECK(std::abs(eval_form(contracted, p, frame1) - eval_form(a, p, with_x)) <
              tol.pointwise_agreement);

        // The symbolic wedge evaluated pointwise equals the shuffle expansion
        // assembled from separate evaluations of the factors.
        const double shuffle =
            eval_form(a, p, {frame3[0], frame3[1]}) * eval_form(b, p, {frame3[2]}) -
            eval_form(a, p, {frame3[0], frame3[2]}) * eval_form(b, p, {frame3[1]}) +
            eval_form(a, p, {frame3[1], frame3[2]}) * eval_form(b, p, {frame3[0]});
        CHECK(std::abs(eval_form(product, p, frame3) - shuffle) < tol.pointwise_agreement);
    }
}
