#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "g2calc/differential_form.hpp"
#include "g2calc/linalg.hpp"
#include "g2calc/polynomial.hpp"
#include "g2calc/polynomial_map.hpp"
#include "g2calc/rational.hpp"
#include "g2calc/vector_field.hpp"

namespace g2calc::testing {

/// Shared deterministic generator; G2CALC_SEED overrides the default seed.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen = [] {
        unsigned long long seed = 20260814ULL;
        if (const char* s = std::getenv("G2CALC_SEED")) seed = std::strtoull(s, nullptr, 10);
        return std::mt19937_64(seed);
    }();
    return gen;
}

inline int uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

inline Rational random_rational() {
    return Rational(uniform_int(-6, 6), uniform_int(1, 4));
}

inline Rational random_nonzero_rational() {
    Rational r = random_rational();
    while (r.is_zero()) r = random_rational();
    return r;
}

inline Monomial random_monomial(int dim, int max_degree) {
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    int budget = uniform_int(0, max_degree);
    for (int d = 0; d < budget; ++d) ++e[static_cast<std::size_t>(uniform_int(0, dim - 1))];
    return Monomial(std::move(e));
}

inline Polynomial random_polynomial(int dim, int max_degree, int max_terms = 4) {
    Polynomial p(dim);
    const int terms = uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_monomial(dim, max_degree), random_rational());
    return p;
}

inline DifferentialForm random_form(int dim, int degree, int max_poly_degree = 3,
                                    int max_terms = 3) {
    DifferentialForm f(dim, degree);
    const int terms = uniform_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        // Sample a random increasing index set by thinning.
        for (int i = 1; i <= dim && static_cast<int>(idx.size()) < degree; ++i) {
            const int remaining = dim - i + 1;
            const int needed = degree - static_cast<int>(idx.size());
            if (uniform_int(1, remaining) <= needed) idx.push_back(i);
        }
        f.add_term(idx, random_polynomial(dim, max_poly_degree, 2));
    }
    return f;
}

inline VectorField random_field(int dim, int max_poly_degree = 2) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) comps.push_back(random_polynomial(dim, max_poly_degree, 2));
    return VectorField(std::move(comps));
}

inline RatVec random_point(int dim) {
    RatVec p;
    p.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) p.push_back(random_rational());
    return p;
}

/// Invertible affine map with small integer entries.
inline PolynomialMap random_affine_map(int dim) {
    while (true) {
        RatMat a(static_cast<std::size_t>(dim), RatVec(static_cast<std::size_t>(dim)));
        for (auto& row : a)
            for (auto& v : row) v = Rational(uniform_int(-2, 2));
        // Bias toward invertibility.
        for (int i = 0; i < dim; ++i)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += Rational(1);
        if (rat_determinant(a).is_zero()) continue;
        RatVec b;
        for (int i = 0; i < dim; ++i) b.push_back(Rational(uniform_int(-3, 3)));
        return PolynomialMap::affine(a, b);
    }
}

/// Polynomial map of coordinate degree <= 2 (no inverse carried).
inline PolynomialMap random_quadratic_map(int source_dim, int target_dim) {
    std::vector<Polynomial> coords;
    coords.reserve(static_cast<std::size_t>(target_dim));
    for (int i = 0; i < target_dim; ++i)
        coords.push_back(random_polynomial(source_dim, 2, 3));
    return PolynomialMap(source_dim, std::move(coords));
}

/// The model 3-form used across the suites.
inline DifferentialForm make_phi0() {
    DifferentialForm f(7, 3);
    const Polynomial one = Polynomial::constant(7, Rational(1));
    f.add_term({1, 2, 3}, one);
    f.add_term({1, 4, 5}, one);
    f.add_term({1, 6, 7}, one);
    f.add_term({2, 4, 6}, one);
    f.add_term({2, 5, 7}, -one);
    f.add_term({3, 4, 7}, -one);
    f.add_term({3, 5, 6}, -one);
    return f;
}

inline DifferentialForm make_star_phi0() {
    DifferentialForm f(7, 4);
    const Polynomial one = Polynomial::constant(7, Rational(1));
    f.add_term({4, 5, 6, 7}, one);
    f.add_term({2, 3, 6, 7}, one);
    f.add_term({2, 3, 4, 5}, one);
    f.add_term({1, 3, 5, 7}, one);
    f.add_term({1, 3, 4, 6}, -one);
    f.add_term({1, 2, 5, 6}, -one);
    f.add_term({1, 2, 4, 7}, -one);
    return f;
}

/// Rotation generator x3 e2 - x2 e3 + x5 e4 - x4 e5 - 2 x7 e6 + 2 x6 e7; its
/// plane angles sum to zero, so its flow preserves the model form.
inline VectorField make_rotation_generator() {
    std::vector<Polynomial> c(7, Polynomial(7));
    c[1] = Polynomial::variable(7, 3);
    c[2] = -Polynomial::variable(7, 2);
    c[3] = Polynomial::variable(7, 5);
    c[4] = -Polynomial::variable(7, 4);
    c[5] = Rational(-2) * Polynomial::variable(7, 7);
    c[6] = Rational(2) * Polynomial::variable(7, 6);
    return VectorField(std::move(c));
}

}  // namespace g2calc::testing
