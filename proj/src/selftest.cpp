#include "g2calc/selftest.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "g2calc/exterior.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/numeric.hpp"
#include "g2calc/parser.hpp"
#include "g2calc/symplectic.hpp"

namespace g2calc {

namespace {

std::mt19937_64 g_rng;

void reseed() {
    unsigned long long seed = 20260814ULL;
    if (const char* s = std::getenv("G2CALC_SEED")) seed = std::strtoull(s, nullptr, 10);
    g_rng.seed(seed);
}

int rnd_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g_rng);
}

Rational rnd_rational() { return Rational(rnd_int(-6, 6), rnd_int(1, 4)); }

Polynomial rnd_poly(int dim, int max_degree, int max_terms = 3) {
    Polynomial p(dim);
    const int terms = rnd_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        int budget = rnd_int(0, max_degree);
        for (int d = 0; d < budget; ++d) ++e[static_cast<std::size_t>(rnd_int(0, dim - 1))];
        p.add_term(Monomial(std::move(e)), rnd_rational());
    }
    return p;
}

DifferentialForm rnd_form(int dim, int degree, int max_poly_degree = 2, int max_terms = 3) {
    DifferentialForm f(dim, degree);
    const int terms = rnd_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        for (int i = 1; i <= dim && static_cast<int>(idx.size()) < degree; ++i) {
            const int remaining = dim - i + 1;
            const int needed = degree - static_cast<int>(idx.size());
            if (rnd_int(1, remaining) <= needed) idx.push_back(i);
        }
        f.add_term(idx, rnd_poly(dim, max_poly_degree, 2));
    }
    return f;
}

VectorField rnd_field(int dim, int max_poly_degree = 1) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) comps.push_back(rnd_poly(dim, max_poly_degree, 2));
    return VectorField(std::move(comps));
}

PolynomialMap rnd_affine_map(int dim) {
    for (;;) {
        RatMat a(static_cast<std::size_t>(dim), RatVec(static_cast<std::size_t>(dim)));
        for (auto& row : a)
            for (auto& v : row) v = Rational(rnd_int(-2, 2));
        for (int i = 0; i < dim; ++i)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += Rational(1);
        if (rat_determinant(a).is_zero()) continue;
        RatVec b;
        for (int i = 0; i < dim; ++i) b.push_back(Rational(rnd_int(-3, 3)));
        return PolynomialMap::affine(a, b);
    }
}

VectorField rotation_generator() {
    std::vector<Polynomial> c(7, Polynomial(7));
    c[1] = Polynomial::variable(7, 3);
    c[2] = -Polynomial::variable(7, 2);
    c[3] = Polynomial::variable(7, 5);
    c[4] = -Polynomial::variable(7, 4);
    c[5] = Rational(-2) * Polynomial::variable(7, 7);
    c[6] = Rational(2) * Polynomial::variable(7, 6);
    return VectorField(std::move(c));
}

/// Rational combinations of the frame fields and the rotation generator; all
/// of these have flows preserving the model form.
VectorField rnd_preserving_field() {
    VectorField x(7);
    if (rnd_int(0, 2) == 0) x = x + rnd_rational() * rotation_generator();
    const int picks = rnd_int(1, 3);
    for (int p = 0; p < picks; ++p)
        x = x + rnd_rational() * VectorField::basis(7, rnd_int(1, 7));
    return x;
}

DifferentialForm rnd_rochesterian(const G2Structure& g2) {
    DifferentialForm alpha =
        poincare_primitive(interior_product(rnd_preserving_field(), g2.phi()));
    if (rnd_int(0, 1) == 0)
        alpha += exterior_derivative(DifferentialForm::from_polynomial(rnd_poly(7, 2, 2)));
    return alpha;
}

RatMat doubling_matrix(int dim) {
    RatMat two = rat_identity(static_cast<std::size_t>(dim));
    for (auto& row : two)
        for (auto& v : row) v *= Rational(2);
    return two;
}

/// Coordinate rotation preserving the model form: fixes x1, rotates the
/// (x2,x3) and (x4,x5) planes a quarter turn, and flips x6, x7.
PolynomialMap quarter_turn_map() {
    RatMat r(7, RatVec(7, Rational(0)));
    r[0][0] = Rational(1);
    r[1][2] = Rational(-1);
    r[2][1] = Rational(1);
    r[3][4] = Rational(-1);
    r[4][3] = Rational(1);
    r[5][5] = Rational(-1);
    r[6][6] = Rational(-1);
    return PolynomialMap::affine(r, RatVec(7, Rational(0)));
}

struct CheckFail {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw CheckFail{detail};
}

// ---------------------------------------------------------------------------
// Exterior algebra identities.

void case_wedge_antisymmetry() {
    for (int t = 0; t < 20; ++t) {
        const int dim = rnd_int(3, 7);
        const int k = rnd_int(0, 2);
        const int l = rnd_int(0, 2);
        const DifferentialForm a = rnd_form(dim, k);
        const DifferentialForm b = rnd_form(dim, l);
        const DifferentialForm ab = wedge(a, b);
        const DifferentialForm ba = wedge(b, a);
        require(ab == ((k * l) % 2 == 1 ? -ba : ba), "a^b vs (-1)^{kl} b^a mismatch");
    }
}

void case_nilpotent_differential() {
    for (int t = 0; t < 20; ++t) {
        const int dim = rnd_int(2, 7);
        const DifferentialForm a = rnd_form(dim, rnd_int(0, dim - 2), 3);
        require(exterior_derivative(exterior_derivative(a)).is_zero(), "d(d a) != 0");
    }
}

void case_lie_product_rule() {
    for (int t = 0; t < 15; ++t) {
        const int dim = rnd_int(4, 6);
        const VectorField x = rnd_field(dim);
        const DifferentialForm a = rnd_form(dim, rnd_int(0, 2));
        const DifferentialForm b = rnd_form(dim, rnd_int(0, 2));
        require(lie_derivative(x, wedge(a, b)) ==
                    wedge(lie_derivative(x, a), b) + wedge(a, lie_derivative(x, b)),
                "Lie derivative is not a wedge derivation");
        require(lie_derivative(x, exterior_derivative(a)) ==
                    exterior_derivative(lie_derivative(x, a)),
                "Lie derivative does not commute with d");
    }
}

void case_interior_antiderivation() {
    for (int t = 0; t < 15; ++t) {
        const int dim = rnd_int(3, 7);
        const int k = rnd_int(1, 2);
        const DifferentialForm a = rnd_form(dim, k);
        const DifferentialForm b = rnd_form(dim, rnd_int(1, 2));
        const VectorField x = rnd_field(dim);
        DifferentialForm rhs = wedge(interior_product(x, a), b);
        const DifferentialForm cross = wedge(a, interior_product(x, b));
        rhs = (k % 2 == 1) ? rhs - cross : rhs + cross;
        require(interior_product(x, wedge(a, b)) == rhs,
                "contraction is not an antiderivation");
    }
}

void case_poincare_homotopy() {
    for (int t = 0; t < 15; ++t) {
        const int dim = rnd_int(2, 7);
        const DifferentialForm b = rnd_form(dim, rnd_int(0, dim - 2), 3);
        const DifferentialForm closed = exterior_derivative(b);
        require(exterior_derivative(poincare_primitive(closed)) == closed,
                "primitive of an exact form fails d(P a) = a");
    }
}

void case_pullback_functoriality() {
    for (int t = 0; t < 10; ++t) {
        const int dim = rnd_int(2, 5);
        const PolynomialMap psi = rnd_affine_map(dim);
        const PolynomialMap chi = rnd_affine_map(dim);
        const DifferentialForm a = rnd_form(dim, rnd_int(0, dim - 1));
        require(pullback(psi.compose(chi), a) == pullback(chi, pullback(psi, a)),
                "(psi o chi)* != chi* o psi*");
    }
}

void case_pushforward_contraction() {
    for (int t = 0; t < 10; ++t) {
        const int dim = rnd_int(2, 5);
        const PolynomialMap psi = rnd_affine_map(dim);
        const VectorField x = rnd_field(dim);
        const DifferentialForm a = rnd_form(dim, rnd_int(1, dim));
        require(pullback(psi, interior_product(x, a)) ==
                    interior_product(pushforward_inverse(psi, x), pullback(psi, a)),
                "pullback does not intertwine contraction");
    }
}

// ---------------------------------------------------------------------------
// Metric, star, cross product, splitting.

void case_model_metric() {
    const G2Structure g2 = preset_phi0();
    require(g2.has_exact_metric(), "model form lost its exact metric");
    require(g2.exact_gram() == rat_identity(7), "model gram is not the identity");
    require(g2.exact_volume() == Rational(1), "model volume coefficient is not 1");
}

void case_metric_scaling() {
    const DifferentialForm phi = preset_phi0().phi();
    const G2Structure eight(Rational(8) * phi);
    RatMat four = rat_identity(7);
    for (auto& row : four)
        for (auto& v : row) v *= Rational(4);
    require(eight.exact_gram() == four, "8*phi gram is not exactly 4*identity");
    require(eight.exact_volume() == Rational(128), "8*phi volume is not exactly 128");

    const G2Structure scaled(Rational(3, 2) * phi);
    const double want = std::cbrt(1.5 * 1.5);
    for (int pt = 0; pt < 5; ++pt) {
        DVec p;
        for (int i = 0; i < 7; ++i) p.push_back(rnd_int(-8, 8) / 8.0);
        const MetricReport m = metric_from_phi(scaled, p);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                const double expect = (i == j) ? want : 0.0;
                require(std::abs(m.gram[i][j] - expect) <= 1e-12,
                        "scaled gram deviates beyond 1e-12");
            }
    }
}

void case_star_model_form() {
    const G2Structure g2 = preset_phi0();
    DifferentialForm star(7, 4);
    const Polynomial one = Polynomial::constant(7, Rational(1));
    star.add_term({4, 5, 6, 7}, one);
    star.add_term({2, 3, 6, 7}, one);
    star.add_term({2, 3, 4, 5}, one);
    star.add_term({1, 3, 5, 7}, one);
    star.add_term({1, 3, 4, 6}, -one);
    star.add_term({1, 2, 5, 6}, -one);
    star.add_term({1, 2, 4, 7}, -one);
    require(hodge_star(g2, g2.phi()) == star, "star of the model form is off");

    DifferentialForm seven_vol(7, 7);
    seven_vol.add_term({1, 2, 3, 4, 5, 6, 7}, Polynomial::constant(7, Rational(7)));
    require(wedge(g2.phi(), star) == seven_vol, "phi ^ *phi != 7 vol");

    for (int t = 0; t < 10; ++t) {
        const DifferentialForm a = rnd_form(7, rnd_int(0, 7));
        require(hodge_star(g2, hodge_star(g2, a)) == a, "** != identity");
    }
}

void case_cross_product_table() {
    const G2Structure g2 = preset_phi0();
    const int table[21][4] = {
        {1, 2, 3, 1},  {1, 3, 2, -1}, {1, 4, 5, 1},  {1, 5, 4, -1}, {1, 6, 7, 1},
        {1, 7, 6, -1}, {2, 3, 1, 1},  {2, 4, 6, 1},  {2, 5, 7, -1}, {2, 6, 4, -1},
        {2, 7, 5, 1},  {3, 4, 7, -1}, {3, 5, 6, -1}, {3, 6, 5, 1},  {3, 7, 4, 1},
        {4, 5, 1, 1},  {4, 6, 2, 1},  {4, 7, 3, -1}, {5, 6, 3, -1}, {5, 7, 2, -1},
        {6, 7, 1, 1}};
    for (const auto& row : table) {
        const VectorField prod =
            cross_product(g2, VectorField::basis(7, row[0]), VectorField::basis(7, row[1]));
        require(prod == Rational(row[3]) * VectorField::basis(7, row[2]),
                "basis cross product deviates from the table");
    }
    for (int t = 0; t < 20; ++t) {
        const VectorField x = rnd_field(7);
        const VectorField y = rnd_field(7);
        require(cross_product(g2, x, y) == -cross_product(g2, y, x),
                "cross product is not antisymmetric");
        require(cross_product(g2, x, x).is_zero(), "X x X != 0");
    }
}

void case_two_form_split() {
    const G2Structure g2 = preset_phi0();
    for (int t = 0; t < 50; ++t) {
        const DifferentialForm a = rnd_form(7, 2, 2, 4);
        const TwoFormSplit split = split_two_form(g2, a);
        require(split.omega7 + split.omega14 == a, "split does not sum back");
        require(split_two_form(g2, split.omega7).omega7 == split.omega7,
                "projection is not idempotent");
        require(split_two_form(g2, split.omega14).omega7.is_zero(),
                "complement is not in the kernel");
        require(split.witness.has_value() &&
                    interior_product(*split.witness, g2.phi()) == split.omega7,
                "witness does not contract to the image part");
    }
    const RatMat projector = rat_mul(g2.contraction_matrix(), g2.witness_solve_matrix());
    require(rat_rank(projector) == 7, "projector rank is not 7");
    RatMat complement = rat_identity(21);
    for (std::size_t i = 0; i < 21; ++i)
        for (std::size_t j = 0; j < 21; ++j) complement[i][j] -= projector[i][j];
    require(rat_rank(complement) == 14, "complement rank is not 14");

    const TwoFormSplit worked = split_two_form(g2, DifferentialForm::basis(7, {2, 3}));
    DifferentialForm omega7(7, 2);
    omega7.add_term({2, 3}, Polynomial::constant(7, Rational(1, 3)));
    omega7.add_term({4, 5}, Polynomial::constant(7, Rational(1, 3)));
    omega7.add_term({6, 7}, Polynomial::constant(7, Rational(1, 3)));
    require(worked.omega7 == omega7, "worked split image part is off");
    require(worked.witness.has_value() &&
                *worked.witness == Rational(1, 3) * VectorField::basis(7, 1),
            "worked split witness is off");
}

void case_preserving_certificates() {
    const G2Structure g2 = preset_phi0();
    for (int i = 1; i <= 7; ++i)
        require(is_g2_vector_field(g2, VectorField::basis(7, i)).preserves,
                "a frame field fails to preserve the model form");
    require(is_g2_vector_field(g2, rotation_generator()).preserves,
            "the rotation generator fails to preserve the model form");

    std::vector<Polynomial> comps(7, Polynomial(7));
    comps[0] = Polynomial::variable(7, 1);
    const G2FieldReport no = is_g2_vector_field(g2, VectorField(comps));
    DifferentialForm cert(7, 3);
    const Polynomial one = Polynomial::constant(7, Rational(1));
    cert.add_term({1, 2, 3}, one);
    cert.add_term({1, 4, 5}, one);
    cert.add_term({1, 6, 7}, one);
    require(!no.preserves && no.certificate == cert,
            "radial field certificate is off");
}

// ---------------------------------------------------------------------------
// The bracket on 1-forms with image-valued differentials.

void case_primitive_fields() {
    const G2Structure g2 = preset_phi0();
    for (int t = 0; t < 10; ++t) {
        const VectorField x = rnd_preserving_field();
        const DifferentialForm alpha = poincare_primitive(interior_product(x, g2.phi()));
        require(rochesterian_field_of(g2, alpha) == x,
                "primitive of X contracted into phi does not recover X");
    }
}

void case_bracket_differential() {
    const G2Structure g2 = preset_phi0();
    for (int t = 0; t < 20; ++t) {
        const DifferentialForm alpha = rnd_rochesterian(g2);
        const DifferentialForm beta = rnd_rochesterian(g2);
        const VectorField xa = rochesterian_field_of(g2, alpha);
        const VectorField xb = rochesterian_field_of(g2, beta);
        const DifferentialForm bracket = rochesterian_bracket(g2, alpha, beta);
        const VectorField reversed = vector_bracket(xb, xa);
        require(exterior_derivative(bracket) == interior_product(reversed, g2.phi()),
                "d{a,b} is not the reversed field bracket contracted into phi");
        require(rochesterian_field_of(g2, bracket) == reversed,
                "the bracket's field is not the reversed vector bracket");
    }
}

void case_jacobi_defect() {
    const G2Structure g2 = preset_phi0();
    for (int t = 0; t < 20; ++t) {
        const DifferentialForm alpha = rnd_rochesterian(g2);
        const DifferentialForm beta = rnd_rochesterian(g2);
        const DifferentialForm gamma = rnd_rochesterian(g2);
        const JacobiDefectReport r = jacobi_defect(g2, alpha, beta, gamma);
        require(r.lhs == r.rhs, "cyclic bracket sum deviates from the defect form");
    }
    const DifferentialForm alpha1 =
        poincare_primitive(interior_product(VectorField::basis(7, 1), g2.phi()));
    const DifferentialForm alpha2 =
        poincare_primitive(interior_product(VectorField::basis(7, 2), g2.phi()));
    const DifferentialForm alpha_rot =
        poincare_primitive(interior_product(rotation_generator(), g2.phi()));
    const JacobiDefectReport r = jacobi_defect(g2, alpha2, alpha1, alpha_rot);
    require(r.lhs == r.rhs, "rotation triple defect mismatch");
    require(r.lhs == DifferentialForm::basis(7, {2}),
            "rotation triple defect is not the second coordinate 1-form");
}

// ---------------------------------------------------------------------------
// Morphisms, graphs, bracket pullbacks.

void case_graph_reformulation() {
    const G2Structure g2 = preset_phi0();
    require(graph_criterion(g2, g2, PolynomialMap::identity(7)).vanishes,
            "identity graph does not vanish");
    const PolynomialMap doubling =
        PolynomialMap::affine(doubling_matrix(7), RatVec(7, Rational(0)));
    const GraphReport scaled = graph_criterion(g2, g2, doubling);
    require(!scaled.vanishes && scaled.restricted == Rational(-7) * g2.phi(),
            "doubling graph defect is not -7 phi");
    for (int t = 0; t < 10; ++t) {
        const PolynomialMap psi = rnd_affine_map(7);
        const GraphReport r = graph_criterion(g2, g2, psi);
        require(r.restricted == g2.phi() - pullback(psi, g2.phi()),
                "graph restriction disagrees with the direct pullback defect");
        require(r.vanishes == is_g2_morphism(g2, g2, psi).is_morphism,
                "graph verdict disagrees with the morphism verdict");
    }
}

void case_morphism_verdicts() {
    const G2Structure g2 = preset_phi0();
    const PolynomialMap translation =
        PolynomialMap::affine(rat_identity(7), RatVec(7, Rational(1, 3)));
    require(is_g2_morphism(g2, g2, translation).is_morphism,
            "translation is not recognized as a morphism");
    require(is_g2_morphism(g2, g2, quarter_turn_map()).is_morphism,
            "the quarter-turn rotation is not recognized as a morphism");
    const MorphismReport scaled = is_g2_morphism(
        g2, g2, PolynomialMap::affine(doubling_matrix(7), RatVec(7, Rational(0))));
    require(!scaled.is_morphism && scaled.defect == Rational(7) * g2.phi(),
            "doubling defect is not exactly 7 phi");
}

void case_bracket_pullback() {
    const G2Structure g2 = preset_phi0();
    const DifferentialForm alpha1 =
        poincare_primitive(interior_product(VectorField::basis(7, 1), g2.phi()));
    const DifferentialForm alpha2 =
        poincare_primitive(interior_product(VectorField::basis(7, 2), g2.phi()));

    const PolynomialMap translation =
        PolynomialMap::affine(rat_identity(7), RatVec(7, Rational(-2)));
    const BracketPullbackReport moved =
        bracket_pullback_check(g2, g2, translation, alpha1, alpha2);
    require(moved.equal && moved.lhs == DifferentialForm::basis(7, {3}),
            "translation does not preserve the bracket");

    const BracketPullbackReport rotated =
        bracket_pullback_check(g2, g2, quarter_turn_map(), alpha1, alpha2);
    require(rotated.equal, "the quarter-turn rotation does not preserve the bracket");

    const BracketPullbackReport scaled = bracket_pullback_check(
        g2, g2, PolynomialMap::affine(doubling_matrix(7), RatVec(7, Rational(0))), alpha1,
        alpha2);
    require(!scaled.equal && scaled.lhs == Rational(2) * DifferentialForm::basis(7, {3}) &&
                scaled.rhs == Rational(16) * DifferentialForm::basis(7, {3}),
            "doubling bracket defect is not 2 dx3 vs 16 dx3");
}

// ---------------------------------------------------------------------------
// The even-dimensional analogue.

void case_poisson_jacobi() {
    for (int n : {2, 3}) {
        const SymplecticStructure s = preset_omega_std(n);
        for (int t = 0; t < 30; ++t) {
            const Polynomial f = rnd_poly(2 * n, 2);
            const Polynomial g = rnd_poly(2 * n, 2);
            const Polynomial h = rnd_poly(2 * n, 2);
            require(poisson_jacobi_check(s, f, g, h).is_zero(),
                    "cyclic bracket sum is not the zero polynomial");
        }
    }
}

void case_hamiltonian_bracket() {
    for (int n : {2, 3}) {
        const SymplecticStructure s = preset_omega_std(n);
        for (int t = 0; t < 20; ++t) {
            const Polynomial f = rnd_poly(2 * n, 2);
            const Polynomial g = rnd_poly(2 * n, 2);
            const VectorField lhs = hamiltonian_field(s, poisson_bracket(s, f, g));
            const VectorField rhs =
                -vector_bracket(hamiltonian_field(s, f), hamiltonian_field(s, g));
            require(lhs == rhs, "field of {f,g} is not minus the field bracket");
        }
    }
}

void case_symplectomorphism_bracket() {
    const SymplecticStructure s = preset_omega_std(1);
    RatMat squeeze(2, RatVec(2, Rational(0)));
    squeeze[0][0] = Rational(2);
    squeeze[1][1] = Rational(1, 2);
    const PolynomialMap squeeze_map = PolynomialMap::affine(squeeze, RatVec(2, Rational(0)));
    require(pullback(squeeze_map, s.omega()) == s.omega(),
            "squeeze map does not preserve the area form");
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = rnd_poly(2, 2);
        const Polynomial g = rnd_poly(2, 2);
        require(symplectomorphism_bracket_check(s, s, squeeze_map, f, g).equal,
                "squeeze map fails bracket compatibility");
    }
    const SymplectomorphismBracketReport report = symplectomorphism_bracket_check(
        s, s, PolynomialMap::affine(doubling_matrix(2), RatVec(2, Rational(0))),
        Polynomial::variable(2, 1), Polynomial::variable(2, 2));
    require(!report.equal && report.lhs == Polynomial::constant(2, Rational(1)) &&
                report.rhs == Polynomial::constant(2, Rational(4)),
            "doubling bracket defect is not 1 vs 4");
}

// ---------------------------------------------------------------------------
// Numerical cross-checks.

void case_flow_constancy() {
    const G2Structure g2 = preset_phi0();
    const Tolerances tol;
    const DVec start{0.4, -0.3, 0.7, 0.1, -0.6, 0.2, 0.5};
    const DifferentialForm alpha1 =
        poincare_primitive(interior_product(VectorField::basis(7, 1), g2.phi()));
    const DifferentialForm alpha2 =
        poincare_primitive(interior_product(VectorField::basis(7, 2), g2.phi()));
    const DifferentialForm alpha_rot =
        poincare_primitive(interior_product(rotation_generator(), g2.phi()));

    const FlowConstancyReport kernel = flow_constancy_check(g2, alpha1, alpha_rot);
    require(kernel.in_kernel && kernel.lie_of_dalpha1.is_zero(),
            "kernel pair certificate is not exactly zero");
    const FlowConstancyReport moving = flow_constancy_check(g2, alpha2, alpha_rot);
    DifferentialForm lie(7, 2);
    const Polynomial one = Polynomial::constant(7, Rational(1));
    lie.add_term({1, 2}, one);
    lie.add_term({4, 7}, -one);
    lie.add_term({5, 6}, -one);
    require(!moving.in_kernel && moving.lie_of_dalpha1 == lie,
            "non-kernel pair certificate is off");

    require(flow_constancy_sample(g2, alpha1, alpha_rot, start, 1.0, 1000) <=
                tol.constancy_kernel,
            "kernel pair drifts beyond 1e-6");
    require(flow_constancy_sample(g2, alpha2, alpha_rot, start, 1.0, 1000) >
                tol.constancy_moving,
            "non-kernel pair drift is below 1e-3");
}

void case_rk4_order() {
    const G2Structure g2 = preset_phi0();
    const Tolerances tol;
    const DVec start{0.4, -0.3, 0.7, 0.1, -0.6, 0.2, 0.5};
    const VectorField rot = rotation_generator();
    const FlowResult coarse = integrate_flow(g2, rot, start, 1.0, 25);
    const FlowResult fine = integrate_flow(g2, rot, start, 1.0, 50);
    const double ratio = coarse.pullback_drift.back() / fine.pullback_drift.back();
    require(ratio > tol.rk4_factor_low && ratio < tol.rk4_factor_high,
            "halving the step does not shrink drift at fourth order");
}

void case_finite_difference() {
    const Tolerances tol;
    for (int t = 0; t < 10; ++t) {
        const int dim = rnd_int(3, 6);
        const DifferentialForm a = rnd_form(dim, rnd_int(0, dim - 1), 2, 3);
        const DifferentialForm da = exterior_derivative(a);
        DVec p;
        for (int i = 0; i < dim; ++i) p.push_back(rnd_int(-8, 8) / 8.0);
        for (const auto& [idx, value] : finite_difference_d(a, p, 1e-5))
            require(std::abs(value - da.coefficient(idx).eval(p)) < tol.finite_difference,
                    "central difference deviates from the symbolic derivative");
    }
}

// ---------------------------------------------------------------------------
// Structure construction edge cases.

void case_degenerate_rejection() {
    const G2Structure neg(-preset_phi0().phi());
    require(!neg.has_exact_metric(), "negated model form claims an exact metric");
    bool threw = false;
    try {
        metric_from_phi(neg, DVec(7, 0.0));
    } catch (const DegenerateStructure&) {
        threw = true;
    }
    require(threw, "orientation-reversing scale served a metric");

    threw = false;
    try {
        G2Structure lone(DifferentialForm::basis(7, {1, 2, 3}));
    } catch (const DegenerateStructure&) {
        threw = true;
    }
    require(threw, "rank-deficient 3-form was accepted");
}

void case_vertical_field_structure() {
    const G2Structure cst = preset_cst();
    require(cst.is_closed(), "product-chart structure is not closed");
    require(cst.exact_gram() == rat_identity(7), "product-chart gram is not the identity");
    DifferentialForm lambda(7, 1);
    lambda.add_term({1}, Polynomial::variable(7, 4));
    lambda.add_term({2}, Polynomial::variable(7, 5));
    lambda.add_term({3}, Polynomial::variable(7, 6));
    require(exterior_derivative(lambda) ==
                interior_product(VectorField::basis(7, 7), cst.phi()),
            "tautological 1-form is not a primitive of the vertical contraction");
    require(rochesterian_field_of(cst, lambda) == VectorField::basis(7, 7),
            "tautological 1-form does not recover the vertical field");
}

void case_nonconstant_closed() {
    DifferentialForm bump(7, 2);
    bump.add_term({4, 5}, Polynomial::variable(7, 1) * Polynomial::variable(7, 2));
    const DifferentialForm phi = preset_phi0().phi() + exterior_derivative(bump);
    const G2Structure g2(phi);
    require(g2.is_closed(), "perturbed structure is not closed");
    require(!g2.constant_coefficients(), "perturbed structure reads as constant");
    require(!g2.has_exact_metric(), "perturbed structure claims an exact metric");
    bool threw = false;
    try {
        hodge_star(g2, g2.phi());
    } catch (const UnsupportedStructure&) {
        threw = true;
    }
    require(threw, "exact star was served for a non-constant structure");
    const G2FieldReport r = is_g2_vector_field(g2, VectorField::basis(7, 7));
    require(r.preserves == r.certificate.is_zero(), "verdict disagrees with certificate");
}

// ---------------------------------------------------------------------------
// Expression language.

void case_expression_round_trip() {
    for (int t = 0; t < 100; ++t) {
        const int dim = rnd_int(2, 7);
        if (rnd_int(0, 3) == 0) {
            VectorField x = rnd_field(dim, 2);
            while (x.is_zero()) x = rnd_field(dim, 2);
            const ParsedValue v{x};
            const std::string text = print_value(v);
            const ParsedValue back = parse_expression(text, dim);
            require(std::holds_alternative<VectorField>(back) &&
                        std::get<VectorField>(back) == x && print_value(back) == text,
                    "field round trip changed the value");
        } else {
            const int degree = rnd_int(0, dim < 3 ? dim : 3);
            DifferentialForm f = rnd_form(dim, degree, 2, 3);
            while (f.is_zero()) f = rnd_form(dim, degree, 2, 3);
            const ParsedValue v{f};
            const std::string text = print_value(v);
            const ParsedValue back = parse_expression(text, dim);
            require(std::holds_alternative<DifferentialForm>(back) &&
                        std::get<DifferentialForm>(back) == f && print_value(back) == text,
                    "form round trip changed the value");
        }
    }
}

struct CaseDef {
    const char* name;
    const char* claim;
    void (*run)();
};

const CaseDef kCases[] = {
    {"wedge-graded-antisymmetry",
     "a ^ b = (-1)^{kl} b ^ a for k- and l-forms, on 20 random pairs",
     case_wedge_antisymmetry},
    {"nilpotent-differential", "d(d a) = 0 on 20 random forms", case_nilpotent_differential},
    {"lie-derivative-derivation",
     "L_X is a wedge derivation and commutes with d, on 15 random inputs",
     case_lie_product_rule},
    {"interior-antiderivation",
     "X contracts through wedges with the alternating sign, on 15 random inputs",
     case_interior_antiderivation},
    {"poincare-homotopy",
     "the star-shaped-chart primitive satisfies d(P a) = a on 15 random exact forms",
     case_poincare_homotopy},
    {"pullback-functoriality",
     "(psi o chi)* = chi* o psi* on 10 random affine maps", case_pullback_functoriality},
    {"pushforward-contraction",
     "pullback intertwines contraction with the inverse pushforward on 10 random maps",
     case_pushforward_contraction},
    {"model-metric-identity",
     "the model 3-form recovers exactly the identity metric and unit volume",
     case_model_metric},
    {"metric-scaling-law",
     "scaling the 3-form by c scales the metric by c^{2/3}: exact for c = 8, "
     "within 1e-12 at 5 random points for c = 3/2",
     case_metric_scaling},
    {"star-of-model-form",
     "the recovered-metric star sends the model 3-form to its 4-form dual, "
     "phi ^ *phi = 7 vol, and ** = id",
     case_star_model_form},
    {"cross-product-table",
     "all 21 basis cross products match the table; antisymmetry and X x X = 0 "
     "hold on 20 random fields",
     case_cross_product_table},
    {"two-form-splitting",
     "the 2-form decomposition into the rank-7 contraction image and its rank-14 "
     "complement is exact, idempotent, and witnessed, on 50 random 2-forms",
     case_two_form_split},
    {"preserving-field-certificates",
     "frame fields and the rotation generator preserve the model form; the "
     "radial field fails with an exact certificate",
     case_preserving_certificates},
    {"contraction-primitives",
     "for each preserving field X, the primitive of X contracted into phi has "
     "X as its field, on 10 family fields",
     case_primitive_fields},
    {"bracket-differential",
     "d{a,b} equals the reversed field bracket contracted into phi, on 20 random pairs",
     case_bracket_differential},
    {"bracket-jacobi-defect",
     "the cyclic sum {a,{b,c}} + {b,{c,a}} + {c,{a,b}} equals d of the double "
     "contraction of dc, and a rotation triple realizes the nonzero value dx[2]",
     case_jacobi_defect},
    {"graph-reformulation",
     "the product-chart form restricted to the graph vanishes exactly for "
     "structure-preserving maps and equals -7 phi for the doubling map",
     case_graph_reformulation},
    {"morphism-verdicts",
     "translations and the quarter-turn rotation preserve the model form; the "
     "doubling map fails with defect exactly 7 phi",
     case_morphism_verdicts},
    {"bracket-pullback",
     "structure-preserving maps commute with the bracket; the doubling map "
     "separates 2 dx[3] from 16 dx[3]",
     case_bracket_pullback},
    {"poisson-jacobi",
     "the cyclic Poisson sum is the zero polynomial on 30 random triples in "
     "dimensions 4 and 6",
     case_poisson_jacobi},
    {"hamiltonian-bracket-compatibility",
     "the field of {f,g} is minus the bracket of the fields, on 20 random pairs",
     case_hamiltonian_bracket},
    {"symplectomorphism-bracket",
     "the squeeze map preserves brackets; the doubling map separates 1 from 4",
     case_symplectomorphism_bracket},
    {"kernel-flow-constancy",
     "symbolic kernel certificates match sampled transport: kernel pairs drift "
     "at most 1e-6, non-kernel pairs more than 1e-3, at t = 1 with 1000 steps",
     case_flow_constancy},
    {"rk4-convergence-order",
     "halving the integration step shrinks frame drift by a factor in [8, 32]",
     case_rk4_order},
    {"finite-difference-differential",
     "central differences reproduce the symbolic derivative within 1e-6 on 10 "
     "random forms",
     case_finite_difference},
    {"degenerate-rejection",
     "a rank-deficient 3-form is rejected at construction and the negated model "
     "form is refused a metric",
     case_degenerate_rejection},
    {"vertical-field-structure",
     "the product-chart structure has the identity metric and the tautological "
     "1-form as an exact primitive of the vertical contraction",
     case_vertical_field_structure},
    {"nonconstant-closed-structure",
     "a closed non-constant perturbation constructs, reports closedness, and "
     "refuses exact-metric operations",
     case_nonconstant_closed},
    {"expression-round-trip",
     "parsing the canonical text of 100 random forms and fields reproduces them exactly",
     case_expression_round_trip},
};

}  // namespace

std::vector<SelftestCase> selftest_list() {
    std::vector<SelftestCase> out;
    for (const CaseDef& c : kCases) out.push_back({c.name, c.claim});
    return out;
}

std::vector<SelftestResult> selftest_run() {
    reseed();
    std::vector<SelftestResult> out;
    for (const CaseDef& c : kCases) {
        SelftestResult r{c.name, c.claim, true, ""};
        try {
            c.run();
        } catch (const CheckFail& f) {
            r.passed = false;
            r.detail = f.detail;
        } catch (const Error& e) {
            r.passed = false;
            r.detail = std::string("unexpected engine error: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string selftest_scope_note() {
    return "scope: every check above runs on a star-shaped polynomial coordinate chart. "
           "Statements that require a closed (compact, boundaryless) manifold are out of "
           "scope: a polynomial chart is never closed, so no chart-level computation can "
           "witness them. See the Scope section of README.md.";
}

}  // namespace g2calc
