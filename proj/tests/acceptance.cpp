// Acceptance gate: eleven checks, one verdict line each, exit 0 only when all
// pass. Tolerances are pinned here and match the Tolerances defaults.
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "g2calc/exterior.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/numeric.hpp"
#include "g2calc/selftest.hpp"
#include "g2calc/symplectic.hpp"
#include "support/test_support.hpp"

using namespace g2calc;
using namespace g2calc::testing;

namespace {

int g_failures = 0;
std::string g_note;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    g_note.clear();
    std::string detail;
    bool ok = true;
    try {
        body();
        detail = g_note;
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    std::printf("criterion %2d: %s  %s%s%s\n", number, ok ? "pass" : "FAIL", label.c_str(),
                detail.empty() ? "" : " | ", detail.c_str());
    if (!ok) ++g_failures;
}

struct Failed : std::exception {
    explicit Failed(std::string m) : msg(std::move(m)) {}
    const char* what() const noexcept override { return msg.c_str(); }
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Failed(msg);
}

VectorField random_preserving_field() {
    VectorField x(7);
    if (uniform_int(0, 2) == 0) x = x + random_rational() * make_rotation_generator();
    const int picks = uniform_int(1, 3);
    for (int p = 0; p < picks; ++p)
        x = x + random_rational() * VectorField::basis(7, uniform_int(1, 7));
    return x;
}

DifferentialForm random_rochesterian(const G2Structure& g2) {
    DifferentialForm alpha =
        poincare_primitive(interior_product(random_preserving_field(), g2.phi()));
    if (uniform_int(0, 1) == 0)
        alpha += exterior_derivative(DifferentialForm::from_polynomial(random_polynomial(7, 2)));
    return alpha;
}

PolynomialMap doubling_map(int dim) {
    RatMat two = rat_identity(static_cast<std::size_t>(dim));
    for (auto& row : two)
        for (auto& v : row) v *= Rational(2);
    return PolynomialMap::affine(two, RatVec(static_cast<std::size_t>(dim), Rational(0)));
}

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

DifferentialForm primitive_of(const G2Structure& g2, const VectorField& x) {
    return poincare_primitive(interior_product(x, g2.phi()));
}

void check_star_recovery() {
    const G2Structure g2 = preset_phi0();
    const DifferentialForm star = hodge_star(g2, g2.phi());
    const DifferentialForm expected = preset_star_phi0();
    require(star.terms().size() == 7, "dual term count");
    for (const auto& [idx, coeff] : expected.terms())
        require(star.coefficient(idx) == coeff, "dual coefficient at " + idx.str());
    require(star == expected, "dual of the model form");
    require(wedge(g2.phi(), star) ==
                Rational(7) * DifferentialForm::basis(7, {1, 2, 3, 4, 5, 6, 7}),
            "normalization wedge");
}

void check_metric_recovery() {
    const G2Structure g2 = preset_phi0();
    require(g2.has_exact_metric(), "model metric exactness");
    require(g2.exact_gram() == rat_identity(7), "model gram");
    require(g2.exact_volume() == Rational(1), "model volume");

    const G2Structure scaled(Rational(3, 2) * g2.phi());
    const double expected = std::pow(1.5, 2.0 / 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        DVec p;
        for (int i = 0; i < 7; ++i) p.push_back(uniform_int(-20, 20) / 8.0);
        const MetricReport report = metric_from_phi(scaled, p);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                const double want = i == j ? expected : 0.0;
                require(std::abs(report.gram[i][j] - want) < 1e-12, "scaled gram entry");
            }
    }
}

void check_cross_table() {
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
                "product e" + std::to_string(row[0]) + " x e" + std::to_string(row[1]));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const VectorField x = random_field(7, 1);
        const VectorField y = random_field(7, 1);
        require(cross_product(g2, x, y) == -cross_product(g2, y, x), "antisymmetry");
        require(cross_product(g2, x, x).is_zero(), "self product");
    }
}

void check_two_form_split() {
    const G2Structure g2 = preset_phi0();
    for (int trial = 0; trial < 50; ++trial) {
        const DifferentialForm a = random_form(7, 2, 2, 4);
        const TwoFormSplit split = split_two_form(g2, a);
        require(split.omega7 + split.omega14 == a, "complementarity");
        require(split_two_form(g2, split.omega7).omega7 == split.omega7, "idempotence");
        require(split_two_form(g2, split.omega14).omega7.is_zero(), "complement kernel");
        require(split.witness.has_value(), "witness presence");
        require(interior_product(*split.witness, g2.phi()) == split.omega7, "witness equation");
    }

    const RatMat projector = rat_mul(g2.contraction_matrix(), g2.witness_solve_matrix());
    require(rat_rank(projector) == 7, "projector rank");
    RatMat complement = rat_identity(21);
    for (std::size_t i = 0; i < 21; ++i)
        for (std::size_t j = 0; j < 21; ++j) complement[i][j] -= projector[i][j];
    require(rat_rank(complement) == 14, "complement rank");

    const TwoFormSplit worked = split_two_form(g2, DifferentialForm::basis(7, {2, 3}));
    DifferentialForm omega7(7, 2);
    omega7.add_term({2, 3}, Polynomial::constant(7, Rational(1, 3)));
    omega7.add_term({4, 5}, Polynomial::constant(7, Rational(1, 3)));
    omega7.add_term({6, 7}, Polynomial::constant(7, Rational(1, 3)));
    require(worked.omega7 == omega7, "worked split image");
    require(worked.omega14 == DifferentialForm::basis(7, {2, 3}) - omega7,
            "worked split complement");
    require(worked.witness.has_value() &&
                *worked.witness == Rational(1, 3) * VectorField::basis(7, 1),
            "worked split witness");
}

void check_jacobi_contrast() {
    for (int n : {2, 3}) {
        const SymplecticStructure s = preset_omega_std(n);
        for (int trial = 0; trial < 15; ++trial) {
            const Polynomial f = random_polynomial(2 * n, 3);
            const Polynomial g = random_polynomial(2 * n, 3);
            const Polynomial h = random_polynomial(2 * n, 3);
            require(poisson_jacobi_check(s, f, g, h).is_zero(), "cyclic sum on a chart");
        }
    }

    const G2Structure g2 = preset_phi0();
    for (int trial = 0; trial < 20; ++trial) {
        const JacobiDefectReport report =
            jacobi_defect(g2, random_rochesterian(g2), random_rochesterian(g2),
                          random_rochesterian(g2));
        require(report.lhs == report.rhs, "defect formula");
    }

    const DifferentialForm alpha1 = primitive_of(g2, VectorField::basis(7, 1));
    const DifferentialForm alpha2 = primitive_of(g2, VectorField::basis(7, 2));
    const DifferentialForm alpha_rot = primitive_of(g2, make_rotation_generator());
    const JacobiDefectReport rotated = jacobi_defect(g2, alpha2, alpha1, alpha_rot);
    require(!rotated.lhs.is_zero(), "nonvanishing defect");
    require(rotated.lhs == DifferentialForm::basis(7, {2}), "rotated triple value");
    require(rotated.rhs == rotated.lhs, "rotated triple formula");
}

void check_bracket_contraction() {
    const G2Structure g2 = preset_phi0();
    for (int trial = 0; trial < 10; ++trial) {
        const DifferentialForm a = random_rochesterian(g2);
        const DifferentialForm b = random_rochesterian(g2);
        const DifferentialForm bracket = rochesterian_bracket(g2, a, b);
        const VectorField xa = rochesterian_field_of(g2, a);
        const VectorField xb = rochesterian_field_of(g2, b);
        require(exterior_derivative(bracket) ==
                    interior_product(vector_bracket(xb, xa), g2.phi()),
                "bracket differential");
        require(rochesterian_field_of(g2, bracket) == vector_bracket(xb, xa),
                "bracket field");
    }

    for (int n : {2, 3}) {
        const SymplecticStructure s = preset_omega_std(n);
        for (int trial = 0; trial < 10; ++trial) {
            const Polynomial f = random_polynomial(2 * n, 3);
            const Polynomial g = random_polynomial(2 * n, 3);
            const VectorField xf = hamiltonian_field(s, f);
            require(interior_product(xf, s.omega()) ==
                        exterior_derivative(DifferentialForm::from_polynomial(f)),
                    "defining contraction");
            require(hamiltonian_field(s, poisson_bracket(s, f, g)) ==
                        -vector_bracket(xf, hamiltonian_field(s, g)),
                    "bracket field identity");
        }
    }
}

void check_primitive_recovery() {
    const G2Structure g2 = preset_phi0();
    std::vector<VectorField> family;
    for (int i = 1; i <= 7; ++i) family.push_back(VectorField::basis(7, i));
    family.push_back(make_rotation_generator());
    for (int trial = 0; trial < 12; ++trial) family.push_back(random_preserving_field());

    for (const VectorField& x : family) {
        require(is_g2_vector_field(g2, x).preserves, "family membership");
        const DifferentialForm alpha = primitive_of(g2, x);
        require(exterior_derivative(alpha) == interior_product(x, g2.phi()),
                "primitive equation");
        require(rochesterian_field_of(g2, alpha) == x, "field recovery");
    }
}

void check_graph_criterion() {
    const G2Structure g2 = preset_phi0();
    require(graph_criterion(g2, g2, PolynomialMap::identity(7)).vanishes, "identity graph");

    const PolynomialMap translation =
        PolynomialMap::affine(rat_identity(7), RatVec(7, Rational(1, 3)));
    const GraphReport moved = graph_criterion(g2, g2, translation);
    require(moved.vanishes && moved.restricted.is_zero(), "translation graph");

    const GraphReport turned = graph_criterion(g2, g2, quarter_turn_map());
    require(turned.vanishes && turned.restricted.is_zero(), "quarter-turn graph");

    const GraphReport scaled = graph_criterion(g2, g2, doubling_map(7));
    require(!scaled.vanishes, "doubling verdict");
    require(scaled.restricted == Rational(-7) * g2.phi(), "doubling restriction");

    for (int trial = 0; trial < 10; ++trial) {
        const PolynomialMap psi = random_affine_map(7);
        const GraphReport report = graph_criterion(g2, g2, psi);
        require(report.restricted == g2.phi() - pullback(psi, g2.phi()), "path agreement");
        require(report.vanishes == is_g2_morphism(g2, g2, psi).is_morphism,
                "verdict agreement");
    }
}

void check_bracket_pullback() {
    const G2Structure g2 = preset_phi0();
    const DifferentialForm alpha1 = primitive_of(g2, VectorField::basis(7, 1));
    const DifferentialForm alpha2 = primitive_of(g2, VectorField::basis(7, 2));

    const PolynomialMap translation =
        PolynomialMap::affine(rat_identity(7), RatVec(7, Rational(-2)));
    require(bracket_pullback_check(g2, g2, translation, alpha1, alpha2).equal,
            "translation compatibility");
    require(bracket_pullback_check(g2, g2, quarter_turn_map(), alpha1, alpha2).equal,
            "quarter-turn compatibility");

    const BracketPullbackReport scaled =
        bracket_pullback_check(g2, g2, doubling_map(7), alpha1, alpha2);
    require(!scaled.equal, "doubling incompatibility");
    const DifferentialForm defect = scaled.rhs - scaled.lhs;
    require(!defect.is_zero(), "doubling defect");
    g_note = "doubling defect " + defect.str();

    const SymplecticStructure s = preset_omega_std(1);
    const Polynomial q = Polynomial::variable(2, 1);
    const Polynomial p = Polynomial::variable(2, 2);
    const PolynomialMap shift =
        PolynomialMap::affine(rat_identity(2), RatVec{Rational(3), Rational(-1, 2)});
    require(symplectomorphism_bracket_check(s, s, shift, q, p).equal, "shift compatibility");
    RatMat squeeze(2, RatVec(2, Rational(0)));
    squeeze[0][0] = Rational(2);
    squeeze[1][1] = Rational(1, 2);
    require(symplectomorphism_bracket_check(
                s, s, PolynomialMap::affine(squeeze, RatVec(2, Rational(0))), q, p)
                .equal,
            "squeeze compatibility");
    const SymplectomorphismBracketReport doubled =
        symplectomorphism_bracket_check(s, s, doubling_map(2), q, p);
    require(!doubled.equal, "scaling incompatibility");
    require(doubled.lhs == Polynomial::constant(2, Rational(1)) &&
                doubled.rhs == Polynomial::constant(2, Rational(4)),
            "scaling defect value");
    g_note += ", scaling defect " + (doubled.rhs - doubled.lhs).str();
}

void check_flow_constancy() {
    const G2Structure g2 = preset_phi0();
    const DVec start{0.4, -0.3, 0.7, 0.1, -0.6, 0.2, 0.5};
    const DifferentialForm alpha1 = primitive_of(g2, VectorField::basis(7, 1));
    const DifferentialForm alpha2 = primitive_of(g2, VectorField::basis(7, 2));
    const DifferentialForm alpha_rot = primitive_of(g2, make_rotation_generator());

    require(flow_constancy_check(g2, alpha1, alpha_rot).in_kernel, "kernel certificate");
    require(flow_constancy_sample(g2, alpha1, alpha_rot, start, 1.0, 1000) <= 1e-6,
            "kernel drift bound");

    require(!flow_constancy_check(g2, alpha2, alpha_rot).in_kernel, "non-kernel certificate");
    require(flow_constancy_sample(g2, alpha2, alpha_rot, start, 1.0, 1000) > 1e-3,
            "non-kernel drift floor");

    const VectorField rot = make_rotation_generator();
    const FlowResult coarse = integrate_flow(g2, rot, start, 1.0, 25);
    const FlowResult fine = integrate_flow(g2, rot, start, 1.0, 50);
    const double ratio = coarse.pullback_drift.back() / fine.pullback_drift.back();
    require(ratio > 8.0 && ratio < 32.0, "integrator order ratio");
}

void check_scope_statement() {
    const std::string note = selftest_scope_note();
    require(note.find("never closed") != std::string::npos, "limitation stated");
    require(note.find("README.md") != std::string::npos, "documentation linked");
    bool found = false;
    for (const SelftestResult& r : selftest_run())
        if (!r.passed) throw Failed("selftest case failed: " + r.name);
        else found = true;
    require(found, "selftest ran");
}

}  // namespace

int main() {
    criterion(1, "hodge dual of the model form, term for term", check_star_recovery);
    criterion(2, "metric recovery: exact identity gram, scaled gram within 1e-12",
              check_metric_recovery);
    criterion(3, "cross product table, antisymmetry, self-annihilation", check_cross_table);
    criterion(4, "two-form split: exact, idempotent, ranks 7 and 14", check_two_form_split);
    criterion(5, "cyclic bracket sums: zero on even charts, exact defect on the 7-chart",
              check_jacobi_contrast);
    criterion(6, "bracket-contraction identities in both bracket calculi",
              check_bracket_contraction);
    criterion(7, "radial primitives recover every preserving field in the family",
              check_primitive_recovery);
    criterion(8, "graph restriction: zero for morphisms, -7 phi for doubling",
              check_graph_criterion);
    criterion(9, "bracket-pullback compatibility separates morphisms from scalings",
              check_bracket_pullback);
    criterion(10, "flow samples confirm kernel certificates; integrator is fourth order",
              check_flow_constancy);
    criterion(11, "selftest states the closed-manifold scope limit and links the docs",
              check_scope_statement);

    if (g_failures == 0) {
        std::printf("all 11 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
