#include "g2calc/g2.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace g2calc {

namespace {

const std::vector<MultiIndex>& two_form_basis() {
    static const std::vector<MultiIndex> basis = MultiIndex::all(7, 2);
    return basis;
}

std::vector<DifferentialForm> frame_contractions(const DifferentialForm& phi) {
    std::vector<DifferentialForm> c;
    c.reserve(7);
    for (int i = 1; i <= 7; ++i)
        c.push_back(interior_product(VectorField::basis(7, i), phi));
    return c;
}

/// 21x7 matrix of the contraction map over the lexicographic 2-form basis,
/// with polynomial entries evaluated at a rational point (or their constant
/// terms when no point is given, valid for constant coefficients).
RatMat contraction_matrix_at(const std::vector<DifferentialForm>& contractions,
                             const RatVec* point) {
    const auto& basis = two_form_basis();
    RatMat m(basis.size(), RatVec(7));
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (int j = 0; j < 7; ++j) {
            const Polynomial c = contractions[static_cast<std::size_t>(j)].coefficient(basis[r]);
            m[r][static_cast<std::size_t>(j)] = point ? c.eval(*point) : c.constant_term();
        }
    return m;
}

/// Top coefficient polynomial of a 7-form.
Polynomial top_coefficient(const DifferentialForm& f) {
    return f.coefficient(MultiIndex::all(7, 7).front());
}

const std::vector<RatVec>& sample_points() {
    static const std::vector<RatVec> pts = [] {
        auto q = [](long n, long d) { return Rational(n, d); };
        return std::vector<RatVec>{
            {q(1, 1), q(0, 1), q(-1, 1), q(1, 2), q(2, 1), q(-1, 3), q(1, 1)},
            {q(-1, 1), q(1, 1), q(2, 1), q(-1, 2), q(1, 3), q(1, 1), q(-2, 1)},
            {q(2, 1), q(-1, 1), q(1, 2), q(1, 1), q(-1, 1), q(2, 1), q(1, 3)},
            {q(1, 3), q(2, 1), q(-2, 1), q(1, 1), q(1, 2), q(-1, 1), q(1, 1)},
            {q(-2, 1), q(1, 2), q(1, 1), q(-1, 3), q(1, 1), q(1, 1), q(2, 1)}};
    }();
    return pts;
}

/// Induced inner product of basis 2-forms: <dx^I, dx^J> = det of the 2x2
/// inverse-gram submatrix.
RatMat two_form_gram(const RatMat& inverse_gram) {
    const auto& basis = two_form_basis();
    RatMat w(basis.size(), RatVec(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int i1 = basis[a].at(0) - 1, i2 = basis[a].at(1) - 1;
            const int j1 = basis[b].at(0) - 1, j2 = basis[b].at(1) - 1;
            auto g = [&](int r, int c) {
                return inverse_gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            };
            w[a][b] = g(i1, j1) * g(i2, j2) - g(i1, j2) * g(i2, j1);
        }
    return w;
}

DifferentialForm constant_three_form(const std::vector<std::pair<std::vector<int>, int>>& terms) {
    DifferentialForm f(7, 3);
    for (const auto& [idx, sign] : terms)
        f.add_term(idx, Polynomial::constant(7, Rational(sign)));
    return f;
}

void require_exact_metric(const G2Structure& g2, const char* what) {
    if (!g2.has_exact_metric())
        throw UnsupportedStructure(std::string(what) +
                                   " needs a structure with an exact recovered metric");
}

void require_one_form(const DifferentialForm& a, const char* what) {
    if (a.degree() != 1 || a.ambient_dim() != 7)
        throw DegreeOverflow(std::string(what) + " expects a 1-form on the 7-dimensional chart");
}

}  // namespace

G2Structure::G2Structure(DifferentialForm phi) : phi_(std::move(phi)) {
    if (phi_.ambient_dim() != 7)
        throw DimensionMismatch("structure requires a 7-dimensional chart");
    if (phi_.degree() != 3) throw DegreeOverflow("structure form must have degree 3");
    constant_ = phi_.coefficient_degree() == 0;
    closed_ = exterior_derivative(phi_).is_zero();

    const auto contractions = frame_contractions(phi_);
    if (constant_) {
        contraction_ = contraction_matrix_at(contractions, nullptr);
        if (rat_rank(*contraction_) != 7)
            throw DegenerateStructure("contraction map is rank-deficient");
    } else {
        const RatVec origin(7, Rational(0));
        if (rat_rank(contraction_matrix_at(contractions, &origin)) != 7)
            throw DegenerateStructure("contraction map is rank-deficient at the origin");
        for (const auto& p : sample_points())
            if (rat_rank(contraction_matrix_at(contractions, &p)) != 7)
                throw DegenerateStructure("contraction map is rank-deficient at a sample point");
    }

    if (!constant_) return;

    // Exact metric recovery: Btilde_ij = 6 g_ij sqrt(det g), so det g is the
    // 2/9 power of det(Btilde)/6^7; the gram matrix is exact whenever that
    // rational number has an exact rational 9th root.
    RatMat btilde(7, RatVec(7));
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            const Rational v =
                top_coefficient(wedge(wedge(contractions[si], contractions[sj]), phi_))
                    .constant_term();
            btilde[si][sj] = v;
            btilde[sj][si] = v;
        }
    const Rational d = rat_determinant(btilde) / Rational(6).pow(7);
    if (d.sign() <= 0) return;

    mpz_class root_num, root_den;
    const bool num_exact =
        mpz_root(root_num.get_mpz_t(), d.numerator().get_mpz_t(), 9) != 0;
    const bool den_exact =
        mpz_root(root_den.get_mpz_t(), d.denominator().get_mpz_t(), 9) != 0;
    if (!num_exact || !den_exact) return;
    const Rational lambda(root_num, root_den);  // sqrt(det g)

    RatMat gram = btilde;
    const Rational scale = (Rational(6) * lambda).reciprocal();
    for (auto& row : gram)
        for (auto& v : row) v *= scale;
    if (!rat_positive_definite(gram)) return;
    exact_gram_ = std::move(gram);
    exact_volume_ = lambda;

    const auto inverse_gram = rat_inverse(*exact_gram_);
    const RatMat w = two_form_gram(*inverse_gram);
    const RatMat mt = rat_transpose(*contraction_);
    const RatMat mtw = rat_mul(mt, w);
    const auto normal_inverse = rat_inverse(rat_mul(mtw, *contraction_));
    witness_solve_ = rat_mul(*normal_inverse, mtw);
}

const RatMat& G2Structure::exact_gram() const {
    if (!exact_gram_) throw UnsupportedStructure("structure carries no exact metric");
    return *exact_gram_;
}

const Rational& G2Structure::exact_volume() const {
    if (!exact_volume_) throw UnsupportedStructure("structure carries no exact metric");
    return *exact_volume_;
}

const RatMat& G2Structure::contraction_matrix() const {
    if (!contraction_)
        throw UnsupportedStructure("contraction matrix requires constant coefficients");
    return *contraction_;
}

const RatMat& G2Structure::witness_solve_matrix() const {
    if (!witness_solve_) throw UnsupportedStructure("projection requires an exact metric");
    return *witness_solve_;
}

G2Structure preset_phi0() {
    return G2Structure(constant_three_form({{{1, 2, 3}, 1},
                                            {{1, 4, 5}, 1},
                                            {{1, 6, 7}, 1},
                                            {{2, 4, 6}, 1},
                                            {{2, 5, 7}, -1},
                                            {{3, 4, 7}, -1},
                                            {{3, 5, 6}, -1}}));
}

DifferentialForm preset_star_phi0() {
    DifferentialForm f(7, 4);
    auto add = [&f](std::vector<int> idx, int sign) {
        f.add_term(idx, Polynomial::constant(7, Rational(sign)));
    };
    add({4, 5, 6, 7}, 1);
    add({2, 3, 6, 7}, 1);
    add({2, 3, 4, 5}, 1);
    add({1, 3, 5, 7}, 1);
    add({1, 3, 4, 6}, -1);
    add({1, 2, 5, 6}, -1);
    add({1, 2, 4, 7}, -1);
    return f;
}

G2Structure preset_cst() {
    // Coordinates (x1,x2,x3,y1,y2,y3,t). The real part of
    // (dx1 + i dy1)^(dx2 + i dy2)^(dx3 + i dy3) plus (sum_i dy_i^dx_i)^dt;
    // the two-form factor is exact with primitive sum_i y_i dx_i, which makes
    // the vertical field d/dt Rochesterian with that tautological primitive.
    return G2Structure(constant_three_form({{{1, 2, 3}, 1},
                                            {{1, 5, 6}, -1},
                                            {{2, 4, 6}, 1},
                                            {{3, 4, 5}, -1},
                                            {{1, 4, 7}, -1},
                                            {{2, 5, 7}, -1},
                                            {{3, 6, 7}, -1}}));
}

MetricReport metric_from_phi(const G2Structure& g2, const DVec& point) {
    if (point.size() != 7) throw DimensionMismatch("metric sample point must have 7 entries");
    MetricReport report;
    report.point = point;

    if (g2.has_exact_metric()) {
        const RatMat& gram = g2.exact_gram();
        report.exact_gram = gram;
        report.exact_volume = g2.exact_volume();
        report.gram.assign(7, DVec(7));
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                report.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_double();
        report.volume_coefficient = g2.exact_volume().to_double();
        return report;
    }

    const auto contractions = frame_contractions(g2.phi());
    DMat btilde(7, DVec(7));
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            const std::size_t si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
            const double v =
                top_coefficient(wedge(wedge(contractions[si], contractions[sj]), g2.phi()))
                    .eval(point);
            btilde[si][sj] = v;
            btilde[sj][si] = v;
        }
    const double d = d_determinant(btilde) / std::pow(6.0, 7);
    if (!(d > 0.0))
        throw DegenerateStructure("structure is not positively oriented at the sample point");
    const double lambda = std::pow(d, 1.0 / 9.0);

    report.gram.assign(7, DVec(7));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            report.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                btilde[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / (6.0 * lambda);
    report.volume_coefficient = lambda;

    // Leading principal minors must be positive for a metric.
    for (int k = 1; k <= 7; ++k) {
        DMat block(static_cast<std::size_t>(k), DVec(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    report.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!(d_determinant(block) > 0.0))
            throw DegenerateStructure("recovered gram matrix is not positive definite");
    }
    return report;
}

namespace {

/// The 1-form phi(X,Y,.) as polynomial components indexed by coordinate.
std::vector<Polynomial> pairing_components(const G2Structure& g2, const VectorField& x,
                                           const VectorField& y) {
    const DifferentialForm beta = interior_product(y, interior_product(x, g2.phi()));
    std::vector<Polynomial> w;
    w.reserve(7);
    for (int k = 1; k <= 7; ++k) w.push_back(beta.coefficient({k}));
    return w;
}

}  // namespace

VectorField cross_product(const G2Structure& g2, const VectorField& x, const VectorField& y) {
    require_exact_metric(g2, "exact cross product");
    if (x.ambient_dim() != 7 || y.ambient_dim() != 7)
        throw DimensionMismatch("cross product operands must live on the 7-dimensional chart");
    const auto w = pairing_components(g2, x, y);
    const RatMat inv = *rat_inverse(g2.exact_gram());
    std::vector<Polynomial> comps;
    comps.reserve(7);
    for (int i = 0; i < 7; ++i) {
        Polynomial c(7);
        for (int k = 0; k < 7; ++k) {
            const Rational& gik = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (!gik.is_zero()) c += gik * w[static_cast<std::size_t>(k)];
        }
        comps.push_back(std::move(c));
    }
    return VectorField(std::move(comps));
}

DVec cross_product_at(const G2Structure& g2, const VectorField& x, const VectorField& y,
                      const DVec& point) {
    const MetricReport metric = metric_from_phi(g2, point);
    const auto w = pairing_components(g2, x, y);
    DVec rhs;
    rhs.reserve(7);
    for (const auto& p : w) rhs.push_back(p.eval(point));
    const auto sol = d_solve(metric.gram, rhs);
    if (!sol) throw DegenerateStructure("gram matrix is numerically singular");
    return *sol;
}

DifferentialForm hodge_star(const G2Structure& g2, const DifferentialForm& a) {
    require_exact_metric(g2, "exact Hodge star");
    if (a.ambient_dim() != 7) throw DimensionMismatch("form lives on the wrong chart");
    const int k = a.degree();
    if (k > 7) throw DegreeOverflow("no dual degree for forms past the top degree");
    const RatMat inv = *rat_inverse(g2.exact_gram());
    const Rational& lambda = g2.exact_volume();

    DifferentialForm r(7, 7 - k);
    for (const auto& [idx_k, coeff] : a.terms()) {
        for (const auto& j : MultiIndex::all(7, 7 - k)) {
            const MultiIndex jc = j.complement(7);
            const auto merged = MultiIndex::merge(jc, j);
            // jc and j are disjoint by construction.
            const int sign = merged->first;
            RatMat sub(static_cast<std::size_t>(k), RatVec(static_cast<std::size_t>(k)));
            for (int r1 = 0; r1 < k; ++r1)
                for (int c1 = 0; c1 < k; ++c1)
                    sub[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] =
                        inv[static_cast<std::size_t>(idx_k.at(r1) - 1)]
                           [static_cast<std::size_t>(jc.at(c1) - 1)];
            const Rational weight = lambda * Rational(sign) * rat_determinant(sub);
            if (weight.is_zero()) continue;
            r.add_term(j.indices(), weight * coeff);
        }
    }
    return r;
}

std::map<MultiIndex, double> hodge_star_at(const G2Structure& g2, const DifferentialForm& a,
                                           const DVec& point) {
    if (a.ambient_dim() != 7) throw DimensionMismatch("form lives on the wrong chart");
    const int k = a.degree();
    if (k > 7) throw DegreeOverflow("no dual degree for forms past the top degree");
    const MetricReport metric = metric_from_phi(g2, point);
    const auto inv = d_inverse(metric.gram);
    if (!inv) throw DegenerateStructure("gram matrix is numerically singular");

    std::map<MultiIndex, double> r;
    for (const auto& j : MultiIndex::all(7, 7 - k)) r.emplace(j, 0.0);
    for (const auto& [idx_k, coeff] : a.terms()) {
        const double c = coeff.eval(point);
        for (auto& [j, value] : r) {
            const MultiIndex jc = j.complement(7);
            const auto merged = MultiIndex::merge(jc, j);
            DMat sub(static_cast<std::size_t>(k), DVec(static_cast<std::size_t>(k)));
            for (int r1 = 0; r1 < k; ++r1)
                for (int c1 = 0; c1 < k; ++c1)
                    sub[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] =
                        (*inv)[static_cast<std::size_t>(idx_k.at(r1) - 1)]
                              [static_cast<std::size_t>(jc.at(c1) - 1)];
            value += metric.volume_coefficient * merged->first * d_determinant(sub) * c;
        }
    }
    return r;
}

TwoFormSplit split_two_form(const G2Structure& g2, const DifferentialForm& a) {
    if (a.degree() != 2 || a.ambient_dim() != 7)
        throw DegreeOverflow("split expects a 2-form on the 7-dimensional chart");
    const RatMat& m = g2.contraction_matrix();
    const RatMat& s = g2.witness_solve_matrix();
    const auto& basis = two_form_basis();

    // Coefficient-wise over monomials: project each monomial's 21-vector of
    // coefficients, accumulating the witness components and the image part.
    std::map<Monomial, RatVec> columns;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Polynomial c = a.coefficient(basis[r]);
        for (const auto& [mono, value] : c.terms()) {
            auto it = columns.emplace(mono, RatVec(basis.size(), Rational(0))).first;
            it->second[r] = value;
        }
    }

    std::vector<Polynomial> witness_comps(7, Polynomial(7));
    DifferentialForm omega7(7, 2);
    for (const auto& [mono, column] : columns) {
        const RatVec w = rat_apply(s, column);
        for (int i = 0; i < 7; ++i)
            witness_comps[static_cast<std::size_t>(i)].add_term(mono,
                                                                w[static_cast<std::size_t>(i)]);
        const RatVec image = rat_apply(m, w);
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (!image[r].is_zero())
                omega7.add_term(basis[r].indices(), Polynomial::from_term(mono, image[r]));
    }

    TwoFormSplit split{omega7, a - omega7, VectorField(std::move(witness_comps))};
    return split;
}

G2FieldReport is_g2_vector_field(const G2Structure& g2, const VectorField& x) {
    if (!g2.is_closed())
        throw NotClosed("flow preservation reduces to a closed certificate only when d phi = 0");
    if (x.ambient_dim() != 7) throw DimensionMismatch("field lives on the wrong chart");
    const DifferentialForm certificate =
        exterior_derivative(interior_product(x, g2.phi()));
    if (lie_derivative(x, g2.phi()) != certificate)
        throw Error("internal: Cartan cross-check failed on a closed structure");
    return {certificate.is_zero(), certificate};
}

VectorField rochesterian_field_of(const G2Structure& g2, const DifferentialForm& alpha) {
    require_one_form(alpha, "rochesterian field");
    const DifferentialForm da = exterior_derivative(alpha);
    TwoFormSplit split = split_two_form(g2, da);
    if (!split.omega14.is_zero())
        throw NotRochesterian("differential has a component outside the contraction image",
                              split.omega14);
    return *split.witness;
}

DifferentialForm rochesterian_bracket(const G2Structure& g2, const DifferentialForm& alpha,
                                      const DifferentialForm& beta) {
    if (!g2.is_closed()) throw NotClosed("the bracket's closure identity needs d phi = 0");
    const VectorField xa = rochesterian_field_of(g2, alpha);
    const VectorField xb = rochesterian_field_of(g2, beta);
    const DifferentialForm bracket = interior_product(xb, interior_product(xa, g2.phi()));
    const DifferentialForm closure = interior_product(vector_bracket(xb, xa), g2.phi());
    if (exterior_derivative(bracket) != closure)
        throw Error("internal: bracket closure identity failed");
    return bracket;
}

JacobiDefectReport jacobi_defect(const G2Structure& g2, const DifferentialForm& alpha,
                                 const DifferentialForm& beta, const DifferentialForm& gamma) {
    const DifferentialForm lhs =
        rochesterian_bracket(g2, alpha, rochesterian_bracket(g2, beta, gamma)) +
        rochesterian_bracket(g2, beta, rochesterian_bracket(g2, gamma, alpha)) +
        rochesterian_bracket(g2, gamma, rochesterian_bracket(g2, alpha, beta));
    // rhs = d of the function (d gamma)(X_alpha, X_beta); the inner contraction
    // fills the first slot, so X_alpha goes innermost.
    const VectorField xa = rochesterian_field_of(g2, alpha);
    const VectorField xb = rochesterian_field_of(g2, beta);
    const DifferentialForm rhs = exterior_derivative(
        interior_product(xb, interior_product(xa, exterior_derivative(gamma))));
    return {lhs, rhs};
}

MorphismReport is_g2_morphism(const G2Structure& src, const G2Structure& dst,
                              const PolynomialMap& map) {
    if (map.source_dim() != 7 || map.target_dim() != 7)
        throw DimensionMismatch("morphism candidate must map the 7-chart to itself");
    if (!map.has_inverse()) throw MissingInverse("morphism candidate carries no inverse");
    const DifferentialForm defect = pullback(map, dst.phi()) - src.phi();
    return {defect.is_zero(), defect};
}

GraphReport graph_criterion(const G2Structure& g2_1, const G2Structure& g2_2,
                            const PolynomialMap& upsilon) {
    if (upsilon.source_dim() != 7 || upsilon.target_dim() != 7)
        throw DimensionMismatch("graph map must send the 7-chart to the 7-chart");

    std::vector<Polynomial> first, second, graph;
    for (int i = 1; i <= 7; ++i) {
        first.push_back(Polynomial::variable(14, i));
        second.push_back(Polynomial::variable(14, 7 + i));
        graph.push_back(Polynomial::variable(7, i));
    }
    const PolynomialMap pi1(14, std::move(first));
    const PolynomialMap pi2(14, std::move(second));
    for (int i = 1; i <= 7; ++i) graph.push_back(upsilon.coord(i));
    const PolynomialMap graph_map(7, std::move(graph));

    const DifferentialForm difference =
        pullback(pi1, g2_1.phi()) - pullback(pi2, g2_2.phi());
    const DifferentialForm restricted = pullback(graph_map, difference);
    return {restricted, restricted.is_zero()};
}

BracketPullbackReport bracket_pullback_check(const G2Structure& src, const G2Structure& dst,
                                             const PolynomialMap& map,
                                             const DifferentialForm& alpha,
                                             const DifferentialForm& beta) {
    const DifferentialForm lhs = pullback(map, rochesterian_bracket(dst, alpha, beta));
    const DifferentialForm rhs =
        rochesterian_bracket(src, pullback(map, alpha), pullback(map, beta));
    return {lhs, rhs, lhs == rhs};
}

FlowConstancyReport flow_constancy_check(const G2Structure& g2, const DifferentialForm& alpha1,
                                         const DifferentialForm& alpha2) {
    const VectorField x2 = rochesterian_field_of(g2, alpha2);
    const DifferentialForm lie = lie_derivative(x2, exterior_derivative(alpha1));
    const DifferentialForm dbracket =
        exterior_derivative(rochesterian_bracket(g2, alpha1, alpha2));
    if (dbracket != lie)
        throw Error("internal: kernel criterion disagrees with the Lie derivative");
    return {lie, dbracket.is_zero()};
}

}  // namespace g2calc
