#include "g2calc/symplectic.hpp"

#include <utility>

namespace g2calc {

SymplecticStructure::SymplecticStructure(DifferentialForm omega) : omega_(std::move(omega)) {
    const int dim = omega_.ambient_dim();
    if (dim % 2 != 0) throw DimensionMismatch("structure requires an even-dimensional chart");
    if (omega_.degree() != 2) throw DegreeOverflow("structure form must have degree 2");
    if (omega_.coefficient_degree() != 0)
        throw UnsupportedStructure("structure requires constant coefficients");
    if (!is_top_degree(omega_) && !exterior_derivative(omega_).is_zero())
        throw NotClosed("structure form must be closed");

    const std::size_t n = static_cast<std::size_t>(dim);
    coeff_.assign(n, RatVec(n, Rational(0)));
    for (const auto& [idx, poly] : omega_.terms()) {
        const Rational c = poly.constant_term();
        const std::size_t i = static_cast<std::size_t>(idx.at(0) - 1);
        const std::size_t j = static_cast<std::size_t>(idx.at(1) - 1);
        coeff_[i][j] = c;
        coeff_[j][i] = -c;
    }
    auto inv = rat_inverse(rat_transpose(coeff_));
    if (!inv) throw DegenerateStructure("coefficient matrix is singular");
    solve_ = std::move(*inv);
}

SymplecticStructure preset_omega_std(int n) {
    if (n < 1) throw DimensionMismatch("half-dimension must be positive");
    DifferentialForm omega(2 * n, 2);
    for (int i = 1; i <= n; ++i)
        omega.add_term({i, n + i}, Polynomial::constant(2 * n, Rational(1)));
    return SymplecticStructure(std::move(omega));
}

VectorField hamiltonian_field(const SymplecticStructure& s, const Polynomial& h) {
    const int dim = s.ambient_dim();
    if (h.ambient_dim() != dim) throw DimensionMismatch("function lives on the wrong chart");
    // X ⌟ omega = dH reads A^T X = grad H on components, so X = solve * grad H.
    std::vector<Polynomial> grad;
    grad.reserve(static_cast<std::size_t>(dim));
    for (int j = 1; j <= dim; ++j) grad.push_back(h.partial(j));
    const RatMat& solve = s.solve_matrix();
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        Polynomial c(dim);
        for (int j = 0; j < dim; ++j) {
            const Rational& w = solve[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (!w.is_zero()) c += w * grad[static_cast<std::size_t>(j)];
        }
        comps.push_back(std::move(c));
    }
    return VectorField(std::move(comps));
}

Polynomial poisson_bracket(const SymplecticStructure& s, const Polynomial& f,
                           const Polynomial& g) {
    const VectorField xf = hamiltonian_field(s, f);
    const VectorField xg = hamiltonian_field(s, g);
    return interior_product(xg, interior_product(xf, s.omega())).coefficient(MultiIndex{});
}

Polynomial poisson_jacobi_check(const SymplecticStructure& s, const Polynomial& f,
                                const Polynomial& g, const Polynomial& h) {
    return poisson_bracket(s, f, poisson_bracket(s, g, h)) +
           poisson_bracket(s, g, poisson_bracket(s, h, f)) +
           poisson_bracket(s, h, poisson_bracket(s, f, g));
}

SymplectomorphismBracketReport symplectomorphism_bracket_check(const SymplecticStructure& src,
                                                               const SymplecticStructure& dst,
                                                               const PolynomialMap& map,
                                                               const Polynomial& f,
                                                               const Polynomial& g) {
    if (map.source_dim() != src.ambient_dim() || map.target_dim() != dst.ambient_dim())
        throw DimensionMismatch("map does not connect the two charts");
    if (!map.has_inverse()) throw MissingInverse("candidate carries no inverse");
    const Polynomial lhs = poisson_bracket(dst, f, g).compose(map.coords());
    const Polynomial rhs =
        poisson_bracket(src, f.compose(map.coords()), g.compose(map.coords()));
    return {lhs, rhs, lhs == rhs};
}

}  // namespace g2calc
