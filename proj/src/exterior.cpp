#include "g2calc/exterior.hpp"

#include <utility>
#include <vector>

#include "g2calc/errors.hpp"

namespace g2calc {

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("wedge ambient dimensions differ");
    DifferentialForm r(a.ambient_dim(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            auto merged = MultiIndex::merge(ia, ib);
            if (!merged) continue;
            Polynomial c = ca * cb;
            if (merged->first == -1) c = -c;
            r.add_term(merged->second.indices(), c);
        }
    }
    return r;
}

bool is_top_degree(const DifferentialForm& a) { return a.degree() == a.ambient_dim(); }

DifferentialForm exterior_derivative(const DifferentialForm& a) {
    if (is_top_degree(a))
        throw DegreeOverflow("exterior derivative of a top-degree form");
    DifferentialForm r(a.ambient_dim(), a.degree() + 1);
    for (const auto& [idx, c] : a.terms()) {
        for (int j = 1; j <= a.ambient_dim(); ++j) {
            Polynomial dc = c.partial(j);
            if (dc.is_zero()) continue;
            std::vector<int> ext;
            ext.reserve(static_cast<std::size_t>(idx.degree()) + 1);
            ext.push_back(j);
            for (int i : idx.indices()) ext.push_back(i);
            r.add_term(ext, dc);
        }
    }
    return r;
}

DifferentialForm interior_product(const VectorField& x, const DifferentialForm& a) {
    if (x.ambient_dim() != a.ambient_dim())
        throw DimensionMismatch("contraction ambient dimensions differ");
    if (a.degree() == 0) throw DegreeOverflow("interior product of a 0-form");
    DifferentialForm r(a.ambient_dim(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (int pos = 0; pos < idx.degree(); ++pos) {
            const Polynomial& comp = x.component(idx.at(pos));
            if (comp.is_zero()) continue;
            Polynomial term = comp * c;
            if (pos % 2 == 1) term = -term;
            r.add_term(idx.without_position(pos).indices(), term);
        }
    }
    return r;
}

DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& a) {
    if (x.ambient_dim() != a.ambient_dim())
        throw DimensionMismatch("Lie derivative ambient dimensions differ");
    if (a.degree() == 0) return interior_product(x, exterior_derivative(a));
    if (is_top_degree(a)) return exterior_derivative(interior_product(x, a));
    return exterior_derivative(interior_product(x, a)) +
           interior_product(x, exterior_derivative(a));
}

VectorField vector_bracket(const VectorField& x, const VectorField& y) {
    if (x.ambient_dim() != y.ambient_dim())
        throw DimensionMismatch("bracket ambient dimensions differ");
    const int n = x.ambient_dim();
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        comps.push_back(x.apply(y.component(i)) - y.apply(x.component(i)));
    return VectorField(std::move(comps));
}

DifferentialForm pullback(const PolynomialMap& psi, const DifferentialForm& a) {
    if (a.ambient_dim() != psi.target_dim())
        throw DimensionMismatch("pullback needs a form on the target chart");
    const int n = psi.source_dim();
    DifferentialForm r(n, a.degree());

    // d(psi^i) as 1-forms on the source chart, indexed by target coordinate.
    std::vector<DifferentialForm> dcoord;
    dcoord.reserve(static_cast<std::size_t>(psi.target_dim()));
    for (int i = 1; i <= psi.target_dim(); ++i) {
        DifferentialForm df(n, 1);
        for (int j = 1; j <= n; ++j) df.add_term({j}, psi.coord(i).partial(j));
        dcoord.push_back(std::move(df));
    }

    for (const auto& [idx, c] : a.terms()) {
        DifferentialForm term = DifferentialForm::from_polynomial(c.compose(psi.coords()));
        for (int i : idx.indices()) term = wedge(term, dcoord[static_cast<std::size_t>(i - 1)]);
        r += term;
    }
    return r;
}

VectorField pushforward_inverse(const PolynomialMap& psi, const VectorField& x) {
    if (x.ambient_dim() != psi.target_dim())
        throw DimensionMismatch("transport needs a field on the target chart");
    const PolynomialMap inv = psi.inverse();
    const auto jac_inv = inv.jacobian();  // entries are polynomials in target coordinates

    // Components of x and of the inverse Jacobian, rewritten on the source
    // chart by composing with psi.
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(psi.source_dim()));
    std::vector<Polynomial> x_on_source;
    x_on_source.reserve(static_cast<std::size_t>(psi.target_dim()));
    for (int j = 1; j <= psi.target_dim(); ++j)
        x_on_source.push_back(x.component(j).compose(psi.coords()));
    for (int i = 0; i < psi.source_dim(); ++i) {
        Polynomial c(psi.source_dim());
        for (int j = 0; j < psi.target_dim(); ++j) {
            const Polynomial& entry = jac_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (entry.is_zero() || x_on_source[static_cast<std::size_t>(j)].is_zero()) continue;
            c += entry.compose(psi.coords()) * x_on_source[static_cast<std::size_t>(j)];
        }
        comps.push_back(std::move(c));
    }
    return VectorField(std::move(comps));
}

DifferentialForm poincare_primitive(const DifferentialForm& a) {
    if (a.degree() == 0) throw DegreeOverflow("primitive of a 0-form");
    if (!is_top_degree(a) && !exterior_derivative(a).is_zero())
        throw NotClosed("form has no primitive: d a != 0");
    const int k = a.degree();
    DifferentialForm r(a.ambient_dim(), k - 1);
    // Radial homotopy, term by monomial term: a coefficient monomial of total
    // degree d under dx^I contributes 1/(d+k) times the contraction with the
    // Euler field sum_i x_i e_i.
    for (const auto& [idx, c] : a.terms()) {
        for (const auto& [mono, coeff] : c.terms()) {
            const Rational scale = coeff / Rational(mono.degree() + k);
            for (int pos = 0; pos < idx.degree(); ++pos) {
                Polynomial term =
                    Polynomial::from_term(mono.step_up(idx.at(pos)),
                                          pos % 2 == 0 ? scale : -scale);
                r.add_term(idx.without_position(pos).indices(), term);
            }
        }
    }
    return r;
}

}  // namespace g2calc
