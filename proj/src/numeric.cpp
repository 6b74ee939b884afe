#include "g2calc/numeric.hpp"

#include <cmath>
#include <cstdlib>

namespace g2calc {

namespace {

DMat d_minor(const std::vector<DVec>& vectors, const MultiIndex& idx) {
    const std::size_t k = vectors.size();
    DMat m(k, DVec(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            m[a][b] = vectors[b][static_cast<std::size_t>(idx.at(static_cast<int>(a)) - 1)];
    return m;
}

struct FlowState {
    DVec p;      // base point
    DMat j;      // Jacobian of the flow map, columns are transported frame vectors
};

FlowState scaled_sum(const FlowState& s, double h, const FlowState& d) {
    FlowState r = s;
    const std::size_t n = s.p.size();
    for (std::size_t i = 0; i < n; ++i) {
        r.p[i] += h * d.p[i];
        for (std::size_t c = 0; c < n; ++c) r.j[i][c] += h * d.j[i][c];
    }
    return r;
}

/// Right-hand side of the combined system: dp/dt = X(p), dJ/dt = DX(p) J.
FlowState derivative(const VectorField& x, const FlowState& s) {
    const int dim = x.ambient_dim();
    const std::size_t n = static_cast<std::size_t>(dim);
    FlowState d{DVec(n), DMat(n, DVec(n, 0.0))};
    DMat dx(n, DVec(n));
    for (int i = 1; i <= dim; ++i) {
        d.p[static_cast<std::size_t>(i - 1)] = x.component(i).eval(s.p);
        for (int jv = 1; jv <= dim; ++jv)
            dx[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jv - 1)] =
                x.component(i).partial(jv).eval(s.p);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += dx[i][k] * s.j[k][c];
            d.j[i][c] = acc;
        }
    return d;
}

FlowState rk4_step(const VectorField& x, const FlowState& s, double h) {
    const FlowState k1 = derivative(x, s);
    const FlowState k2 = derivative(x, scaled_sum(s, h / 2, k1));
    const FlowState k3 = derivative(x, scaled_sum(s, h / 2, k2));
    const FlowState k4 = derivative(x, scaled_sum(s, h, k3));
    FlowState r = s;
    const std::size_t n = s.p.size();
    for (std::size_t i = 0; i < n; ++i) {
        r.p[i] += h / 6 * (k1.p[i] + 2 * k2.p[i] + 2 * k3.p[i] + k4.p[i]);
        for (std::size_t c = 0; c < n; ++c)
            r.j[i][c] += h / 6 * (k1.j[i][c] + 2 * k2.j[i][c] + 2 * k3.j[i][c] + k4.j[i][c]);
    }
    return r;
}

DVec column(const DMat& m, std::size_t c) {
    DVec v(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i][c];
    return v;
}

/// Max over basis k-tuples of |form at (state) on transported frame - the
/// initial value|, the pointwise pullback deviation.
double frame_deviation(const DifferentialForm& form, const std::vector<double>& initial,
                       const std::vector<MultiIndex>& tuples, const FlowState& s) {
    double worst = 0.0;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        std::vector<DVec> frame;
        frame.reserve(static_cast<std::size_t>(tuples[t].degree()));
        for (int pos = 0; pos < tuples[t].degree(); ++pos)
            frame.push_back(column(s.j, static_cast<std::size_t>(tuples[t].at(pos) - 1)));
        const double now = eval_form(form, s.p, frame);
        worst = std::max(worst, std::abs(now - initial[t]));
    }
    return worst;
}

std::vector<double> initial_values(const DifferentialForm& form, const DVec& start,
                                   const std::vector<MultiIndex>& tuples) {
    std::vector<double> init;
    init.reserve(tuples.size());
    const std::size_t n = start.size();
    for (const auto& idx : tuples) {
        std::vector<DVec> frame;
        for (int pos = 0; pos < idx.degree(); ++pos) {
            DVec e(n, 0.0);
            e[static_cast<std::size_t>(idx.at(pos) - 1)] = 1.0;
            frame.push_back(std::move(e));
        }
        init.push_back(eval_form(form, start, frame));
    }
    return init;
}

FlowResult transported_flow(const DifferentialForm& form, const VectorField& x,
                            const DVec& start, double t_end, int steps) {
    if (steps < 1) throw Error("flow integration needs at least one step");
    if (!std::isfinite(t_end)) throw Error("flow end time must be finite");
    if (static_cast<int>(start.size()) != x.ambient_dim())
        throw DimensionMismatch("start point has the wrong length");

    const std::size_t n = start.size();
    const auto tuples = MultiIndex::all(static_cast<int>(n), form.degree());
    const auto init = initial_values(form, start, tuples);

    FlowState s{start, DMat(n, DVec(n, 0.0))};
    for (std::size_t i = 0; i < n; ++i) s.j[i][i] = 1.0;

    FlowResult result;
    result.trajectory.emplace_back(0.0, s.p);
    const double h = t_end / steps;
    for (int m = 1; m <= steps; ++m) {
        s = rk4_step(x, s, h);
        result.trajectory.emplace_back(m * h, s.p);
        result.pullback_drift.push_back(frame_deviation(form, init, tuples, s));
    }
    return result;
}

}  // namespace

double eval_form(const DifferentialForm& a, const DVec& point,
                 const std::vector<DVec>& vectors) {
    if (static_cast<int>(vectors.size()) != a.degree())
        throw DimensionMismatch("vector count must equal the form degree");
    double total = 0.0;
    for (const auto& [idx, coeff] : a.terms())
        total += coeff.eval(point) * d_determinant(d_minor(vectors, idx));
    return total;
}

Rational eval_form_exact(const DifferentialForm& a, const RatVec& point,
                         const std::vector<RatVec>& vectors) {
    if (static_cast<int>(vectors.size()) != a.degree())
        throw DimensionMismatch("vector count must equal the form degree");
    Rational total(0);
    for (const auto& [idx, coeff] : a.terms()) {
        const std::size_t k = vectors.size();
        RatMat m(k, RatVec(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                m[r][c] = vectors[c][static_cast<std::size_t>(idx.at(static_cast<int>(r)) - 1)];
        total += coeff.eval(point) * rat_determinant(std::move(m));
    }
    return total;
}

std::map<MultiIndex, double> finite_difference_d(const DifferentialForm& a, const DVec& point,
                                                 double h) {
    if (!(h > 0.0)) throw Error("difference step must be positive");
    const int dim = a.ambient_dim();
    if (static_cast<int>(point.size()) != dim)
        throw DimensionMismatch("point has the wrong length");

    // Coefficient of dx^J in d(a): sum over positions of the signed central
    // difference of the coefficient at J with that position removed.
    std::map<MultiIndex, double> result;
    for (const auto& j : MultiIndex::all(dim, a.degree() + 1)) {
        double acc = 0.0;
        for (int pos = 0; pos < j.degree(); ++pos) {
            const Polynomial coeff = a.coefficient(j.without_position(pos));
            if (coeff.is_zero()) continue;
            DVec forward = point, backward = point;
            const std::size_t var = static_cast<std::size_t>(j.at(pos) - 1);
            forward[var] += h;
            backward[var] -= h;
            const double diff = (coeff.eval(forward) - coeff.eval(backward)) / (2 * h);
            acc += pos % 2 == 0 ? diff : -diff;
        }
        result.emplace(j, acc);
    }
    return result;
}

FlowResult integrate_flow(const G2Structure& g2, const VectorField& x, const DVec& start,
                          double t_end, int steps) {
    if (x.ambient_dim() != g2.ambient_dim())
        throw DimensionMismatch("field lives on the wrong chart");
    return transported_flow(g2.phi(), x, start, t_end, steps);
}

double flow_constancy_sample(const G2Structure& g2, const DifferentialForm& alpha1,
                             const DifferentialForm& alpha2, const DVec& start, double t_end,
                             int steps) {
    rochesterian_field_of(g2, alpha1);  // enforce the precondition on alpha1
    const VectorField x2 = rochesterian_field_of(g2, alpha2);
    const FlowResult result =
        transported_flow(exterior_derivative(alpha1), x2, start, t_end, steps);
    double worst = 0.0;
    for (double d : result.pullback_drift) worst = std::max(worst, d);
    return worst;
}

}  // namespace g2calc
