#pragma once

#include "g2calc/differential_form.hpp"
#include "g2calc/polynomial_map.hpp"
#include "g2calc/vector_field.hpp"

namespace g2calc {

/// a ∧ b; degrees summing past the ambient dimension yield the zero form of
/// that degree.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

bool is_top_degree(const DifferentialForm& a);

/// Exterior derivative; throws DegreeOverflow on a top-degree form.
DifferentialForm exterior_derivative(const DifferentialForm& a);

/// X ⌟ a, contraction in the first slot; requires degree >= 1.
DifferentialForm interior_product(const VectorField& x, const DifferentialForm& a);

/// Lie derivative by Cartan's formula, with the degree-0 and top-degree cases
/// reduced to their single surviving term.
DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& a);

/// Commutator [X,Y], the field with [X,Y]f = X(Yf) - Y(Xf).
VectorField vector_bracket(const VectorField& x, const VectorField& y);

/// psi^* a for a form on the target chart of psi; the result lives on the
/// source chart. No inverse is needed.
DifferentialForm pullback(const PolynomialMap& psi, const DifferentialForm& a);

/// Transport of a field on the target chart of psi back to the source chart,
/// i.e. the pushforward along the certified inverse of psi. Satisfies
/// pullback(psi, X ⌟ a) = pushforward_inverse(psi, X) ⌟ pullback(psi, a).
VectorField pushforward_inverse(const PolynomialMap& psi, const VectorField& x);

/// Primitive of a closed form of degree >= 1 via the radial homotopy, so
/// exterior_derivative(poincare_primitive(a)) == a. Throws NotClosed when
/// d a != 0.
DifferentialForm poincare_primitive(const DifferentialForm& a);

}  // namespace g2calc
