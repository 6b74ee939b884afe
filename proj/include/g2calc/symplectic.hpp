#pragma once

#include "g2calc/exterior.hpp"
#include "g2calc/linalg.hpp"

namespace g2calc {

/// A closed nondegenerate constant-coefficient 2-form on a 2n-dimensional
/// chart. Construction verifies closedness and invertibility of the 2n x 2n
/// antisymmetric coefficient matrix.
class SymplecticStructure {
public:
    explicit SymplecticStructure(DifferentialForm omega);

    const DifferentialForm& omega() const { return omega_; }
    int ambient_dim() const { return omega_.ambient_dim(); }
    int half_dim() const { return omega_.ambient_dim() / 2; }

    /// Antisymmetric matrix A with omega = sum_{i<j} A_ij dx^i ^ dx^j.
    const RatMat& coefficient_matrix() const { return coeff_; }
    /// Inverse of A^T, the solve matrix for X ⌟ omega = (given 1-form).
    const RatMat& solve_matrix() const { return solve_; }

private:
    DifferentialForm omega_;
    RatMat coeff_;
    RatMat solve_;
};

struct SymplectomorphismBracketReport {
    Polynomial lhs;  // the bracket downstairs, composed with the map
    Polynomial rhs;  // the bracket of the composed functions
    bool equal;
};

/// The standard structure sum_i dx^i ^ dx^{n+i} on coordinates x_1..x_2n.
SymplecticStructure preset_omega_std(int n);

/// The unique field X with X ⌟ omega = dH, solved exactly.
VectorField hamiltonian_field(const SymplecticStructure& s, const Polynomial& h);

/// omega(X_f, X_g), computed through the shared contraction path.
Polynomial poisson_bracket(const SymplecticStructure& s, const Polynomial& f,
                           const Polynomial& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}; identically the zero polynomial.
Polynomial poisson_jacobi_check(const SymplecticStructure& s, const Polynomial& f,
                                const Polynomial& g, const Polynomial& h);

/// lhs = {f,g} composed with the map, rhs = bracket of the composed functions;
/// equal exactly when the map preserves the structure. The map must carry an
/// inverse.
SymplectomorphismBracketReport symplectomorphism_bracket_check(const SymplecticStructure& src,
                                                               const SymplecticStructure& dst,
                                                               const PolynomialMap& map,
                                                               const Polynomial& f,
                                                               const Polynomial& g);

}  // namespace g2calc
