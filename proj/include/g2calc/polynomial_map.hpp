#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2calc/linalg.hpp"
#include "g2calc/polynomial.hpp"

namespace g2calc {

/// Polynomial map psi: R^source_dim -> R^target_dim given by coordinate
/// polynomials. A map may carry certified inverse coordinates; certification
/// means both compositions reduce to the identity exactly, so pullback and
/// pushforward along the inverse are available.
class PolynomialMap {
public:
    /// Map without an inverse. coords[i] is the i-th target coordinate as a
    /// polynomial in the source variables.
    PolynomialMap(int source_dim, std::vector<Polynomial> coords);
    /// Map with claimed inverse coordinates; throws MissingInverse unless both
    /// compositions are exactly the identity.
    PolynomialMap(int source_dim, std::vector<Polynomial> coords,
                  std::vector<Polynomial> inverse_coords);

    static PolynomialMap identity(int ambient_dim);
    /// x -> A x + b with exact inverse; throws DegenerateStructure when A is
    /// singular.
    static PolynomialMap affine(const RatMat& a, const RatVec& b);
    /// Invertible linear map.
    static PolynomialMap linear(const RatMat& a);

    int source_dim() const { return source_dim_; }
    int target_dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<Polynomial>& coords() const { return coords_; }
    /// i is 1-based.
    const Polynomial& coord(int i) const;

    bool has_inverse() const { return inverse_coords_.has_value(); }
    /// Certified inverse map; throws MissingInverse when absent.
    PolynomialMap inverse() const;

    /// this after other: (this ∘ other)(x) = this(other(x)). Inverses compose
    /// when both factors carry one.
    PolynomialMap compose(const PolynomialMap& other) const;

    /// Jacobian matrix of polynomials, entry (i,j) = d coord_i / d x_j.
    std::vector<std::vector<Polynomial>> jacobian() const;

    RatVec eval(const RatVec& x) const;
    DVec eval(const DVec& x) const;

    std::string str() const;

private:
    int source_dim_;
    std::vector<Polynomial> coords_;
    std::optional<std::vector<Polynomial>> inverse_coords_;
};

}  // namespace g2calc
