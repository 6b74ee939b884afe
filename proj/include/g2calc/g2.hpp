#pragma once

#include <map>
#include <optional>

#include "g2calc/exterior.hpp"
#include "g2calc/linalg.hpp"

namespace g2calc {

/// A 1-form whose differential has a component outside the image of
/// contraction into phi; the offending component rides along as a diagnostic.
class NotRochesterian : public Error {
public:
    NotRochesterian(const std::string& msg, DifferentialForm residual)
        : Error(msg), residual_(std::move(residual)) {}
    const DifferentialForm& residual() const { return residual_; }

private:
    DifferentialForm residual_;
};

/// A 3-form on a 7-dimensional chart with the contraction map X -> X ⌟ phi of
/// full rank. Construction verifies the rank at the origin and, for
/// non-constant coefficients, at five fixed rational sample points.
///
/// Constant-coefficient structures carry the 21x7 contraction matrix; when the
/// recovered metric is exactly rational they also carry the solve matrix for
/// the orthogonal projection onto the contraction image.
class G2Structure {
public:
    explicit G2Structure(DifferentialForm phi);

    const DifferentialForm& phi() const { return phi_; }
    int ambient_dim() const { return phi_.ambient_dim(); }
    bool is_closed() const { return closed_; }
    bool constant_coefficients() const { return constant_; }

    bool has_exact_metric() const { return exact_gram_.has_value(); }
    /// Exact gram matrix of the recovered metric; throws UnsupportedStructure
    /// when the structure is non-constant or the normalizing root is
    /// irrational.
    const RatMat& exact_gram() const;
    /// Exact volume coefficient sqrt(det g), same availability as exact_gram.
    const Rational& exact_volume() const;

    /// 21x7 matrix of X -> X ⌟ phi over the lexicographic 2-form basis;
    /// constant-coefficient structures only.
    const RatMat& contraction_matrix() const;
    /// 7x21 matrix S with S a = the unique witness of the orthogonal
    /// projection of the 2-form a onto the contraction image; requires an
    /// exact metric.
    const RatMat& witness_solve_matrix() const;

private:
    DifferentialForm phi_;
    bool closed_;
    bool constant_;
    std::optional<RatMat> contraction_;
    std::optional<RatMat> exact_gram_;
    std::optional<Rational> exact_volume_;
    std::optional<RatMat> witness_solve_;
};

struct MetricReport {
    DMat gram;                 // 7x7, symmetric positive definite
    double volume_coefficient;  // sqrt(det g)
    DVec point;
    std::optional<RatMat> exact_gram;
    std::optional<Rational> exact_volume;
};

struct TwoFormSplit {
    DifferentialForm omega7;
    DifferentialForm omega14;
    std::optional<VectorField> witness;  // witness ⌟ phi = omega7
};

struct G2FieldReport {
    bool preserves;               // flow preserves phi
    DifferentialForm certificate;  // d(X ⌟ phi)
};

struct MorphismReport {
    bool is_morphism;
    DifferentialForm defect;  // pullback of the target form minus the source form
};

struct GraphReport {
    DifferentialForm restricted;  // the product-chart difference form pulled back to the graph
    bool vanishes;
};

struct BracketPullbackReport {
    DifferentialForm lhs;  // pullback of the bracket
    DifferentialForm rhs;  // bracket of the pullbacks
    bool equal;
};

struct FlowConstancyReport {
    DifferentialForm lie_of_dalpha1;
    bool in_kernel;  // d of the bracket of the pair vanishes
};

struct JacobiDefectReport {
    DifferentialForm lhs;  // cyclic sum of nested brackets
    DifferentialForm rhs;  // d of the double contraction
};

/// The model form dx^123 + dx^145 + dx^167 + dx^246 - dx^257 - dx^347 - dx^356.
G2Structure preset_phi0();
/// Its Hodge dual dx^4567 + dx^2367 + dx^2345 + dx^1357 - dx^1346 - dx^1256 - dx^1247.
DifferentialForm preset_star_phi0();
/// The closed structure on coordinates (x1,x2,x3,y1,y2,y3,t): the real part of
/// the complex volume form plus (sum_i dy_i ^ dx_i) ^ dt, with the sign chosen
/// so the vertical field d/dt has the tautological 1-form sum_i y_i dx_i as a
/// primitive.
G2Structure preset_cst();

/// Recovers the metric at a point from the normalization that contracting two
/// frame fields into phi and wedging with phi yields 6 <X,Y> times the volume
/// form. Exact when the structure carries an exact metric.
MetricReport metric_from_phi(const G2Structure& g2, const DVec& point);

/// Exact cross product: the unique field with <X x Y, Z> = phi(X,Y,Z).
/// Requires an exact metric; polynomial in the inputs.
VectorField cross_product(const G2Structure& g2, const VectorField& x, const VectorField& y);
/// Pointwise cross product against the metric recovered at the point.
DVec cross_product_at(const G2Structure& g2, const VectorField& x, const VectorField& y,
                      const DVec& point);

/// Exact Hodge star with respect to the recovered metric and orientation;
/// requires an exact metric.
DifferentialForm hodge_star(const G2Structure& g2, const DifferentialForm& a);
/// Pointwise Hodge star coefficients at a sample point.
std::map<MultiIndex, double> hodge_star_at(const G2Structure& g2, const DifferentialForm& a,
                                           const DVec& point);

/// Orthogonal decomposition of a 2-form into the contraction image (dimension
/// 7) and its complement (dimension 14), coefficient-wise over monomials.
TwoFormSplit split_two_form(const G2Structure& g2, const DifferentialForm& a);

/// For closed structures: the flow of X preserves phi iff d(X ⌟ phi) = 0,
/// which is returned as the certificate.
G2FieldReport is_g2_vector_field(const G2Structure& g2, const VectorField& x);

/// The unique field X with X ⌟ phi = d alpha; throws NotRochesterian with the
/// complement residual when d alpha leaves the contraction image.
VectorField rochesterian_field_of(const G2Structure& g2, const DifferentialForm& alpha);

/// The bracket phi(X_alpha, X_beta, .); its differential is verified to equal
/// [X_beta, X_alpha] ⌟ phi, so the result is again in the Rochesterian class.
DifferentialForm rochesterian_bracket(const G2Structure& g2, const DifferentialForm& alpha,
                                      const DifferentialForm& beta);

/// lhs = {alpha,{beta,gamma}} + {beta,{gamma,alpha}} + {gamma,{alpha,beta}};
/// rhs = d(X_alpha ⌟ X_beta ⌟ d gamma). The two agree identically.
JacobiDefectReport jacobi_defect(const G2Structure& g2, const DifferentialForm& alpha,
                                 const DifferentialForm& beta, const DifferentialForm& gamma);

/// Defect pullback(map, phi_dst) - phi_src; zero defect certifies a
/// structure-preserving diffeomorphism. The map must carry an inverse.
MorphismReport is_g2_morphism(const G2Structure& src, const G2Structure& dst,
                              const PolynomialMap& map);

/// Builds the difference of the two projections' pullbacks on the product
/// chart and restricts it to the graph of upsilon; the result equals
/// phi_src - pullback(upsilon, phi_dst) and vanishes exactly for morphisms.
GraphReport graph_criterion(const G2Structure& g2_1, const G2Structure& g2_2,
                            const PolynomialMap& upsilon);

/// lhs = pullback of {alpha,beta}; rhs = bracket of the pullbacks. Equal for
/// structure-preserving maps.
BracketPullbackReport bracket_pullback_check(const G2Structure& src, const G2Structure& dst,
                                             const PolynomialMap& map,
                                             const DifferentialForm& alpha,
                                             const DifferentialForm& beta);

/// Returns the Lie derivative of d alpha1 along the field of alpha2 together
/// with the kernel verdict d{alpha1,alpha2} = 0; the two vanish together.
FlowConstancyReport flow_constancy_check(const G2Structure& g2, const DifferentialForm& alpha1,
                                         const DifferentialForm& alpha2);

}  // namespace g2calc
