#pragma once

#include <map>
#include <utility>
#include <vector>

#include "g2calc/g2.hpp"

namespace g2calc {

/// Every tolerance used by the floating-point cross-checks, in one place.
struct Tolerances {
    double translation_drift = 1e-12;   // constant-field flows are exact
    double preserving_drift = 1e-8;     // preserving flows at t=1, 1000 steps
    double breaking_drift = 1e-3;       // lower bound for non-preserving flows
    double constancy_constant = 1e-10;  // constant-field transported samples
    double constancy_kernel = 1e-6;     // certified kernel pairs
    double constancy_moving = 1e-3;     // lower bound for certified non-kernel pairs
    double finite_difference = 1e-6;    // central difference vs symbolic derivative
    double pointwise_agreement = 1e-10; // sampled symbolic identities
    double rk4_factor_low = 8.0;        // halving the step divides drift by ~16
    double rk4_factor_high = 32.0;
};

/// Fixed-step trajectory with the per-step pullback deviation of the
/// structure form, measured on frames transported by the flow's Jacobian.
struct FlowResult {
    std::vector<std::pair<double, DVec>> trajectory;  // strictly increasing times
    std::vector<double> pullback_drift;               // one entry per step, >= 0
};

/// Alternating multilinear evaluation of a k-form on k tangent vectors at a
/// point. Throws DimensionMismatch when the vector count is not the degree.
double eval_form(const DifferentialForm& a, const DVec& point,
                 const std::vector<DVec>& vectors);
/// Exact-rational variant of the same evaluation.
Rational eval_form_exact(const DifferentialForm& a, const RatVec& point,
                         const std::vector<RatVec>& vectors);

/// Central-difference approximation of the exterior derivative's coefficients
/// at a point, on the degree k+1 basis multi-indices. Agrees with the symbolic
/// derivative to O(h^2).
std::map<MultiIndex, double> finite_difference_d(const DifferentialForm& a, const DVec& point,
                                                 double h);

/// Classical fixed-step fourth-order Runge-Kutta flow of the field, carrying
/// the variational (Jacobian) equation alongside the base point so the
/// pullback of the structure form can be sampled without finite-differencing
/// neighboring trajectories.
FlowResult integrate_flow(const G2Structure& g2, const VectorField& x, const DVec& start,
                          double t_end, int steps);

/// Maximum deviation of d(alpha1), sampled on flow-transported frame pairs,
/// along the flow of the field of alpha2. Near zero exactly when the pair's
/// bracket differential vanishes.
double flow_constancy_sample(const G2Structure& g2, const DifferentialForm& alpha1,
                             const DifferentialForm& alpha2, const DVec& start, double t_end,
                             int steps);

}  // namespace g2calc
