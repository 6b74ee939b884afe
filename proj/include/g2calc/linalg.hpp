#pragma once

#include <optional>
#include <vector>

#include "g2calc/rational.hpp"

namespace g2calc {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;  // row-major, rectangular

RatMat rat_identity(int n);
RatMat rat_transpose(const RatMat& a);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_apply(const RatMat& a, const RatVec& v);

int rat_rank(RatMat a);
Rational rat_determinant(RatMat a);
/// Inverse of a square matrix; nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& a);
/// One exact solution of a x = b for rectangular a; nullopt when inconsistent.
/// When the kernel is nontrivial the free variables are set to zero.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

/// All leading principal minors strictly positive (exact positive-definite test
/// for symmetric input).
bool rat_positive_definite(const RatMat& a);

// Double-precision variants for the numeric cross-check paths.
using DVec = std::vector<double>;
using DMat = std::vector<std::vector<double>>;

double d_determinant(DMat a);
std::optional<DMat> d_inverse(DMat a);
std::optional<DVec> d_solve(DMat a, DVec b);

}  // namespace g2calc
