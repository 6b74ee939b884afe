#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "g2calc/errors.hpp"

namespace g2calc {

/// Soft limits. Product charts need dimension 14; anything beyond is out of scope.
inline constexpr int kMaxAmbientDim = 14;
inline constexpr int kMaxTotalDegree = 16;

/// Exponent vector of a power product x1^e1 ... xn^en.
/// Invariant: length equals the ambient chart dimension; all exponents >= 0.
class Monomial {
public:
    explicit Monomial(int ambient_dim) : exps_(check_dim(ambient_dim), 0) {}
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        check_dim(static_cast<int>(exps_.size()));
        for (int e : exps_)
            if (e < 0) throw Error("negative exponent in monomial");
        check_degree(degree());
    }

    int dim() const { return static_cast<int>(exps_.size()); }
    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    /// Exponent of x_i, 1-based.
    int exponent(int i) const {
        if (i < 1 || i > dim()) throw IndexOutOfRange("monomial exponent index " + std::to_string(i));
        return exps_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial times(const Monomial& o) const {
        if (o.dim() != dim()) throw DimensionMismatch("monomial product across dimensions");
        std::vector<int> e(exps_);
        for (int i = 0; i < dim(); ++i) e[static_cast<std::size_t>(i)] += o.exps_[static_cast<std::size_t>(i)];
        return Monomial(std::move(e));
    }

    /// Divides the exponent of x_i by stepping it down once; used by d/dx_i.
    Monomial step_down(int i) const {
        std::vector<int> e(exps_);
        e[static_cast<std::size_t>(i - 1)] -= 1;
        return Monomial(std::move(e));
    }
    Monomial step_up(int i) const {
        std::vector<int> e(exps_);
        e[static_cast<std::size_t>(i - 1)] += 1;
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

    /// Graded lexicographic order: total degree first, then lexicographic on exponents.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps_ < b.exps_;
    }

private:
    static int check_dim(int n) {
        if (n < 1) throw DimensionMismatch("ambient dimension must be positive");
        if (n > kMaxAmbientDim)
            throw LimitExceeded("ambient dimension " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kMaxAmbientDim));
        return n;
    }
    static void check_degree(int d) {
        if (d > kMaxTotalDegree)
            throw LimitExceeded("total degree " + std::to_string(d) + " exceeds limit " +
                                std::to_string(kMaxTotalDegree));
    }

    std::vector<int> exps_;
};

}  // namespace g2calc
