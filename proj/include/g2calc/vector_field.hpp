#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2calc/errors.hpp"
#include "g2calc/polynomial.hpp"

namespace g2calc {

/// Polynomial vector field X = sum_i X^i e_i on a coordinate chart.
class VectorField {
public:
    explicit VectorField(int ambient_dim)
        : dim_(ambient_dim),
          comps_(static_cast<std::size_t>(ambient_dim), Polynomial(ambient_dim)) {
        if (ambient_dim < 1 || ambient_dim > kMaxAmbientDim)
            throw LimitExceeded("ambient dimension " + std::to_string(ambient_dim));
    }

    explicit VectorField(std::vector<Polynomial> components)
        : dim_(static_cast<int>(components.size())), comps_(std::move(components)) {
        if (dim_ < 1 || dim_ > kMaxAmbientDim)
            throw LimitExceeded("ambient dimension " + std::to_string(dim_));
        for (const auto& c : comps_)
            if (c.ambient_dim() != dim_) throw DimensionMismatch("component dimension");
    }

    /// Coordinate frame field e_i (1-based).
    static VectorField basis(int ambient_dim, int i) {
        VectorField v(ambient_dim);
        if (i < 1 || i > ambient_dim) throw IndexOutOfRange("basis field index");
        v.comps_[static_cast<std::size_t>(i - 1)] =
            Polynomial::constant(ambient_dim, Rational(1));
        return v;
    }

    int ambient_dim() const { return dim_; }
    /// i is 1-based.
    const Polynomial& component(int i) const {
        if (i < 1 || i > dim_) throw IndexOutOfRange("field component index");
        return comps_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    VectorField operator-() const {
        std::vector<Polynomial> r;
        r.reserve(comps_.size());
        for (const auto& c : comps_) r.push_back(-c);
        return VectorField(std::move(r));
    }
    friend VectorField operator+(const VectorField& a, const VectorField& b) {
        if (a.dim_ != b.dim_) throw DimensionMismatch("field ambient dimensions differ");
        std::vector<Polynomial> r;
        r.reserve(a.comps_.size());
        for (std::size_t i = 0; i < a.comps_.size(); ++i) r.push_back(a.comps_[i] + b.comps_[i]);
        return VectorField(std::move(r));
    }
    friend VectorField operator-(const VectorField& a, const VectorField& b) {
        return a + (-b);
    }
    friend VectorField operator*(const Rational& c, const VectorField& a) {
        std::vector<Polynomial> r;
        r.reserve(a.comps_.size());
        for (const auto& p : a.comps_) r.push_back(c * p);
        return VectorField(std::move(r));
    }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.dim_ == b.dim_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

    /// Derivation on functions: X(f) = sum_i X^i df/dx_i.
    Polynomial apply(const Polynomial& f) const {
        if (f.ambient_dim() != dim_) throw DimensionMismatch("function dimension");
        Polynomial r(dim_);
        for (int i = 1; i <= dim_; ++i) r += component(i) * f.partial(i);
        return r;
    }

    std::string str() const {
        std::string s;
        for (int i = 1; i <= dim_; ++i) {
            const Polynomial& c = component(i);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " ";
            s += "+ (" + c.str() + ") e" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    int dim_;
    std::vector<Polynomial> comps_;
};

}  // namespace g2calc
