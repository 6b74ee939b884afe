#include "g2calc/polynomial_map.hpp"

#include <utility>

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

void check_coords(int source_dim, const std::vector<Polynomial>& coords, const char* what) {
    if (source_dim < 1 || source_dim > kMaxAmbientDim)
        throw LimitExceeded("ambient dimension " + std::to_string(source_dim));
    if (coords.empty() || static_cast<int>(coords.size()) > kMaxAmbientDim)
        throw LimitExceeded(std::string(what) + " coordinate count");
    for (const auto& c : coords)
        if (c.ambient_dim() != source_dim)
            throw DimensionMismatch(std::string(what) + " coordinate dimension");
}

bool is_identity_coords(const std::vector<Polynomial>& coords) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != Polynomial::variable(static_cast<int>(coords.size()),
                                              static_cast<int>(i) + 1))
            return false;
    return true;
}

std::vector<Polynomial> compose_coords(const std::vector<Polynomial>& outer,
                                       const std::vector<Polynomial>& inner) {
    std::vector<Polynomial> r;
    r.reserve(outer.size());
    for (const auto& c : outer) r.push_back(c.compose(inner));
    return r;
}

}  // namespace

PolynomialMap::PolynomialMap(int source_dim, std::vector<Polynomial> coords)
    : source_dim_(source_dim), coords_(std::move(coords)) {
    check_coords(source_dim_, coords_, "map");
}

PolynomialMap::PolynomialMap(int source_dim, std::vector<Polynomial> coords,
                             std::vector<Polynomial> inverse_coords)
    : source_dim_(source_dim), coords_(std::move(coords)) {
    check_coords(source_dim_, coords_, "map");
    if (static_cast<int>(coords_.size()) != source_dim_)
        throw DimensionMismatch("invertible map must preserve dimension");
    check_coords(source_dim_, inverse_coords, "inverse");
    if (inverse_coords.size() != coords_.size())
        throw DimensionMismatch("inverse coordinate count");
    if (!is_identity_coords(compose_coords(inverse_coords, coords_)) ||
        !is_identity_coords(compose_coords(coords_, inverse_coords)))
        throw MissingInverse("claimed inverse fails the identity-composition check");
    inverse_coords_ = std::move(inverse_coords);
}

PolynomialMap PolynomialMap::identity(int ambient_dim) {
    std::vector<Polynomial> coords;
    coords.reserve(static_cast<std::size_t>(ambient_dim));
    for (int i = 1; i <= ambient_dim; ++i)
        coords.push_back(Polynomial::variable(ambient_dim, i));
    std::vector<Polynomial> inv = coords;
    return PolynomialMap(ambient_dim, std::move(coords), std::move(inv));
}

PolynomialMap PolynomialMap::affine(const RatMat& a, const RatVec& b) {
    const int n = static_cast<int>(a.size());
    if (n == 0 || static_cast<int>(b.size()) != n) throw DimensionMismatch("affine shape");
    auto ainv = rat_inverse(a);
    if (!ainv) throw DegenerateStructure("affine map with singular linear part");

    auto build = [n](const RatMat& m, const RatVec& shift) {
        std::vector<Polynomial> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Polynomial p = Polynomial::constant(n, shift[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j) {
                const Rational& c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (!c.is_zero()) p += c * Polynomial::variable(n, j + 1);
            }
            coords.push_back(std::move(p));
        }
        return coords;
    };

    // Inverse: x = A^{-1}(y - b).
    RatVec inv_shift = rat_apply(*ainv, b);
    for (auto& v : inv_shift) v = -v;
    return PolynomialMap(n, build(a, b), build(*ainv, inv_shift));
}

PolynomialMap PolynomialMap::linear(const RatMat& a) {
    return affine(a, RatVec(a.size(), Rational(0)));
}

const Polynomial& PolynomialMap::coord(int i) const {
    if (i < 1 || i > target_dim()) throw IndexOutOfRange("map coordinate index");
    return coords_[static_cast<std::size_t>(i - 1)];
}

PolynomialMap PolynomialMap::inverse() const {
    if (!inverse_coords_) throw MissingInverse("map carries no certified inverse");
    return PolynomialMap(target_dim(), *inverse_coords_, coords_);
}

PolynomialMap PolynomialMap::compose(const PolynomialMap& other) const {
    if (other.target_dim() != source_dim_)
        throw DimensionMismatch("composition dimensions " + std::to_string(other.target_dim()) +
                                " and " + std::to_string(source_dim_));
    std::vector<Polynomial> coords = compose_coords(coords_, other.coords_);
    if (inverse_coords_ && other.inverse_coords_)
        return PolynomialMap(other.source_dim_, std::move(coords),
                             compose_coords(*other.inverse_coords_, *inverse_coords_));
    return PolynomialMap(other.source_dim_, std::move(coords));
}

std::vector<std::vector<Polynomial>> PolynomialMap::jacobian() const {
    std::vector<std::vector<Polynomial>> j;
    j.reserve(coords_.size());
    for (const auto& c : coords_) {
        std::vector<Polynomial> row;
        row.reserve(static_cast<std::size_t>(source_dim_));
        for (int k = 1; k <= source_dim_; ++k) row.push_back(c.partial(k));
        j.push_back(std::move(row));
    }
    return j;
}

RatVec PolynomialMap::eval(const RatVec& x) const {
    if (static_cast<int>(x.size()) != source_dim_) throw DimensionMismatch("point dimension");
    RatVec y;
    y.reserve(coords_.size());
    for (const auto& c : coords_) y.push_back(c.eval(x));
    return y;
}

DVec PolynomialMap::eval(const DVec& x) const {
    if (static_cast<int>(x.size()) != source_dim_) throw DimensionMismatch("point dimension");
    DVec y;
    y.reserve(coords_.size());
    for (const auto& c : coords_) y.push_back(c.eval(x));
    return y;
}

std::string PolynomialMap::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += "; ";
        s += "y" + std::to_string(i + 1) + " = " + coords_[i].str();
    }
    return s;
}

}  // namespace g2calc
