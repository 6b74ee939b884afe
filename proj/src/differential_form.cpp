#include "g2calc/differential_form.hpp"

#include <utility>

#include "g2calc/errors.hpp"

namespace g2calc {

DifferentialForm::DifferentialForm(int ambient_dim, int degree)
    : dim_(ambient_dim), degree_(degree) {
    if (ambient_dim < 1 || ambient_dim > kMaxAmbientDim)
        throw LimitExceeded("ambient dimension " + std::to_string(ambient_dim));
    // Degrees past the ambient dimension are allowed; only the zero form
    // inhabits them, which keeps wedge and pullback total.
    if (degree < 0) throw DegreeOverflow("negative form degree");
}

DifferentialForm DifferentialForm::from_polynomial(const Polynomial& p) {
    DifferentialForm f(p.ambient_dim(), 0);
    if (!p.is_zero()) f.terms_.emplace(MultiIndex(), p);
    return f;
}

DifferentialForm DifferentialForm::term(const Polynomial& coeff,
                                        const std::vector<int>& indices) {
    DifferentialForm f(coeff.ambient_dim(), static_cast<int>(indices.size()));
    f.add_term(indices, coeff);
    return f;
}

DifferentialForm DifferentialForm::basis(int ambient_dim, const std::vector<int>& indices) {
    return term(Polynomial::constant(ambient_dim, Rational(1)), indices);
}

Polynomial DifferentialForm::coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    if (it == terms_.end()) return Polynomial(dim_);
    return it->second;
}

Polynomial DifferentialForm::coefficient(const std::vector<int>& indices) const {
    return coefficient(MultiIndex(indices, dim_));
}

void DifferentialForm::add_term(const std::vector<int>& indices, const Polynomial& coeff) {
    if (static_cast<int>(indices.size()) != degree_)
        throw DegreeOverflow("term degree " + std::to_string(indices.size()) +
                             " in a form of degree " + std::to_string(degree_));
    if (coeff.ambient_dim() != dim_)
        throw DimensionMismatch("coefficient dimension");
    if (coeff.is_zero()) return;
    auto canon = MultiIndex::canonicalize(indices, dim_);
    if (!canon) return;  // repeated index
    Polynomial c = canon->first == 1 ? coeff : -coeff;
    insert(canon->second, std::move(c));
}

void DifferentialForm::insert(MultiIndex idx, Polynomial coeff) {
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), std::move(coeff));
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void DifferentialForm::check_compatible(const DifferentialForm& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("form ambient dimensions differ");
    if (degree_ != o.degree_)
        throw DegreeOverflow("form degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(dim_, degree_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
    return r;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) insert(idx, c);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) {
    check_compatible(o);
    for (const auto& [idx, c] : o.terms_) insert(idx, -c);
    return *this;
}

DifferentialForm operator*(const Rational& c, const DifferentialForm& a) {
    DifferentialForm r(a.dim_, a.degree_);
    if (c.is_zero()) return r;
    for (const auto& [idx, p] : a.terms_) r.terms_.emplace(idx, c * p);
    return r;
}

DifferentialForm operator*(const Polynomial& p, const DifferentialForm& a) {
    if (p.ambient_dim() != a.dim_) throw DimensionMismatch("scalar factor dimension");
    DifferentialForm r(a.dim_, a.degree_);
    if (p.is_zero()) return r;
    for (const auto& [idx, c] : a.terms_) {
        Polynomial prod = p * c;
        if (!prod.is_zero()) r.terms_.emplace(idx, std::move(prod));
    }
    return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

int DifferentialForm::coefficient_degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max(d, c.total_degree());
    return d;
}

std::string DifferentialForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : terms_) {
        if (!s.empty()) s += " ";
        s += "+ (" + c.str() + ")";
        if (idx.degree() > 0) s += " " + idx.str();
    }
    return s;
}

}  // namespace g2calc
