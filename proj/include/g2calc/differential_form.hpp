#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2calc/multi_index.hpp"
#include "g2calc/polynomial.hpp"
#include "g2calc/rational.hpp"

namespace g2calc {

/// Homogeneous differential k-form with polynomial coefficients on a coordinate
/// chart. Invariant: every stored coefficient is a nonzero polynomial and every
/// multi-index has length k; the zero form stores no terms.
class DifferentialForm {
public:
    /// Zero k-form.
    DifferentialForm(int ambient_dim, int degree);

    /// A 0-form from a polynomial.
    static DifferentialForm from_polynomial(const Polynomial& p);
    /// coeff * dx^I with indices canonicalized (sign absorbed, repeats vanish).
    static DifferentialForm term(const Polynomial& coeff, const std::vector<int>& indices);
    /// Constant-coefficient basis form dx^I.
    static DifferentialForm basis(int ambient_dim, const std::vector<int>& indices);

    int ambient_dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<MultiIndex, Polynomial>& terms() const { return terms_; }
    /// Coefficient of dx^I (zero polynomial when absent).
    Polynomial coefficient(const MultiIndex& idx) const;
    Polynomial coefficient(const std::vector<int>& indices) const;

    /// Adds coeff*dx^I, canonicalizing the index tuple and dropping zeros.
    void add_term(const std::vector<int>& indices, const Polynomial& coeff);

    DifferentialForm operator-() const;
    DifferentialForm& operator+=(const DifferentialForm& o);
    DifferentialForm& operator-=(const DifferentialForm& o);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) {
        return a += b;
    }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) {
        return a -= b;
    }
    friend DifferentialForm operator*(const Rational& c, const DifferentialForm& a);
    friend DifferentialForm operator*(const Polynomial& p, const DifferentialForm& a);

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);
    friend bool operator!=(const DifferentialForm& a, const DifferentialForm& b) {
        return !(a == b);
    }

    /// Largest total degree among coefficient polynomials (0 for the zero form).
    int coefficient_degree() const;

    /// Canonical text: terms in multi-index order, each "+ (coeff) dx[i,j]";
    /// 0-forms print "+ (coeff)"; the zero form prints "0".
    std::string str() const;

private:
    void insert(MultiIndex idx, Polynomial coeff);
    void check_compatible(const DifferentialForm& o) const;

    int dim_;
    int degree_;
    std::map<MultiIndex, Polynomial> terms_;
};

}  // namespace g2calc
