#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "g2calc/monomial.hpp"
#include "g2calc/rational.hpp"

namespace g2calc {

/// Exact multivariate polynomial with rational coefficients.
/// Invariants: no zero coefficients stored; all monomials have length ambient_dim;
/// the stored representation is canonical, so equality is term-map identity.
class Polynomial {
public:
    explicit Polynomial(int ambient_dim);

    static Polynomial constant(int ambient_dim, Rational c);
    /// The coordinate function x_i (1-based).
    static Polynomial variable(int ambient_dim, int i);
    static Polynomial from_term(Monomial m, Rational c);

    int ambient_dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Max total degree over stored terms; 0 for the zero polynomial.
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    /// Coefficient of the degree-0 monomial.
    Rational constant_term() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact partial derivative with respect to x_i (1-based).
    Polynomial partial(int i) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    /// Substitutes subs[i-1] for x_i; all substituted polynomials share one
    /// source dimension, which becomes the result's ambient dimension.
    Polynomial compose(std::span<const Polynomial> subs) const;

    /// Canonical text: terms in descending graded-lex order, powers written as
    /// repeated products ("x1*x1*x3"), e.g. "2*x1*x1 - 1/3*x2 + 4".
    std::string str() const;

private:
    void check_same_chart(const Polynomial& o) const;

    int dim_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace g2calc
