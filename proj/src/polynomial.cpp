#include "g2calc/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace g2calc {

Polynomial::Polynomial(int ambient_dim) : dim_(ambient_dim) {
    Monomial probe(ambient_dim);  // runs the dimension checks
    (void)probe;
}

Polynomial Polynomial::constant(int ambient_dim, Rational c) {
    Polynomial p(ambient_dim);
    p.add_term(Monomial(ambient_dim), c);
    return p;
}

Polynomial Polynomial::variable(int ambient_dim, int i) {
    if (i < 1 || i > ambient_dim)
        throw IndexOutOfRange("variable index " + std::to_string(i) + " on a " +
                              std::to_string(ambient_dim) + "-dimensional chart");
    return from_term(Monomial(ambient_dim).step_up(i), Rational(1));
}

Polynomial Polynomial::from_term(Monomial m, Rational c) {
    Polynomial p(m.dim());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const { return total_degree() == 0; }

int Polynomial::total_degree() const {
    // Graded-lex order puts the highest-degree term last.
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(dim_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.dim() != dim_) throw DimensionMismatch("term dimension differs from polynomial chart");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

void Polynomial::check_same_chart(const Polynomial& o) const {
    if (o.dim_ != dim_)
        throw DimensionMismatch("polynomials on charts of dimension " + std::to_string(dim_) +
                                " and " + std::to_string(o.dim_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_chart(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_chart(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_chart(b);
    Polynomial r(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 1 || i > dim_)
        throw IndexOutOfRange("partial derivative index " + std::to_string(i));
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        r.add_term(m.step_down(i), Rational(e) * c);
    }
    return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw DimensionMismatch("evaluation point length differs from chart dimension");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 1; i <= dim_; ++i) {
            const int e = m.exponent(i);
            if (e > 0) v *= point[static_cast<std::size_t>(i - 1)].pow(static_cast<unsigned>(e));
        }
        total += v;
    }
    return total;
}

double Polynomial::eval(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw DimensionMismatch("evaluation point length differs from chart dimension");
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (int i = 1; i <= dim_; ++i) {
            const int e = m.exponent(i);
            if (e > 0) v *= std::pow(point[static_cast<std::size_t>(i - 1)], e);
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs) const {
    if (static_cast<int>(subs.size()) != dim_)
        throw DimensionMismatch("substitution count differs from chart dimension");
    const int source_dim = subs.empty() ? dim_ : subs[0].ambient_dim();
    for (const Polynomial& s : subs)
        if (s.ambient_dim() != source_dim)
            throw DimensionMismatch("substituted polynomials live on different charts");

    Polynomial total(source_dim);
    for (const auto& [m, c] : terms_) {
        Polynomial v = Polynomial::constant(source_dim, c);
        for (int i = 1; i <= dim_; ++i) {
            const int e = m.exponent(i);
            for (int j = 0; j < e; ++j) v = v * subs[static_cast<std::size_t>(i - 1)];
        }
        total += v;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending graded-lex: leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (m.is_constant()) {
            out << c.str();
            continue;
        }
        bool printed_factor = false;
        if (c != Rational(1)) {
            out << c.str();
            printed_factor = true;
        }
        for (int i = 1; i <= dim_; ++i) {
            for (int j = 0; j < m.exponent(i); ++j) {
                if (printed_factor) out << "*";
                out << "x" << i;
                printed_factor = true;
            }
        }
    }
    return out.str();
}

}  // namespace g2calc
