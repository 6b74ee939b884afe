#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "g2calc/errors.hpp"

namespace g2calc {

/// Exact rational number backed by arbitrary-precision integers.
/// Invariant: always in lowest terms, denominator > 0, canonical zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(int n) : q_(n) {}                             // NOLINT
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }

    /// Parses "n" or "n/d" with optional leading sign.
    static Rational from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
        if (q.get_den() == 0) throw Error("rational with zero denominator: " + text);
        q.canonicalize();
        return Rational(std::move(q));
    }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational reciprocal() const {
        if (is_zero()) throw Error("reciprocal of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// q^e for small non-negative integer exponents.
    Rational pow(unsigned e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
        return Rational(num, den);
    }

private:
    mpq_class q_;
};

}  // namespace g2calc
