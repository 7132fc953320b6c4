#pragma once

/**
 * @file rational_function.hpp
 * @brief Quotients of rational polynomials in normalized form.
 *
 * Invariant: gcd(num, den) = 1 and den is monic. Zero is 0/1.
 */

#include "polynomial.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bernhankel {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Returns the numerator when the denominator is 1, otherwise nullopt.
    std::optional<Polynomial> as_polynomial() const {
        if (!is_polynomial()) return std::nullopt;
        return num_;
    }

    /// Value at a rational point; throws on a pole.
    Rational evaluate(const Rational& at) const {
        Rational d = den_(at);
        if (d.is_zero()) throw std::domain_error("RationalFunction: pole at x = " + at.str());
        return num_(at) / d;
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        // Cross-cancel so the product of reduced factors is already reduced.
        Polynomial g1 = gcd(a.num_, b.den_);
        Polynomial g2 = gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = exact_div(a.num_, g1.is_zero() ? Polynomial(1) : g1) *
                 exact_div(b.num_, g2.is_zero() ? Polynomial(1) : g2);
        r.den_ = exact_div(a.den_, g2.is_zero() ? Polynomial(1) : g2) *
                 exact_div(b.den_, g1.is_zero() ? Polynomial(1) : g1);
        r.normalize_leading();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return a * b.reciprocal();
    }

    RationalFunction reciprocal() const {
        if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_leading();
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "[num]" when polynomial, else "[num] / [den]".
    std::string str() const {
        if (is_polynomial()) return num_.str();
        return num_.str() + " / " + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        if (den_.degree() > 0) {
            Polynomial g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        normalize_leading();
    }

    void normalize_leading() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Rational lc = den_.leading();
        if (lc != Rational(1)) {
            num_ /= lc;
            den_ /= lc;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    RationalFunction r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

}  // namespace bernhankel
