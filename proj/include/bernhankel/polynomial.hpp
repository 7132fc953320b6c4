#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * Coefficients are stored in ascending degree. The highest stored coefficient
 * is always nonzero; the zero polynomial is the empty vector.
 */

#include "rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bernhankel {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    /// The indeterminate x.
    static Polynomial x() { return Polynomial{Rational(0), Rational(1)}; }

    /// c * x^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<Rational> cs(k + 1);
        cs[k] = c;
        return Polynomial(std::move(cs));
    }

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    template <typename T>
    T evaluate(const T& at) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + T(*it);
        return acc;
    }
    Rational operator()(const Rational& at) const { return evaluate(at); }

    /// p(q(x)).
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }
    Polynomial& operator/=(const Rational& c) {
        if (c.is_zero()) throw std::domain_error("Polynomial: division by zero scalar");
        for (auto& a : coeffs_) a /= c;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
        const Rational lead_inv = Rational(1) / b.leading();
        const std::size_t db = b.coeffs_.size() - 1;
        for (std::size_t k = quot.size(); k-- > 0;) {
            Rational q = rem[k + db] * lead_inv;
            quot[k] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
        }
        rem.resize(db);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Division that must be exact; throws otherwise.
    friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("Polynomial: inexact division");
        return q;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this / leading();
    }

    /// Monic gcd; gcd(0, 0) = 0.
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    /// Ascending coefficient list, e.g. "[0, -1/24, 0, 1/24]"; zero prints "[]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += coeffs_[i].str();
        }
        return s + "]";
    }

    /// Inverse of str(); also accepts "[0]" and a bare rational.
    static Polynomial parse(std::string_view text) {
        std::string s(text);
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("Polynomial::parse: empty input");
        s = s.substr(b, e - b + 1);
        if (s.front() != '[') return Polynomial(Rational::parse(s));
        if (s.back() != ']') throw std::invalid_argument("Polynomial::parse: missing ']'");
        s = s.substr(1, s.size() - 2);
        std::vector<Rational> cs;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto comma = s.find(',', pos);
            std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (item.find_first_not_of(" \t") != std::string::npos) cs.push_back(Rational::parse(item));
            else if (comma != std::string::npos) throw std::invalid_argument("Polynomial::parse: empty coefficient");
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Polynomial(std::move(cs));
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1), b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent) b *= b;
    }
    return result;
}

}  // namespace bernhankel
