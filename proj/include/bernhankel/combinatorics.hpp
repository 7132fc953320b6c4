#pragma once

/**
 * @file combinatorics.hpp
 * @brief Factorial-type primitives and Newton interpolation over the rationals.
 */

#include "polynomial.hpp"
#include "rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace bernhankel {

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// C(n, k); zero outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return Rational(0);
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

/// n!! with (-1)!! = 0!! = 1.
inline Rational double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    if (n <= 0) return Rational(1);
    Integer f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// Rising factorial a(a+1)...(a+n-1); works for Rational and Polynomial.
template <typename T>
T pochhammer(const T& a, long n) {
    if (n < 0) throw std::domain_error("pochhammer: negative length");
    T acc(1);
    for (long i = 0; i < n; ++i) acc = acc * (a + T(Rational(i)));
    return acc;
}

/**
 * Unique polynomial of degree < points.size() through the given points,
 * built from Newton divided differences.
 */
inline Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    const std::size_t n = points.size();
    std::vector<Rational> xs(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = points[i].first;
        dd[i] = points[i].second;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: duplicate abscissa " + xs[i].str());

    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    // Horner on the Newton form, working directly on a coefficient vector.
    std::vector<Rational> acc{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // acc <- acc * (x - xs[k]) + dd[k]
        acc.push_back(Rational(0));
        for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = acc[j - 1] - xs[k] * acc[j];
        acc[0] = dd[k] - xs[k] * acc[0];
    }
    return Polynomial(std::move(acc));
}

}  // namespace bernhankel
