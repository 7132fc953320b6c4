#pragma once

/**
 * @file determinant.hpp
 * @brief Hankel matrices and exact determinants.
 *
 * Rational matrices: denominators are cleared row by row and the integer
 * matrix is reduced with fraction-free (Bareiss) elimination, so every
 * intermediate is an exact minor.
 *
 * Polynomial matrices: the determinant is evaluated at D+1 integer abscissae
 * 0, 1, -1, 2, -2, ... where D is the sum over rows of the largest entry
 * degree, and then recovered by interpolation.
 */

#include "bernoulli.hpp"
#include "combinatorics.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <utility>
#include <vector>

namespace bernhankel {

enum class Execution { sequential, parallel };

/// (n+1)x(n+1) matrix with entry (i, j) = c_{i+j}.
template <typename T>
SquareMatrix<T> hankel_matrix(const MomentSequence& seq, long n) {
    if (n < 0) throw std::domain_error("hankel_matrix: negative order");
    const auto dim = static_cast<std::size_t>(n + 1);
    std::vector<T> entries;
    entries.reserve(2 * dim - 1);
    for (long k = 0; k <= 2 * n; ++k) entries.push_back(moment<T>(seq, k));
    SquareMatrix<T> m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = entries[i + j];
    return m;
}

/// Fraction-free determinant of an integer matrix (destroys its argument).
inline Integer bareiss_det(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Integer d = a[n - 1][n - 1];
    return sign < 0 ? Integer(-d) : d;
}

inline Rational det_rational(const SquareMatrix<Rational>& m) {
    const std::size_t n = m.dim();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).num() * (row_lcm / m(i, j).den());
        scale *= row_lcm;
    }
    return Rational(bareiss_det(std::move(a)), scale);
}

/// Sum over rows of the largest entry degree; bounds the determinant degree.
inline int det_degree_bound(const SquareMatrix<Polynomial>& m) {
    int bound = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        int row_max = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) row_max = std::max(row_max, m(i, j).degree());
        bound += row_max;
    }
    return bound;
}

/// 0, 1, -1, 2, -2, ...
inline Rational interpolation_abscissa(std::size_t index) {
    const long half = static_cast<long>((index + 1) / 2);
    return Rational(index % 2 == 1 ? half : -half);
}

inline Polynomial det_polynomial(const SquareMatrix<Polynomial>& m, Execution exec = Execution::sequential) {
    const std::size_t n = m.dim();
    if (n == 0) return Polynomial(1);
    const auto samples = static_cast<std::size_t>(det_degree_bound(m)) + 1;

    auto evaluate_at = [&m, n](const Rational& x) {
        SquareMatrix<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v(i, j) = m(i, j)(x);
        return det_rational(v);
    };

    std::vector<std::pair<Rational, Rational>> points(samples);
    for (std::size_t s = 0; s < samples; ++s) points[s].first = interpolation_abscissa(s);

    if (exec == Execution::parallel && samples > 1) {
        const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::future<void>> jobs;
        for (std::size_t w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t s = w; s < samples; s += workers) points[s].second = evaluate_at(points[s].first);
            }));
        }
        for (auto& j : jobs) j.get();
    } else {
        for (auto& p : points) p.second = evaluate_at(p.first);
    }
    return interpolate(points);
}

inline Rational determinant(const SquareMatrix<Rational>& m) { return det_rational(m); }
inline Polynomial determinant(const SquareMatrix<Polynomial>& m) { return det_polynomial(m); }

/// Determinant with one row and column removed; the empty determinant is 1.
template <typename T>
T principal_minor_det(const SquareMatrix<T>& m, std::size_t drop_row, std::size_t drop_col) {
    if (m.dim() == 1) {
        if (drop_row != 0 || drop_col != 0) throw std::out_of_range("principal_minor_det: index out of range");
        return T(1);
    }
    return determinant(m.minor(drop_row, drop_col));
}

/// H_n(c); H_{-1} = 1 and H_{-2} = 0 by convention.
template <typename T>
T hankel_det(const MomentSequence& seq, long n) {
    if (n == -1) return T(1);
    if (n < -1) return T(0);
    return determinant(hankel_matrix<T>(seq, n));
}

}  // namespace bernhankel
