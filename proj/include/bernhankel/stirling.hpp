#pragma once

/**
 * @file stirling.hpp
 * @brief Stirling numbers, the T(n,k) triangle (OEIS A204579) and the
 *        null vector of V_r built from its rows.
 *
 * s(n,k) is the signed first kind: x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
 * Row n of T holds the coefficients of prod_{m=1}^{n-1} (y - m^2).
 */

#include "bernoulli.hpp"
#include "combinatorics.hpp"
#include "report.hpp"
#include "vmatrix.hpp"

#include <mutex>
#include <vector>

namespace bernhankel {

namespace detail {

/// Grow-only triangle cache: row n is built from row n-1 under a lock.
template <typename Step>
class TriangleCache {
public:
    TriangleCache(std::vector<Rational> row0, Step step) : step_(step) { rows_.push_back(std::move(row0)); }

    Rational get(long n, long k) {
        if (k < 0 || k > n) return Rational(0);
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(rows_.size()) <= n) rows_.push_back(step_(rows_.back(), static_cast<long>(rows_.size())));
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    Step step_;
    std::mutex mu_;
    std::vector<std::vector<Rational>> rows_;
};

inline Rational row_at(const std::vector<Rational>& row, long k) {
    return k >= 0 && k < static_cast<long>(row.size()) ? row[static_cast<std::size_t>(k)] : Rational(0);
}

inline auto& first_kind_cache() {
    // s(n+1,k) = s(n,k-1) - n s(n,k)
    auto step = [](const std::vector<Rational>& prev, long n1) {
        const long n = n1 - 1;
        std::vector<Rational> row(static_cast<std::size_t>(n1) + 1);
        for (long k = 0; k <= n1; ++k) row[static_cast<std::size_t>(k)] = row_at(prev, k - 1) - Rational(n) * row_at(prev, k);
        return row;
    };
    static TriangleCache<decltype(step)> cache({Rational(1)}, step);
    return cache;
}

inline auto& second_kind_cache() {
    // S(n+1,k) = S(n,k-1) + k S(n,k)
    auto step = [](const std::vector<Rational>& prev, long n1) {
        std::vector<Rational> row(static_cast<std::size_t>(n1) + 1);
        for (long k = 0; k <= n1; ++k) row[static_cast<std::size_t>(k)] = row_at(prev, k - 1) + Rational(k) * row_at(prev, k);
        return row;
    };
    static TriangleCache<decltype(step)> cache({Rational(1)}, step);
    return cache;
}

inline auto& t_cache() {
    // Row 0 is a placeholder; row 1 is (0, 1) with T(1,1) = 1.
    // T(n,k) = T(n-1,k-1) - (n-1)^2 T(n-1,k)
    auto step = [](const std::vector<Rational>& prev, long n) {
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
        if (n == 1) {
            row[1] = Rational(1);
            return row;
        }
        for (long k = 1; k <= n; ++k)
            row[static_cast<std::size_t>(k)] = row_at(prev, k - 1) - Rational((n - 1) * (n - 1)) * row_at(prev, k);
        return row;
    };
    static TriangleCache<decltype(step)> cache({Rational(0)}, step);
    return cache;
}

}  // namespace detail

inline Rational stirling_first(long n, long k) {
    if (n < 0) throw std::domain_error("stirling_first: negative n");
    return detail::first_kind_cache().get(n, k);
}

inline Rational stirling_second(long n, long k) {
    if (n < 0) throw std::domain_error("stirling_second: negative n");
    return detail::second_kind_cache().get(n, k);
}

/// T(1,1) = 1; T(n,k) = T(n-1,k-1) - (n-1)^2 T(n-1,k) for 1 <= k <= n; 0 otherwise.
inline Rational t_triangle(long n, long k) {
    if (n < 1) throw std::domain_error("t_triangle: n must be positive");
    if (k < 1 || k > n) return Rational(0);
    return detail::t_cache().get(n, k);
}

/// T(n,k) = sum_{i=0}^{2k} (-1)^{n+i} s(n,i) s(n,2k-i).
inline Rational t_alternative(long n, long k) {
    if (n < 1) throw std::domain_error("t_alternative: n must be positive");
    Rational acc;
    for (long i = 0; i <= 2 * k; ++i) {
        Rational term = stirling_first(n, i) * stirling_first(n, 2 * k - i);
        acc += (n + i) % 2 == 0 ? term : -term;
    }
    return acc;
}

/// B_m = sum_l (-1)^l l! / (l+1) S(m,l).
inline Rational bernoulli_via_stirling(long m) {
    Rational acc;
    for (long l = 0; l <= m; ++l) {
        Rational term = factorial(l) / Rational(l + 1) * stirling_second(m, l);
        acc += l % 2 == 0 ? term : -term;
    }
    return acc;
}

inline std::vector<Rational> null_vector(long r) {
    std::vector<Rational> v;
    for (long k = 1; k <= r + 1; ++k) v.push_back(t_triangle(r + 1, k));
    return v;
}

/**
 * V_r (T(r+1,1), ..., T(r+1,r+1))^T = 0, the inner sums
 * sum_k c^{2k} T(r+1,k+1) = 0 for c = 1..r, and T(r+1,r+1) = 1.
 */
inline Fragment null_vector_check(long r) {
    const Params params{{"r", r}};
    const auto v = null_vector(r);
    const auto V = build_V({r, r});
    Fragment out;
    bool annihilated = true;
    for (std::size_t i = 0; i < V.dim(); ++i) {
        Rational row;
        for (std::size_t j = 0; j < V.dim(); ++j) row += V(i, j) * v[j];
        annihilated = annihilated && row.is_zero();
    }
    out.push_back(make_bool_case("null_vector", params, annihilated));

    bool inner = true;
    for (long c = 1; c <= r; ++c) {
        Rational acc, c2k(1);
        for (long k = 0; k <= r; ++k, c2k *= Rational(c * c)) acc += c2k * v[static_cast<std::size_t>(k)];
        inner = inner && acc.is_zero();
    }
    out.push_back(make_bool_case("null_vector_inner", params, inner));
    out.push_back(make_case("null_vector_nonzero", params, v.back().str(), "1"));
    return out;
}

/**
 * The Stirling-number identity for V_r's null vector, evaluated literally:
 *
 * sum_{k=0}^{r} 1/(2j+2k+1) [ sum_{m=0}^{2j+2k} C(2j+2k+1, m) ((r+1)^{2j+2k+1-m} - 1)
 *                              sum_{l=0}^{m} (-1)^l l!/(l+1) S(m,l) ]
 *                 * sum_{i=0}^{2k+2} (-1)^{r+1+i} s(r+1,i) s(r+1,2k+2-i).
 * The result should be 0 for 0 <= j <= r.
 */
inline Rational corollary_identity(long r, long j) {
    if (r < 1 || j < 0 || j > r) throw std::domain_error("corollary_identity: need r >= 1 and 0 <= j <= r");
    Rational total;
    for (long k = 0; k <= r; ++k) {
        const long e = 2 * j + 2 * k + 1;
        Rational power_part;
        for (long m = 0; m <= e - 1; ++m)
            power_part += binomial(e, m) * (pow(Rational(r + 1), e - m) - Rational(1)) * bernoulli_via_stirling(m);
        Rational t_part;
        for (long i = 0; i <= 2 * k + 2; ++i) {
            Rational term = stirling_first(r + 1, i) * stirling_first(r + 1, 2 * k + 2 - i);
            t_part += (r + 1 + i) % 2 == 0 ? term : -term;
        }
        total += power_part / Rational(e) * t_part;
    }
    return total;
}

/// sum_{k=0}^{r} I_{2j+2k} T(r+1,k+1), the shortcut form of the same sum.
inline Rational corollary_shortcut(long r, long j) {
    Rational acc;
    for (long k = 0; k <= r; ++k) acc += power_sum(2 * j + 2 * k, r) * t_triangle(r + 1, k + 1);
    return acc;
}

}  // namespace bernhankel
