#pragma once

/**
 * @file vmatrix.hpp
 * @brief The power-sum Hankel matrix V_n = (I_{2(i+j)}) of r design points.
 *
 * Entries are I_k = 1^k + ... + r^k. Internally everything is 0-indexed; the
 * "(1,1) entry" of the inverse is the top-left entry.
 */

#include "bernoulli.hpp"
#include "combinatorics.hpp"
#include "determinant.hpp"
#include "report.hpp"

namespace bernhankel {

struct VMatrixSpec {
    long r = 1;  ///< number of design points
    long n = 0;  ///< matrix dimension is n+1
};

inline SquareMatrix<Rational> build_V(const VMatrixSpec& spec) {
    if (spec.r < 1) throw std::domain_error("build_V: r must be positive");
    return hankel_matrix<Rational>(MomentSequence::power_sums(spec.r), spec.n);
}

inline Rational det_V(long n, long r) { return det_rational(build_V({r, n})); }

/// r x r Vandermonde matrix of the squares 1, 4, ..., r^2: entry (i, j) = ((i+1)^2)^j.
inline SquareMatrix<Rational> squares_vandermonde(long r) {
    const auto dim = static_cast<std::size_t>(r);
    SquareMatrix<Rational> vs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const Rational sq(static_cast<long>((i + 1) * (i + 1)));
        Rational p(1);
        for (std::size_t j = 0; j < dim; ++j, p *= sq) vs(i, j) = p;
    }
    return vs;
}

/// prod_{1 <= l < j <= r} (j^2 - l^2)^2
inline Rational vandermonde_det_squared(long r) {
    Rational acc(1);
    for (long j = 1; j <= r; ++j)
        for (long l = 1; l < j; ++l) acc *= Rational((j * j - l * l) * (j * j - l * l));
    return acc;
}

inline Fragment vandermonde_factor_check(long r) {
    const Params params{{"r", r}};
    const auto vs = squares_vandermonde(r);
    const auto v = build_V({r, r - 1});
    Fragment out;
    out.push_back(make_bool_case("vandermonde_gram", params, vs.transpose() * vs == v));
    out.push_back(make_case("vandermonde_det", params, det_rational(v).str(), vandermonde_det_squared(r).str()));
    return out;
}

/// True iff V_n is nonsingular at this r (decided by exact determinant).
inline bool invertibility(long n, long r) { return !det_V(n, r).is_zero(); }

/// Top-left entry of V_{r-1}^{-1}, by the cofactor ratio minor(0,0) / det.
inline Rational inverse_entry_11(long r) {
    const auto v = build_V({r, r - 1});
    const Rational det = det_rational(v);
    if (det.is_zero()) throw std::logic_error("inverse_entry_11: V_{r-1} singular for r = " + std::to_string(r));
    return principal_minor_det(v, 0, 0) / det;
}

/// 2 (C(4r, 2r) / C(2r, r)^2 - 1)
inline Rational inverse_entry_11_closed(long r) {
    const Rational c = binomial(2 * r, r);
    return Rational(2) * (binomial(4 * r, 2 * r) / (c * c) - Rational(1));
}

/// det V_n = H_n(b at x=2r+1) - H_{n-1}(d at x=2r+1) / 2, every term by brute force.
inline Fragment substitution_check(long n, long r) {
    const Params params{{"n", n}, {"r", r}};
    const Rational x(2 * r + 1);
    const Rational lhs = det_V(n, r);
    const Rational rhs = hankel_det<Rational>(MomentSequence::b2k1().at(x), n) -
                         hankel_det<Rational>(MomentSequence::b2k5().at(x), n - 1) / Rational(2);
    return {make_case("substitution", params, lhs.str(), rhs.str())};
}

}  // namespace bernhankel
