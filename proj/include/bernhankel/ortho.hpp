#pragma once

/**
 * @file ortho.hpp
 * @brief Moment functional and monic orthogonal polynomials of a sequence.
 *
 * Works at a fixed rational x only. Polynomials in the functional's variable
 * y reuse the Polynomial type.
 */

#include "bernoulli.hpp"
#include "contfrac.hpp"
#include "determinant.hpp"
#include "report.hpp"

#include <string>
#include <vector>

namespace bernhankel {

class MomentFunctional {
public:
    explicit MomentFunctional(MomentSequence seq) : seq_(std::move(seq)) {
        if (seq_.depends_on_x() && !seq_.point())
            throw std::invalid_argument("MomentFunctional: sequence needs a numeric evaluation point");
    }

    const MomentSequence& sequence() const { return seq_; }

    Rational moment(long k) const {
        while (static_cast<long>(cache_.size()) <= k) cache_.push_back(seq_.value_moment(static_cast<long>(cache_.size())));
        return cache_[static_cast<std::size_t>(k)];
    }

    /// L(sum a_k y^k) = sum a_k c_k.
    Rational operator()(const Polynomial& p) const {
        Rational acc;
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) acc += p.coefficients()[k] * moment(static_cast<long>(k));
        return acc;
    }

    Rational hankel(long n) const { return hankel_det<Rational>(seq_, n); }

private:
    MomentSequence seq_;
    mutable std::vector<Rational> cache_;
};

inline Rational apply_functional(const MomentFunctional& L, const Polynomial& p) { return L(p); }

/**
 * P_n(y) = det(bordered Hankel matrix) / H_{n-1}, where the bordered matrix
 * has rows (c_i, ..., c_{i+n}) for i < n and a last row (1, y, ..., y^n).
 * Expanded along the last row: coefficient of y^j is the signed cofactor.
 */
inline Polynomial monic_orthogonal_poly(const MomentFunctional& L, long n) {
    if (n < 0) throw std::domain_error("monic_orthogonal_poly: negative degree");
    if (n == 0) return Polynomial(1);
    const Rational h_prev = L.hankel(n - 1);
    if (h_prev.is_zero()) throw NondegeneracyError("monic_orthogonal_poly: H_{n-1} vanishes", n - 1);
    const auto dim = static_cast<std::size_t>(n + 1);
    SquareMatrix<Rational> bordered(dim);
    for (std::size_t i = 0; i < dim - 1; ++i)
        for (std::size_t j = 0; j < dim; ++j) bordered(i, j) = L.moment(static_cast<long>(i + j));
    for (std::size_t j = 0; j < dim; ++j) bordered(dim - 1, j) = Rational(0);

    std::vector<Rational> cs(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Rational cof = principal_minor_det(bordered, dim - 1, j);
        if ((dim - 1 + j) % 2 == 1) cof = -cof;
        cs[j] = cof / h_prev;
    }
    return Polynomial(std::move(cs));
}

/// Coefficients (s_n, t_n) of P_{n+1} = (y + s_n) P_n - t_n P_{n-1}, read off P_{n-1}, P_n, P_{n+1}.
struct RecurrenceStep {
    Rational s;
    Rational t;
    bool consistent = false;  // the remainder really is t_n P_{n-1}
};

inline RecurrenceStep recurrence_step(const Polynomial& p_prev, const Polynomial& p_cur, const Polynomial& p_next) {
    const auto n = static_cast<std::size_t>(p_cur.degree());
    RecurrenceStep step;
    step.s = p_next[n] - (n > 0 ? p_cur[n - 1] : Rational(0));
    // (y + s) P_n - P_{n+1} must equal t P_{n-1}.
    const Polynomial y = Polynomial::x();
    const Polynomial remainder = (y + Polynomial(step.s)) * p_cur - p_next;
    step.t = n >= 1 ? remainder[n - 1] : Rational(0);
    step.consistent = remainder == p_prev * step.t;
    return step;
}

/**
 * Orthogonality of P_m, P_n under L: L(P_m P_n) = 0 for m != n and H_n/H_{n-1}
 * for m = n; plus the moment-substitution form L(y^j P_n) = 0 for j < n and
 * H_n/H_{n-1} for j = n.
 */
inline Fragment orthogonality_check(const MomentFunctional& L, long m, long n) {
    Params params{{"family", L.sequence().name()}, {"m", m}, {"n", n}};
    if (L.sequence().point()) params["x"] = L.sequence().point()->str();
    Fragment out;
    try {
        const Polynomial pm = monic_orthogonal_poly(L, m);
        const Polynomial pn = monic_orthogonal_poly(L, n);
        const Rational zeta_n = n == 0 ? L.hankel(0) : L.hankel(n) / L.hankel(n - 1);
        const Rational expected = m == n ? zeta_n : Rational(0);
        out.push_back(make_case("orthogonality", params, L(pm * pn).str(), expected.str()));
        if (m <= n) {
            const Rational subst = L(Polynomial::monomial(Rational(1), static_cast<std::size_t>(m)) * pn);
            out.push_back(make_case("moment_substitution", params, subst.str(), (m == n ? zeta_n : Rational(0)).str()));
        }
    } catch (const std::exception& e) {
        out.push_back(make_case("orthogonality", params, std::string("error: ") + e.what(), "ok"));
    }
    return out;
}

}  // namespace bernhankel
