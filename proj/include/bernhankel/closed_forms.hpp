#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed-form Hankel determinants of the Bernoulli families, the
 *        power-sum matrix determinant, and the tridiagonal sequences D_n.
 *
 * Gamma values at half-integers are written as double factorials, so every
 * expression stays rational. Sums whose terms carry 1/(x^2 - (2i-1)^2) are
 * assembled over the common product prod_j (x^2 - (2j-1)^2) by dropping the
 * i-th factor, which keeps the whole computation in the polynomial ring.
 */

#include "bernoulli.hpp"
#include "combinatorics.hpp"
#include "contfrac.hpp"
#include "determinant.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"
#include "report.hpp"
#include "vmatrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace bernhankel {

namespace detail {

/// x^2 - c^2
inline Polynomial x2_minus(long c) { return Polynomial{Rational(-c * c), Rational(0), Rational(1)}; }

/// prod_{j=1, j != skip}^{count} (x^2 - (2j-1)^2)
inline Polynomial odd_square_product(long count, long skip = 0) {
    Polynomial acc(1);
    for (long j = 1; j <= count; ++j)
        if (j != skip) acc *= x2_minus(2 * j - 1);
    return acc;
}

inline Rational half(long twice) { return Rational(twice, 2); }

}  // namespace detail

/// (x/2)^{n+1} prod_{l=1}^{n} [(2l)^2 (2l-1)^2 (x^2-(2l-1)^2)(x^2-(2l)^2) / (16 (4l-3)(4l-1)^2 (4l+1))]^{n+1-l}
inline Polynomial closed_B2k1(long n) {
    if (n < 0) throw std::domain_error("closed_B2k1: negative order");
    Polynomial acc = pow(Polynomial{Rational(0), Rational(1, 2)}, static_cast<unsigned>(n + 1));
    for (long l = 1; l <= n; ++l) {
        const Rational c = Rational(4 * l * l * (2 * l - 1) * (2 * l - 1)) /
                           Rational(16 * (4 * l - 3) * (4 * l - 1) * (4 * l - 1) * (4 * l + 1));
        const Polynomial factor = c * detail::x2_minus(2 * l - 1) * detail::x2_minus(2 * l);
        acc *= pow(factor, static_cast<unsigned>(n + 1 - l));
    }
    return acc;
}

/// ((x^3-x)/24)^{n+1} prod_{l=1}^{n} [(2l)^2 (2l+1)^2 (x^2-(2l+1)^2)(x^2-(2l)^2) / (16 (4l-1)(4l+1)^2 (4l+3))]^{n+1-l}
inline Polynomial closed_B2k3(long n) {
    if (n < 0) throw std::domain_error("closed_B2k3: negative order");
    const Polynomial c0{Rational(0), Rational(-1, 24), Rational(0), Rational(1, 24)};
    Polynomial acc = pow(c0, static_cast<unsigned>(n + 1));
    for (long l = 1; l <= n; ++l) {
        const Rational c = Rational(4 * l * l * (2 * l + 1) * (2 * l + 1)) /
                           Rational(16 * (4 * l - 1) * (4 * l + 1) * (4 * l + 1) * (4 * l + 3));
        const Polynomial factor = c * detail::x2_minus(2 * l + 1) * detail::x2_minus(2 * l);
        acc *= pow(factor, static_cast<unsigned>(n + 1 - l));
    }
    return acc;
}

/**
 * H_n of B_{2k+5}((x+1)/2)/(2k+5):
 *   1/(5 2^{n+2}) prod_{i=1}^{n} (2i+3)!^2 (2i+2)!^2 / ((4i+5)! (4i+4)!)
 *   * prod_{l=0}^{n} (x-2n-1+2l)_{4n-4l+3}
 *   * sum_{i=1}^{n+2} (2i-1) (n+5/2)_{i-1} Q / ((n-i+5/2)_i (n+2-i)! (n+1+i)! (x^2-(2i-1)^2)),
 * with Q = (x/2+1/2)_{n+2} (x/2-n-3/2)_{n+2} = 2^{-(2n+4)} prod_{i=1}^{n+2} (x^2-(2i-1)^2).
 */
inline Polynomial closed_B2k5(long n) {
    if (n < 0) throw std::domain_error("closed_B2k5: negative order");
    Rational constant = Rational(1) / (Rational(5) * pow(Rational(2), n + 2));
    for (long i = 1; i <= n; ++i) {
        const Rational a = factorial(2 * i + 3), b = factorial(2 * i + 2);
        constant *= a * a * b * b / (factorial(4 * i + 5) * factorial(4 * i + 4));
    }

    const Polynomial x = Polynomial::x();
    Polynomial rising(1);
    for (long l = 0; l <= n; ++l) rising *= pochhammer(x + Polynomial(Rational(2 * l - 2 * n - 1)), 4 * n - 4 * l + 3);

    const Rational q_scale = Rational(1) / pow(Rational(2), 2 * n + 4);
    Polynomial sum;
    for (long i = 1; i <= n + 2; ++i) {
        const Rational coef = Rational(2 * i - 1) * pochhammer(detail::half(2 * n + 5), i - 1) /
                              (pochhammer(detail::half(2 * n - 2 * i + 5), i) * factorial(n + 2 - i) * factorial(n + 1 + i));
        sum += (coef * q_scale) * detail::odd_square_product(n + 2, i);
    }
    return constant * rising * sum;
}

/**
 * D_n^{(1)} = (2 (n+1)!^2 / (4n+5)!!) prod_{i=1}^{n+2} (x^2-(2i-1)^2)
 *             * sum_{i=1}^{n+2} (2i-1) g(n,i) / (x^2-(2i-1)^2),
 * g(n,i) = Gamma(n+i+3/2) Gamma(n-i+5/2) / (pi Gamma(n+3-i) Gamma(n+2+i))
 *        = (2n+2i+1)!! (2n-2i+3)!! / (2^{2n+3} (n+2-i)! (n+1+i)!).
 */
inline Polynomial closed_Dn1(long n) {
    if (n < 0) throw std::domain_error("closed_Dn1: negative order");
    const Rational nf = factorial(n + 1);
    const Rational lead = Rational(2) * nf * nf / double_factorial(4 * n + 5);
    Polynomial sum;
    for (long i = 1; i <= n + 2; ++i) {
        const Rational g = double_factorial(2 * n + 2 * i + 1) * double_factorial(2 * n - 2 * i + 3) /
                           (pow(Rational(2), 2 * n + 3) * factorial(n + 2 - i) * factorial(n + 1 + i));
        sum += (Rational(2 * i - 1) * g) * detail::odd_square_product(n + 2, i);
    }
    return lead * sum;
}

/// D_n^{(0)} = 4^{-(n+1)} prod_{l=1}^{n+1} (x^2-(2l-1)^2)(2l-1)^2 / ((4l-1)(4l-3)).
inline Polynomial closed_Dn0(long n) {
    if (n < 0) throw std::domain_error("closed_Dn0: negative order");
    Polynomial acc(Rational(1) / pow(Rational(4), n + 1));
    for (long l = 1; l <= n + 1; ++l)
        acc *= Rational((2 * l - 1) * (2 * l - 1), (4 * l - 1) * (4 * l - 3)) * detail::x2_minus(2 * l - 1);
    return acc;
}

/// The same product with the factor (x^2-(2l+1)^2); kept only for reporting.
inline Polynomial closed_Dn0_printed_variant(long n) {
    if (n < 0) throw std::domain_error("closed_Dn0_printed_variant: negative order");
    Polynomial acc(Rational(1) / pow(Rational(4), n + 1));
    for (long l = 1; l <= n + 1; ++l)
        acc *= Rational((2 * l - 1) * (2 * l - 1), (4 * l - 1) * (4 * l - 3)) * detail::x2_minus(2 * l + 1);
    return acc;
}

/**
 * det V_n = 2^{2n^2-2n-1} prod_{i=1}^{n} (2i)!^4 / ((4i)! (4i+1)!)
 *           * prod_{l=0}^{n} (r-l)_{2l+1} * prod_{l=0}^{n-1} (r+1/2-l)_{2l+1}
 *           * sum_{i=1}^{n+1} (2n+2i)! (2n+2-2i)! (r+1)_{n+1} / ((n+i)!^2 (n+1-i)!^2 (r+i)).
 */
inline Rational closed_detVn(long n, long r) {
    if (n < 0 || r < 1) throw std::domain_error("closed_detVn: need n >= 0 and r >= 1");
    Rational acc = pow(Rational(2), 2 * n * n - 2 * n - 1);
    for (long i = 1; i <= n; ++i) {
        const Rational f = factorial(2 * i);
        acc *= f * f * f * f / (factorial(4 * i) * factorial(4 * i + 1));
    }
    for (long l = 0; l <= n; ++l) acc *= pochhammer(Rational(r - l), 2 * l + 1);
    for (long l = 0; l < n; ++l) acc *= pochhammer(Rational(2 * r + 1 - 2 * l, 2), 2 * l + 1);
    Rational sum;
    const Rational rise = pochhammer(Rational(r + 1), n + 1);
    for (long i = 1; i <= n + 1; ++i) {
        const Rational a = factorial(n + i), b = factorial(n + 1 - i);
        sum += factorial(2 * n + 2 * i) * factorial(2 * n + 2 - 2 * i) * rise / (a * a * b * b * Rational(r + i));
    }
    return acc * sum;
}

/**
 * (x (x^2-1)(3x^2-7)/480)^{n+1} prod_{l=1}^{n} (beta_{2l} beta_{2l+1})^{n+1-l},
 * simplified in the rational-function field; throws if the result is not a polynomial.
 */
inline Polynomial beta_product_form(long n) {
    if (n < 0) throw std::domain_error("beta_product_form: negative order");
    const Polynomial d0 = Polynomial{Rational(0), Rational(7), Rational(0), Rational(-10), Rational(0), Rational(3)} / Rational(480);
    RationalFunction acc(pow(d0, static_cast<unsigned>(n + 1)));
    if (n >= 1) {
        const auto beta = beta_sequence<RationalFunction>(2 * n + 1);
        for (long l = 1; l <= n; ++l) {
            const RationalFunction t = beta[static_cast<std::size_t>(2 * l)] * beta[static_cast<std::size_t>(2 * l + 1)];
            acc *= pow(t, static_cast<unsigned>(n + 1 - l));
        }
    }
    auto poly = acc.as_polynomial();
    if (!poly) throw std::logic_error("beta_product_form: product did not simplify to a polynomial");
    return *poly;
}

// ---------------------------------------------------------------------------
// The hypergeometric sum behind the x = 2n+2 step of the D^{(1)} recurrence.
// All three quantities below are the pi-free rational forms, i.e. the
// original expressions divided by pi.

/// (n+2)^2 (2n+5) C(4n+10, 2n+5) / (4^{2n+5} (-(4n+7)))
inline Rational hypergeometric_sum_target(long n) {
    return Rational((n + 2) * (n + 2) * (2 * n + 5)) * binomial(4 * n + 10, 2 * n + 5) /
           (pow(Rational(4), 2 * n + 5) * Rational(-(4 * n + 7)));
}

/// sum_{i=1}^{n+2} (2i-1) G(n,i) / ((n+2-i)! (n+1+i)! ((2n+2)^2-(2i-1)^2)) * (...)
inline Rational hypergeometric_sum(long n) {
    Rational sum;
    for (long i = 1; i <= n + 2; ++i) {
        const Rational gamma_pair = double_factorial(2 * n + 2 * i + 1) * double_factorial(2 * n - 2 * i + 3) /
                                    pow(Rational(2), 2 * n + 3);
        const Rational weight = Rational(2 * i - 1) * gamma_pair /
                                (factorial(n + 2 - i) * factorial(n + 1 + i) *
                                 Rational((2 * n + 2) * (2 * n + 2) - (2 * i - 1) * (2 * i - 1)));
        const Rational bracket = Rational((2 * n + 3) * (6 * n + 13), 4) -
                                 Rational(3 * (n + 2) * (n + 2)) * detail::half(2 * n + 2 * i + 3) *
                                     detail::half(2 * n - 2 * i + 5) / Rational((n + 3 - i) * (n + 2 + i));
        sum += weight * bracket;
    }
    return sum;
}

/// -(n+2)^2 (2n+5)(4n+9) sqrt(pi) Gamma(2n+7/2) / (4 (2n+5)!) divided by pi.
inline Rational hypergeometric_sum_closed(long n) {
    return Rational(-(n + 2) * (n + 2) * (2 * n + 5) * (4 * n + 9)) * double_factorial(4 * n + 5) /
           (pow(Rational(2), 2 * n + 3) * Rational(4) * factorial(2 * n + 5));
}

// ---------------------------------------------------------------------------
// Identity registry

enum class ClosedFormId { B2K1, B2K3, B2K5, DETVN, DN0, DN1, BETA_PRODUCT, RATIO_2, RATIO_RFACT, DR1_BULLET, RECD1 };

inline constexpr std::array<std::pair<ClosedFormId, std::string_view>, 11> kClosedFormNames{{
    {ClosedFormId::B2K1, "b2k1"},
    {ClosedFormId::B2K3, "b2k3"},
    {ClosedFormId::B2K5, "b2k5"},
    {ClosedFormId::DETVN, "detvn"},
    {ClosedFormId::DN0, "dn0"},
    {ClosedFormId::DN1, "dn1"},
    {ClosedFormId::BETA_PRODUCT, "beta_product"},
    {ClosedFormId::RATIO_2, "ratio_2"},
    {ClosedFormId::RATIO_RFACT, "ratio_rfact"},
    {ClosedFormId::DR1_BULLET, "dr1_bullet"},
    {ClosedFormId::RECD1, "recd1"},
}};

inline std::string to_string(ClosedFormId id) {
    for (const auto& [k, name] : kClosedFormNames)
        if (k == id) return std::string(name);
    return "?";
}

inline ClosedFormId parse_closed_form_id(std::string_view name) {
    for (const auto& [k, n] : kClosedFormNames)
        if (n == name) return k;
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

/// Whether the identity is parameterized by r (x is then 2r+1) rather than n.
inline bool uses_r(ClosedFormId id) {
    return id == ClosedFormId::DETVN || id == ClosedFormId::RATIO_2 || id == ClosedFormId::RATIO_RFACT ||
           id == ClosedFormId::DR1_BULLET;
}

namespace detail {

inline std::string render(const Polynomial& p, const std::optional<Rational>& x) {
    return x ? p(*x).str() : p.str();
}

inline Polynomial symbolic_tridiag(const Contraction<RationalFunction>& c, long n) {
    auto d = tridiag_det_seq(c.sigma, c.tau, n).D(n);
    auto p = d.as_polynomial();
    if (!p) throw std::logic_error("tridiagonal determinant is not a polynomial");
    return *p;
}

inline Polynomial dn0_brute(long n) {
    return symbolic_tridiag(contract_even(alpha_table<RationalFunction>(2 * n + 2), n + 1), n);
}

inline Polynomial dn1_brute(long n) {
    return symbolic_tridiag(contract_odd(alpha_table<RationalFunction>(2 * n + 3), n + 1), n);
}

/// Ratios at x = 2r+1: H_{r-1}(d)/H_r(b) and H_{r-1}(d)/H_{r-1}(c).
/// The first one is 2 because det V_r = 0 = H_r(b) - H_{r-1}(d)/2; the reciprocal is 1/2.
inline std::pair<Rational, Rational> bullet_ratios(long r) {
    const Rational x(2 * r + 1);
    const Rational hb = hankel_det<Rational>(MomentSequence::b2k1().at(x), r);
    const Rational hc = hankel_det<Rational>(MomentSequence::b2k3().at(x), r - 1);
    const Rational hd = hankel_det<Rational>(MomentSequence::b2k5().at(x), r - 1);
    return {hd / hb, hd / hc};
}

}  // namespace detail

/// Closed-form side of an identity, as text. `x` specializes symbolic results.
inline std::string closed_form_value(ClosedFormId id, long n, long r, const std::optional<Rational>& x = std::nullopt) {
    switch (id) {
        case ClosedFormId::B2K1: return detail::render(closed_B2k1(n), x);
        case ClosedFormId::B2K3: return detail::render(closed_B2k3(n), x);
        case ClosedFormId::B2K5: return detail::render(closed_B2k5(n), x);
        case ClosedFormId::DETVN: return closed_detVn(n, r).str();
        case ClosedFormId::DN0: return detail::render(closed_Dn0(n), x);
        case ClosedFormId::DN1: return detail::render(closed_Dn1(n), x);
        case ClosedFormId::BETA_PRODUCT: return detail::render(beta_product_form(n), x);
        case ClosedFormId::RATIO_2: return Rational(2).str();
        case ClosedFormId::RATIO_RFACT: return (factorial(r) * factorial(r)).str();
        case ClosedFormId::DR1_BULLET: {
            const Rational f = factorial(r), g = factorial(r + 1);
            return "[" + (f * f).str() + ", " + (-(g * g) / Rational(4 * r + 5)).str() + "]";
        }
        case ClosedFormId::RECD1: return detail::render(closed_Dn1(n + 1), x);
    }
    throw std::logic_error("closed_form_value: unhandled id");
}

/// Independent (brute-force) side of the same identity, as text.
inline std::string closed_form_oracle(ClosedFormId id, long n, long r, const std::optional<Rational>& x = std::nullopt) {
    auto hankel_text = [&](const MomentSequence& seq) {
        return x ? hankel_det<Rational>(seq.at(*x), n).str() : hankel_det<Polynomial>(seq, n).str();
    };
    switch (id) {
        case ClosedFormId::B2K1: return hankel_text(MomentSequence::b2k1());
        case ClosedFormId::B2K3: return hankel_text(MomentSequence::b2k3());
        case ClosedFormId::B2K5:
        case ClosedFormId::BETA_PRODUCT: return hankel_text(MomentSequence::b2k5());
        case ClosedFormId::DETVN: return det_V(n, r).str();
        case ClosedFormId::DN0: return detail::render(detail::dn0_brute(n), x);
        case ClosedFormId::DN1: return detail::render(detail::dn1_brute(n), x);
        case ClosedFormId::RATIO_2: return detail::bullet_ratios(r).first.str();
        case ClosedFormId::RATIO_RFACT: return detail::bullet_ratios(r).second.str();
        case ClosedFormId::DR1_BULLET: {
            const auto c = contract_odd(alpha_table<Rational>(2 * r + 3, Rational(2 * r + 1)), r + 1);
            const auto tri = tridiag_det_seq(c.sigma, c.tau, r);
            return "[" + tri.D(r - 1).str() + ", " + tri.D(r).str() + "]";
        }
        case ClosedFormId::RECD1: {
            const auto c = contract_odd(alpha_table<RationalFunction>(2 * n + 5), n + 2);
            const Polynomial prev = n == 0 ? Polynomial(1) : closed_Dn1(n - 1);
            const RationalFunction rhs = c.sigma[static_cast<std::size_t>(n + 1)] * RationalFunction(closed_Dn1(n)) -
                                         c.tau[static_cast<std::size_t>(n + 1)] * RationalFunction(prev);
            auto p = rhs.as_polynomial();
            if (!p) throw std::logic_error("recd1: right side is not a polynomial");
            return detail::render(*p, x);
        }
    }
    throw std::logic_error("closed_form_oracle: unhandled id");
}

/// One report case comparing closed form and oracle; errors become failures.
inline CheckCase closed_form_case(ClosedFormId id, long n, long r, const std::optional<Rational>& x = std::nullopt) {
    Params params;
    if (uses_r(id)) params["r"] = r;
    if (id == ClosedFormId::DETVN || !uses_r(id)) params["n"] = n;
    if (x) params["x"] = x->str();
    try {
        return make_case(to_string(id), params, closed_form_value(id, n, r, x), closed_form_oracle(id, n, r, x));
    } catch (const std::exception& e) {
        return make_case(to_string(id), params, std::string("error: ") + e.what(), "ok");
    }
}

/// D^{(1)}_{n+1} = sigma_{n+1} D_n - tau_{n+1} D_{n-1} as a polynomial identity.
inline Fragment recd1_check(long n) { return {closed_form_case(ClosedFormId::RECD1, n, 0)}; }

/// The hypergeometric sum equals both its target and its closed evaluation.
inline Fragment hypergeometric_sum_check(long n) {
    const Params params{{"n", n}};
    const Rational s = hypergeometric_sum(n);
    return {make_case("hypergeometric_sum", params, s.str(), hypergeometric_sum_target(n).str()),
            make_case("hypergeometric_sum_closed", params, s.str(), hypergeometric_sum_closed(n).str())};
}

/// H_r(b)/H_{r-1}(d) = 2 and H_{r-1}(d)/H_{r-1}(c) = r!^2 at x = 2r+1.
inline Fragment ratio_bullets_check(long r) {
    Fragment out{closed_form_case(ClosedFormId::RATIO_2, 0, r), closed_form_case(ClosedFormId::RATIO_RFACT, 0, r)};
    // H_r(b)/H_{r-1}(d) taken literally is 1/2, not 2; recorded, not asserted equal.
    const Params params{{"r", r}};
    try {
        const Rational inverted = Rational(1) / detail::bullet_ratios(r).first;
        out.push_back(make_case("ratio_2_inverted", params, inverted.str(), "1/2"));
    } catch (const std::exception& e) {
        out.push_back(make_case("ratio_2_inverted", params, std::string("error: ") + e.what(), "ok"));
    }
    return out;
}

}  // namespace bernhankel
