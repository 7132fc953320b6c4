#pragma once

/**
 * @file contfrac.hpp
 * @brief Continued-fraction machinery for the Bernoulli moment families.
 *
 * Generating functions here are series in w = z^2. A J-fraction
 *
 *     c0 / (1 + s_0 w - t_1 w^2 / (1 + s_1 w - t_2 w^2 / ...))
 *
 * carries the Hankel determinants H_n = c0^{n+1} t_1^n t_2^{n-1} ... t_n.
 * The sigma/tau tables use the opposite sign on the linear coefficient,
 * s_j = -sigma_j and t_j = tau_j; that conversion lives only in
 * jfraction_from_moments and jfraction_from_contraction.
 *
 * Every template is instantiated for F = Rational (x fixed to a value) and
 * F = RationalFunction (symbolic in x).
 */

#include "bernoulli.hpp"
#include "determinant.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernhankel {

/// A required Hankel determinant or divisor vanished.
class NondegeneracyError : public std::domain_error {
public:
    NondegeneracyError(const std::string& what, long index)
        : std::domain_error(what + " (n = " + std::to_string(index) + ")"), index_(index) {}
    long index() const { return index_; }

private:
    long index_;
};

// ---------------------------------------------------------------------------
// Field plumbing

template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    using Ring = Rational;
    static Rational lift(const Polynomial& p, const std::optional<Rational>& x) {
        if (p.is_constant()) return p[0];
        if (!x) throw std::logic_error("numeric continued fraction needs an evaluation point");
        return p(*x);
    }
    static Rational from_ring(const Rational& r) { return r; }
};

template <>
struct FieldTraits<RationalFunction> {
    using Ring = Polynomial;
    static RationalFunction lift(const Polynomial& p, const std::optional<Rational>& x) {
        if (x) return RationalFunction(Polynomial(p(*x)));
        return RationalFunction(p);
    }
    static RationalFunction from_ring(const Polynomial& p) { return RationalFunction(p); }
};

inline std::string to_text(const Rational& v) { return v.str(); }
inline std::string to_text(const Polynomial& v) { return v.str(); }
inline std::string to_text(const RationalFunction& v) { return v.str(); }

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const Polynomial& v) { return v.is_zero(); }
inline bool is_zero(const RationalFunction& v) { return v.is_zero(); }

// ---------------------------------------------------------------------------
// Coefficient sequences

/// alpha_m = m^2 (x^2 - m^2) / (4 (2m+1)(2m-1)); alpha_0 = 0.
inline Polynomial alpha(long m) {
    if (m < 0) throw std::domain_error("alpha: negative index");
    if (m == 0) return {};
    const Rational m2(m * m);
    const Rational scale = m2 / Rational(4 * (2 * m + 1) * (2 * m - 1));
    return Polynomial{-m2 * scale, Rational(0), scale};
}

/// alpha_0 .. alpha_{count-1} lifted into F.
template <typename F>
std::vector<F> alpha_table(long count, const std::optional<Rational>& x = std::nullopt) {
    std::vector<F> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long m = 0; m < count; ++m) out.push_back(FieldTraits<F>::lift(alpha(m), x));
    return out;
}

/// sigma_m and tau_m tables; tau[0] is an unused zero so tau[m] is tau_m.
template <typename F>
struct Contraction {
    std::vector<F> sigma;
    std::vector<F> tau;
};

namespace detail {

template <typename F>
const F& at(const std::vector<F>& v, long i, const char* who) {
    if (i < 0 || i >= static_cast<long>(v.size()))
        throw std::out_of_range(std::string(who) + ": coefficient table too short (index " + std::to_string(i) + ")");
    return v[static_cast<std::size_t>(i)];
}

}  // namespace detail

/**
 * Even canonical contraction of 1/(1 - alpha_1 w/(1 - alpha_2 w/ ...)):
 * sigma_m = alpha_{2m} + alpha_{2m+1}, tau_m = alpha_{2m-1} alpha_{2m}.
 * `alphas` starts at alpha_0; produces sigma_0..sigma_{terms-1}, tau_1..tau_{terms-1}.
 */
template <typename F>
Contraction<F> contract_even(const std::vector<F>& alphas, long terms) {
    Contraction<F> c;
    c.tau.push_back(F(0));
    for (long m = 0; m < terms; ++m) {
        c.sigma.push_back(detail::at(alphas, 2 * m, "contract_even") + detail::at(alphas, 2 * m + 1, "contract_even"));
        if (m >= 1)
            c.tau.push_back(detail::at(alphas, 2 * m - 1, "contract_even") * detail::at(alphas, 2 * m, "contract_even"));
    }
    return c;
}

/// Odd contraction: sigma_m = alpha_{2m+1} + alpha_{2m+2}, tau_m = alpha_{2m} alpha_{2m+1}.
template <typename F>
Contraction<F> contract_odd(const std::vector<F>& alphas, long terms) {
    Contraction<F> c;
    c.tau.push_back(F(0));
    for (long m = 0; m < terms; ++m) {
        c.sigma.push_back(detail::at(alphas, 2 * m + 1, "contract_odd") + detail::at(alphas, 2 * m + 2, "contract_odd"));
        if (m >= 1)
            c.tau.push_back(detail::at(alphas, 2 * m, "contract_odd") * detail::at(alphas, 2 * m + 1, "contract_odd"));
    }
    return c;
}

/**
 * beta_1 .. beta_count with beta_1 = alpha_1 + alpha_2 and, for m >= 1,
 * beta_{2m} = alpha_{2m} alpha_{2m+1} / beta_{2m-1},
 * beta_{2m+1} = alpha_{2m+1} + alpha_{2m+2} - beta_{2m}.
 * Index 0 of the result is an unused zero.
 */
template <typename F>
std::vector<F> beta_sequence(long count, const std::optional<Rational>& x = std::nullopt) {
    if (count < 1) throw std::domain_error("beta_sequence: need at least one term");
    const auto a = alpha_table<F>(count + 2, x);
    std::vector<F> beta(static_cast<std::size_t>(count) + 1, F(0));
    beta[1] = a[1] + a[2];
    for (long n = 2; n <= count; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (n % 2 == 0) {
            if (is_zero(beta[i - 1])) throw NondegeneracyError("beta_sequence: beta_" + std::to_string(n - 1) + " vanishes", n - 1);
            beta[i] = a[i] * a[i + 1] / beta[i - 1];
        } else {
            beta[i] = a[i] + a[i + 1] - beta[i - 1];
        }
    }
    return beta;
}

// ---------------------------------------------------------------------------
// J-fractions

/// c0 / (1 + s_0 w - t_1 w^2 / (1 + s_1 w - ...)); t[0] is an unused zero.
template <typename F>
struct JFraction {
    F c0;
    std::vector<F> s;
    std::vector<F> t;

    long depth() const { return static_cast<long>(s.size()) - 1; }
};

/// J-fraction with s_j = -sigma_j, t_j = tau_j.
template <typename F>
JFraction<F> jfraction_from_contraction(const F& c0, const Contraction<F>& c) {
    JFraction<F> jf{c0, {}, c.tau};
    for (const auto& sg : c.sigma) jf.s.push_back(-sg);
    return jf;
}

/**
 * J-fraction coefficients of a moment sequence through depth N, read off
 * Hankel determinants of the sequence and of its left shift:
 *   t_n = H_n H_{n-2} / H_{n-1}^2,
 *   s_n = -(H_{n-1}(c) H_n(c') / H_n(c) + H_n(c) H_{n-2}(c') / H_{n-1}(c)) / H_{n-1}(c'),
 * with c'_k = c_{k+1}, H_{-1} = 1 and H_{-2} = 0.
 */
template <typename F>
JFraction<F> jfraction_from_moments(const MomentSequence& seq, long depth) {
    using Ring = typename FieldTraits<F>::Ring;
    if (depth < 0) throw std::domain_error("jfraction_from_moments: negative depth");
    const MomentSequence shifted = seq.shifted();
    std::vector<F> h, hs;  // h[n+2] = H_n(c), hs[n+2] = H_n(c')
    for (long n = -2; n <= depth; ++n) {
        h.push_back(FieldTraits<F>::from_ring(hankel_det<Ring>(seq, n)));
        hs.push_back(FieldTraits<F>::from_ring(hankel_det<Ring>(shifted, n)));
    }
    auto H = [&h](long n) -> const F& { return h[static_cast<std::size_t>(n + 2)]; };
    auto Hs = [&hs](long n) -> const F& { return hs[static_cast<std::size_t>(n + 2)]; };

    JFraction<F> jf;
    jf.c0 = H(0);
    jf.t.push_back(F(0));
    for (long n = 0; n <= depth; ++n) {
        if (is_zero(H(n))) throw NondegeneracyError("jfraction_from_moments: H_n vanishes", n);
        if (is_zero(Hs(n - 1))) throw NondegeneracyError("jfraction_from_moments: H_{n-1} of shifted sequence vanishes", n - 1);
        jf.s.push_back(-(H(n - 1) * Hs(n) / H(n) + H(n) * Hs(n - 2) / H(n - 1)) / Hs(n - 1));
        if (n >= 1) jf.t.push_back(H(n) * H(n - 2) / (H(n - 1) * H(n - 1)));
    }
    return jf;
}

/// c0^{n+1} prod_{l=1}^{n} t_l^{n+1-l}; `t` is indexed from 1 (t[0] unused).
template <typename F>
F hankel_from_tcoeffs(const F& c0, const std::vector<F>& t, long n) {
    if (n < 0) throw std::domain_error("hankel_from_tcoeffs: negative order");
    F acc = c0;
    for (long i = 0; i < n; ++i) acc = acc * c0;
    for (long l = 1; l <= n; ++l) {
        const F& tl = detail::at(t, l, "hankel_from_tcoeffs");
        for (long e = 0; e < n + 1 - l; ++e) acc = acc * tl;
    }
    return acc;
}

/// d_{-1} = 1, d_0 = sigma_0, d_{k+1} = sigma_{k+1} d_k - tau_{k+1} d_{k-1}.
template <typename F>
struct TridiagSeq {
    std::vector<F> sigma;
    std::vector<F> tau;
    std::vector<F> d;  // d[k+1] = D_k

    const F& D(long k) const { return detail::at(d, k + 1, "TridiagSeq::D"); }
};

template <typename F>
TridiagSeq<F> tridiag_det_seq(const std::vector<F>& sigma, const std::vector<F>& tau, long n) {
    if (n < -1) throw std::domain_error("tridiag_det_seq: n below -1");
    TridiagSeq<F> seq{sigma, tau, {F(1)}};
    if (n >= 0) seq.d.push_back(detail::at(sigma, 0, "tridiag_det_seq"));
    for (long k = 0; k < n; ++k) {
        const F& s = detail::at(sigma, k + 1, "tridiag_det_seq");
        const F& t = detail::at(tau, k + 1, "tridiag_det_seq");
        seq.d.push_back(s * seq.D(k) - t * seq.D(k - 1));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// General continued fractions b0 + a1/(b1 + a2/(b2 + ...)) with partial
// numerators and denominators that are polynomials in w over F.

template <typename F>
using Series = std::vector<F>;  // coefficients in w, ascending

template <typename F>
struct KFraction {
    Series<F> b0;
    std::vector<Series<F>> a;  // a[m-1] = a_m
    std::vector<Series<F>> b;  // b[m-1] = b_m

    long levels() const { return static_cast<long>(a.size()); }
};

namespace detail {

template <typename F>
Series<F> series_mul(const Series<F>& p, const Series<F>& q, std::size_t keep) {
    Series<F> out(std::min(keep, p.empty() || q.empty() ? 0 : p.size() + q.size() - 1), F(0));
    for (std::size_t i = 0; i < p.size() && i < out.size(); ++i)
        for (std::size_t j = 0; j < q.size() && i + j < out.size(); ++j) out[i + j] = out[i + j] + p[i] * q[j];
    return out;
}

template <typename F>
Series<F> series_add(const Series<F>& p, const Series<F>& q) {
    Series<F> out(std::max(p.size(), q.size()), F(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = out[i] + p[i];
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = out[i] + q[i];
    return out;
}

/// p / q through w^{keep-1}; q(0) must be nonzero.
template <typename F>
Series<F> series_div(const Series<F>& p, const Series<F>& q, std::size_t keep) {
    if (q.empty() || is_zero(q[0])) throw std::domain_error("series_div: denominator has zero constant term");
    Series<F> out(keep, F(0));
    for (std::size_t k = 0; k < keep; ++k) {
        F acc = k < p.size() ? p[k] : F(0);
        for (std::size_t j = 1; j <= k && j < q.size(); ++j) acc = acc - q[j] * out[k - j];
        out[k] = acc / q[0];
    }
    return out;
}

}  // namespace detail

/**
 * Power series of the approximant A_n/B_n through w^order, with
 * A_m = b_m A_{m-1} + a_m A_{m-2}, B_m = b_m B_{m-1} + a_m B_{m-2},
 * A_{-1} = 1, A_0 = b_0, B_{-1} = 0, B_0 = 1.
 */
template <typename F>
Series<F> approximant_series(const KFraction<F>& kf, long n, long order) {
    if (n < 0 || n > kf.levels()) throw std::out_of_range("approximant_series: approximant index out of range");
    const auto keep = static_cast<std::size_t>(order + 1);
    Series<F> a_prev{F(1)}, a_cur = kf.b0, b_prev{}, b_cur{F(1)};
    for (long m = 1; m <= n; ++m) {
        const auto& am = kf.a[static_cast<std::size_t>(m - 1)];
        const auto& bm = kf.b[static_cast<std::size_t>(m - 1)];
        Series<F> a_next = detail::series_add(detail::series_mul(bm, a_cur, keep), detail::series_mul(am, a_prev, keep));
        Series<F> b_next = detail::series_add(detail::series_mul(bm, b_cur, keep), detail::series_mul(am, b_prev, keep));
        a_prev = std::move(a_cur);
        a_cur = std::move(a_next);
        b_prev = std::move(b_cur);
        b_cur = std::move(b_next);
    }
    return detail::series_div(a_cur, b_cur, keep);
}

/// b_0 = 0, a_1 = c0, b_1 = 1 + s_0 w, a_{m+1} = -t_m w^2, b_{m+1} = 1 + s_m w.
template <typename F>
KFraction<F> to_kfraction(const JFraction<F>& jf) {
    KFraction<F> kf;
    for (long m = 0; m <= jf.depth(); ++m) {
        const auto i = static_cast<std::size_t>(m);
        kf.a.push_back(m == 0 ? Series<F>{jf.c0} : Series<F>{F(0), F(0), -detail::at(jf.t, m, "to_kfraction")});
        kf.b.push_back(Series<F>{F(1), jf.s[i]});
    }
    return kf;
}

/// 1 / (1 - coeffs[1] w / (1 - coeffs[2] w / ...)); coeffs[0] is ignored.
template <typename F>
KFraction<F> sfraction(const std::vector<F>& coeffs) {
    KFraction<F> kf;
    kf.a.push_back(Series<F>{F(1)});
    kf.b.push_back(Series<F>{F(1)});
    for (std::size_t m = 1; m < coeffs.size(); ++m) {
        kf.a.push_back(Series<F>{F(0), -coeffs[m]});
        kf.b.push_back(Series<F>{F(1)});
    }
    return kf;
}

/**
 * Equivalent fraction with d_m = r_m b_m and c_{m+1} = r_{m+1} r_m a_{m+1};
 * r[0] must be 1 and every r_m nonzero. Approximants are unchanged.
 */
template <typename F>
KFraction<F> equivalence_transform(const KFraction<F>& kf, const std::vector<F>& r) {
    if (r.empty() || !(r[0] == F(1))) throw std::invalid_argument("equivalence_transform: r_0 must be 1");
    if (static_cast<long>(r.size()) < kf.levels() + 1) throw std::invalid_argument("equivalence_transform: too few multipliers");
    for (const auto& v : r)
        if (is_zero(v)) throw std::invalid_argument("equivalence_transform: multipliers must be nonzero");
    KFraction<F> out;
    out.b0 = kf.b0;
    for (long m = 1; m <= kf.levels(); ++m) {
        const auto i = static_cast<std::size_t>(m);
        Series<F> am = kf.a[i - 1], bm = kf.b[i - 1];
        for (auto& c : am) c = c * r[i] * r[i - 1];
        for (auto& c : bm) c = c * r[i];
        out.a.push_back(std::move(am));
        out.b.push_back(std::move(bm));
    }
    return out;
}

/// Moments c_0..c_order reproduced by the depth-ceil(order/2) approximant.
template <typename F>
Series<F> series_from_jfraction(const JFraction<F>& jf, long order) {
    if (order < 0) throw std::domain_error("series_from_jfraction: negative order");
    const long needed = (order + 1) / 2;
    if (jf.depth() < needed) throw std::out_of_range("series_from_jfraction: J-fraction too shallow for requested order");
    JFraction<F> cut{jf.c0, {jf.s.begin(), jf.s.begin() + needed + 1}, {jf.t.begin(), jf.t.begin() + needed + 1}};
    return approximant_series(to_kfraction(cut), needed + 1, order);
}

// ---------------------------------------------------------------------------
// Left-shift identities

/**
 * Checks H_n(c_{k+1}) = H_n(c_k) D_n and
 * H_n(c_{k+2}) = H_n(c_k) (prod_{l=1}^{n+1} t_l) sum_{l=-1}^{n} D_l^2 / prod_{j=1}^{l+1} t_j,
 * where (s, t) is the J-fraction of `seq` and D the tridiagonal sequence
 * with sigma = -s, tau = t. Failures and degeneracies are reported, not thrown.
 */
template <typename F>
Fragment shift_identities_check(const MomentSequence& seq, long n) {
    using Ring = typename FieldTraits<F>::Ring;
    Params params{{"family", seq.name()}, {"n", n}};
    if (seq.point()) params["x"] = seq.point()->str();
    Fragment out;
    try {
        const auto jf = jfraction_from_moments<F>(seq, n + 1);
        std::vector<F> sigma;
        for (const auto& s : jf.s) sigma.push_back(-s);
        const auto tri = tridiag_det_seq(sigma, jf.t, n);

        const F h0 = FieldTraits<F>::from_ring(hankel_det<Ring>(seq, n));
        const F h1 = FieldTraits<F>::from_ring(hankel_det<Ring>(seq.shifted(1), n));
        const F h2 = FieldTraits<F>::from_ring(hankel_det<Ring>(seq.shifted(2), n));
        out.push_back(make_case("left_shift_1", params, to_text(h1), to_text(h0 * tri.D(n))));

        F tprod(1);
        for (long l = 1; l <= n + 1; ++l) tprod = tprod * jf.t[static_cast<std::size_t>(l)];
        F sum(0), partial(1);
        for (long l = -1; l <= n; ++l) {
            if (l >= 0) partial = partial * jf.t[static_cast<std::size_t>(l + 1)];
            sum = sum + tri.D(l) * tri.D(l) / partial;
        }
        out.push_back(make_case("left_shift_2", params, to_text(h2), to_text(h0 * tprod * sum)));
    } catch (const std::exception& e) {
        out.push_back(make_case("left_shift_1", params, std::string("error: ") + e.what(), "ok"));
    }
    return out;
}

}  // namespace bernhankel
