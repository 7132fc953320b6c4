#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers and polynomials, power sums, and the moment
 *        sequences whose Hankel determinants this library studies.
 *
 * Convention: B_1 = -1/2, so that B_1(x) = x - 1/2.
 */

#include "combinatorics.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernhankel {

namespace detail {

// Grow-only cache filled under a lock; entries never change once written.
class BernoulliTable {
public:
    Rational get(long n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(values_.size()) <= n) extend();
        return values_[static_cast<std::size_t>(n)];
    }

private:
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 solved for B_m.
    void extend() {
        const long m = static_cast<long>(values_.size());
        if (m == 0) {
            values_.emplace_back(1);
            return;
        }
        Rational acc;
        for (long k = 0; k < m; ++k) acc += binomial(m + 1, k) * values_[static_cast<std::size_t>(k)];
        values_.push_back(-acc / Rational(m + 1));
    }

    std::mutex mu_;
    std::vector<Rational> values_;
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace detail

inline Rational bernoulli_number(long n) {
    if (n < 0) throw std::domain_error("bernoulli_number: negative index");
    return detail::bernoulli_table().get(n);
}

/// B_n(x) = sum_m C(n, m) B_m x^{n-m}.
inline Polynomial bernoulli_poly(long n) {
    if (n < 0) throw std::domain_error("bernoulli_poly: negative index");
    std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) cs[static_cast<std::size_t>(n - m)] = binomial(n, m) * bernoulli_number(m);
    return Polynomial(std::move(cs));
}

/// B_n((x+1)/2) / n for n >= 1, by composition.
inline Polynomial bernoulli_half_shift(long n) {
    if (n < 1) throw std::domain_error("bernoulli_half_shift: index must be positive");
    static const Polynomial half_shift{Rational(1, 2), Rational(1, 2)};
    return bernoulli_poly(n).compose(half_shift) / Rational(n);
}

/**
 * I_k = sum_{c=1}^{r} c^k, computed both directly and through
 * (B_{k+1}(r+1) - B_{k+1}(1)) / (k+1). Throws std::logic_error if they differ.
 */
inline Rational power_sum(long k, long r) {
    if (k < 0) throw std::domain_error("power_sum: negative exponent");
    if (r < 1) throw std::domain_error("power_sum: r must be positive");
    Integer direct = 0;
    for (long c = 1; c <= r; ++c) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(k));
        direct += term;
    }
    const Polynomial b = bernoulli_poly(k + 1);
    const Rational faulhaber = (b(Rational(r + 1)) - b(Rational(1))) / Rational(k + 1);
    if (faulhaber != Rational(direct))
        throw std::logic_error("power_sum: Faulhaber evaluation disagrees with direct sum for k=" +
                               std::to_string(k) + ", r=" + std::to_string(r));
    return faulhaber;
}

/**
 * A generator of Hankel entries c_0, c_1, ...
 *
 * The Bernoulli families are c_k = B_{2k+2s+1}((x+1)/2) / (2k+2s+1) with
 * shift s = 0, 1, 2 for the b, c, d families; further shifts are allowed
 * (the J-fraction machinery needs c_{k+1}). Power sums are c_k = I_{2k+2s}.
 */
class MomentSequence {
public:
    enum class Kind { Bernoulli, PowerSum, Custom };

    static MomentSequence b2k1() { return MomentSequence(Kind::Bernoulli, 0); }
    static MomentSequence b2k3() { return MomentSequence(Kind::Bernoulli, 1); }
    static MomentSequence b2k5() { return MomentSequence(Kind::Bernoulli, 2); }
    static MomentSequence power_sums(long r) {
        if (r < 1) throw std::domain_error("MomentSequence: r must be positive");
        MomentSequence s(Kind::PowerSum, 0);
        s.r_ = r;
        return s;
    }
    static MomentSequence custom(std::vector<Rational> values) {
        MomentSequence s(Kind::Custom, 0);
        s.custom_ = std::move(values);
        return s;
    }

    /// Parses "b2k1", "b2k3", "b2k5" (and "b2k7", ...) or "powsum".
    static MomentSequence from_name(const std::string& name, std::optional<long> r = std::nullopt) {
        if (name == "powsum") {
            if (!r) throw std::invalid_argument("family powsum needs r");
            return power_sums(*r);
        }
        if (name.size() > 3 && name.rfind("b2k", 0) == 0) {
            long odd = std::stol(name.substr(3));
            if (odd >= 1 && odd % 2 == 1) return MomentSequence(Kind::Bernoulli, (odd - 1) / 2);
        }
        throw std::invalid_argument("unknown family '" + name + "'");
    }

    Kind kind() const { return kind_; }
    long shift() const { return shift_; }
    long r() const { return r_; }
    const std::optional<Rational>& point() const { return point_; }

    /// Sequence k -> c_{k+by}.
    MomentSequence shifted(long by = 1) const {
        MomentSequence s = *this;
        s.shift_ += by;
        return s;
    }

    /// Same sequence with x fixed to a rational value.
    MomentSequence at(const Rational& x) const {
        MomentSequence s = *this;
        s.point_ = x;
        return s;
    }

    MomentSequence symbolic() const {
        MomentSequence s = *this;
        s.point_.reset();
        return s;
    }

    bool depends_on_x() const { return kind_ == Kind::Bernoulli; }

    std::string name() const {
        switch (kind_) {
            case Kind::Bernoulli: return "b2k" + std::to_string(2 * shift_ + 1);
            case Kind::PowerSum:
                return "powsum(r=" + std::to_string(r_) + (shift_ ? ",shift=" + std::to_string(shift_) : "") + ")";
            case Kind::Custom: return "custom" + (shift_ ? "(shift=" + std::to_string(shift_) + ")" : std::string());
        }
        return "?";
    }

    /// c_k as a polynomial in x (constant for x-free kinds).
    Polynomial symbolic_moment(long k) const {
        if (k < 0) throw std::domain_error("moment: negative index");
        switch (kind_) {
            case Kind::Bernoulli: return bernoulli_half_shift(2 * (k + shift_) + 1);
            case Kind::PowerSum: return Polynomial(power_sum(2 * (k + shift_), r_));
            case Kind::Custom: {
                auto idx = static_cast<std::size_t>(k + shift_);
                if (idx >= custom_.size()) throw std::out_of_range("custom moment sequence exhausted at index " + std::to_string(idx));
                return Polynomial(custom_[idx]);
            }
        }
        return {};
    }

    /// c_k as a rational; needs an evaluation point for the Bernoulli kinds.
    Rational value_moment(long k) const {
        if (kind_ == Kind::Bernoulli) {
            if (!point_) throw std::logic_error("moment: family " + name() + " needs an evaluation point");
            return symbolic_moment(k)(*point_);
        }
        return symbolic_moment(k)[0];
    }

private:
    MomentSequence(Kind kind, long shift) : kind_(kind), shift_(shift) {}

    Kind kind_;
    long shift_ = 0;
    long r_ = 0;
    std::vector<Rational> custom_;
    std::optional<Rational> point_;
};

/// moment<Polynomial>(seq, k) is symbolic in x; moment<Rational> evaluates.
template <typename T>
T moment(const MomentSequence& seq, long k);

template <>
inline Polynomial moment<Polynomial>(const MomentSequence& seq, long k) {
    if (seq.point()) return Polynomial(seq.value_moment(k));
    return seq.symbolic_moment(k);
}

template <>
inline Rational moment<Rational>(const MomentSequence& seq, long k) {
    return seq.value_moment(k);
}

}  // namespace bernhankel
