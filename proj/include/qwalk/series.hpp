#ifndef QWALK_SERIES_HPP
#define QWALK_SERIES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "qwalk/error.hpp"
#include "qwalk/laurent.hpp"
#include "qwalk/rational.hpp"

namespace qwalk {

/* Sentinel order for values that are exact (all omitted coefficients are
 * genuinely zero, not unknown). Large enough that order arithmetic never
 * brings it back into the truncated range. */
inline constexpr long kExactOrder = 1L << 40;

inline bool coeff_is_zero(const Rational& c) { return is_zero(c); }
inline bool coeff_is_zero(const LaurentPolynomial& c) { return c.is_zero(); }
inline std::optional<Rational> coeff_invert(const Rational& c) {
    if (is_zero(c)) return std::nullopt;
    return Rational(1) / c;
}
inline std::optional<LaurentPolynomial> coeff_invert(const LaurentPolynomial& c) { return c.inverse(); }

/* Truncated series in t with coefficients in an exact ring C.
 *
 * Stored state: a window of coefficients for t^val .. t^(val+len-1), plus a
 * truncation order. Exponents below the window are exactly zero, exponents
 * in (window, order] are exactly zero as well (trailing zeros are trimmed),
 * and exponents above the order are unknown. Unknown never collapses to
 * zero: reading past the order throws, and binary operations shrink the
 * order of their result to what both operands honestly determine. */
template <class C>
class TSeries {
  public:
    TSeries() : val_(kExactOrder + 1), order_(kExactOrder) {}  // exact zero

    static TSeries zero() { return TSeries(); }
    static TSeries zero_to_order(long order) {
        TSeries s;
        s.order_ = order;
        s.val_ = order + 1;
        return s;
    }
    static TSeries from_coeff(long t_exp, C c, long order = kExactOrder) {
        TSeries s;
        s.order_ = order;
        s.val_ = t_exp;
        s.coeffs_.push_back(std::move(c));
        s.normalize();
        return s;
    }
    static TSeries from_coeffs(long val, std::vector<C> coeffs, long order) {
        TSeries s;
        s.val_ = val;
        s.coeffs_ = std::move(coeffs);
        s.order_ = order;
        if (order < val + static_cast<long>(s.coeffs_.size()) - 1)
            throw error("series order below stored coefficient range");
        s.normalize();
        return s;
    }
    static TSeries one(long order = kExactOrder) { return from_coeff(0, unit_coeff(), order); }
    static TSeries t_power(long k, long order = kExactOrder) { return from_coeff(k, unit_coeff(), order); }

    long order() const { return order_; }
    bool is_exact() const { return order_ >= kExactOrder; }
    /* True if every known coefficient is zero. */
    bool is_zero_to_order() const { return coeffs_.empty(); }
    /* Valuation of the known part; nullopt when all known coefficients vanish. */
    std::optional<long> valuation() const {
        if (coeffs_.empty()) return std::nullopt;
        return val_;
    }
    long known_valuation() const {
        auto v = valuation();
        if (!v) throw error("valuation of a series with no known nonzero coefficient");
        return *v;
    }

    const C& coeff(long k) const {
        static const C kZero{};
        if (k > order_) throw error("reading series coefficient beyond truncation order");
        long i = k - val_;
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<size_t>(i)];
    }

    TSeries truncated(long new_order) const {
        TSeries s(*this);
        if (new_order >= s.order_) return s;
        s.order_ = new_order;
        if (!s.coeffs_.empty()) {
            long keep = new_order - s.val_ + 1;
            if (keep <= 0)
                s.coeffs_.clear();
            else if (keep < static_cast<long>(s.coeffs_.size()))
                s.coeffs_.resize(static_cast<size_t>(keep));
        }
        s.normalize();
        return s;
    }

    TSeries shifted(long k) const {  // multiply by t^k
        TSeries s(*this);
        s.val_ += k;
        if (s.order_ < kExactOrder) s.order_ += k;
        return s;
    }

    TSeries operator-() const {
        TSeries s(*this);
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        TSeries s;
        s.order_ = std::min(a.order_, b.order_);
        if (a.coeffs_.empty() && b.coeffs_.empty()) {
            s.val_ = s.order_ + 1;
            return s;
        }
        long lo = std::min(a.low_bound(), b.low_bound());
        long hi = std::min(std::max(a.high_stored(), b.high_stored()), s.order_);
        if (hi < lo) {
            s.val_ = s.order_ + 1;
            return s;
        }
        s.val_ = lo;
        s.coeffs_.assign(static_cast<size_t>(hi - lo + 1), C{});
        for (long k = lo; k <= hi; ++k) {
            C c = a.stored(k);
            C cb = b.stored(k);
            if (!coeff_is_zero(cb)) c = coeff_is_zero(c) ? cb : c + cb;
            s.coeffs_[static_cast<size_t>(k - lo)] = std::move(c);
        }
        s.normalize();
        return s;
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        TSeries s;
        long va = a.eff_val();
        long vb = b.eff_val();
        s.order_ = std::min(std::min(a.order_ + vb, b.order_ + va), kExactOrder);
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            s.val_ = s.order_ + 1;
            return s;
        }
        long lo = a.val_ + b.val_;
        long hi = std::min(a.high_stored() + b.high_stored(), s.order_);
        if (hi < lo) {
            s.val_ = s.order_ + 1;
            return s;
        }
        s.val_ = lo;
        s.coeffs_.assign(static_cast<size_t>(hi - lo + 1), C{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (coeff_is_zero(a.coeffs_[i])) continue;
            long ka = a.val_ + static_cast<long>(i);
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (coeff_is_zero(b.coeffs_[j])) continue;
                long k = ka + b.val_ + static_cast<long>(j);
                if (k > hi) break;
                auto& slot = s.coeffs_[static_cast<size_t>(k - lo)];
                C prod = a.coeffs_[i] * b.coeffs_[j];
                slot = coeff_is_zero(slot) ? std::move(prod) : slot + prod;
            }
        }
        s.normalize();
        return s;
    }

    TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
    TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    TSeries scaled(const C& c) const {
        TSeries s(*this);
        if (coeff_is_zero(c)) {
            s.coeffs_.clear();
            s.val_ = s.order_ + 1;
            return s;
        }
        for (auto& a : s.coeffs_) a = a * c;
        s.normalize();
        return s;
    }

    /* Multiplicative inverse. The leading known coefficient must be
     * invertible in C (for Laurent-polynomial coefficients: a monomial). */
    TSeries inverse() const {
        if (coeffs_.empty()) throw error("inverting a series that is zero to its order");
        auto lead_inv = coeff_invert(coeffs_.front());
        if (!lead_inv)
            throw error("series inverse needs an invertible leading coefficient");
        long n = order_ >= kExactOrder ? kExactOrder - 1 : order_ - val_;  // relative working order
        if (order_ >= kExactOrder) {
            // An exact series has an exact inverse only when it is a single
            // invertible coefficient times a power of t.
            if (coeffs_.size() == 1) {
                TSeries s = from_coeff(-val_, *lead_inv, kExactOrder);
                return s;
            }
            throw error("inverse of a non-monomial exact series is not a Laurent-coefficient series");
        }
        TSeries s;
        s.val_ = -val_;
        s.order_ = order_ - 2 * val_;
        s.coeffs_.assign(static_cast<size_t>(n + 1), C{});
        s.coeffs_[0] = *lead_inv;
        for (long m = 1; m <= n; ++m) {
            C acc{};
            for (long i = 1; i <= m; ++i) {
                const C& ai = stored(val_ + i);
                if (coeff_is_zero(ai)) continue;
                const C& sj = s.coeffs_[static_cast<size_t>(m - i)];
                if (coeff_is_zero(sj)) continue;
                C prod = ai * sj;
                acc = coeff_is_zero(acc) ? std::move(prod) : acc + prod;
            }
            if (!coeff_is_zero(acc)) s.coeffs_[static_cast<size_t>(m)] = -(*lead_inv * acc);
        }
        s.normalize();
        return s;
    }

    friend TSeries operator/(const TSeries& a, const TSeries& b) { return a * b.inverse(); }

    /* Square root with a caller-supplied square root of the leading
     * coefficient; 2*seed must be invertible in C and every correction
     * division must be exact. The valuation must be even. */
    TSeries sqrt_with_seed(const C& seed) const {
        if (coeffs_.empty()) throw error("sqrt of a series with no known nonzero coefficient");
        if (val_ % 2 != 0) throw error("sqrt of a series of odd valuation");
        if (!(seed * seed == coeffs_.front())) throw error("sqrt seed does not square to the leading coefficient");
        C two_seed = seed + seed;
        auto inv2s = coeff_invert(two_seed);
        if (!inv2s) throw error("sqrt needs 2*seed invertible in the coefficient ring");
        long n = is_exact() ? static_cast<long>(coeffs_.size()) + 2 : order_ - val_;
        TSeries s;
        s.val_ = val_ / 2;
        s.order_ = is_exact() ? s.val_ + n : order_ - val_ / 2;
        s.coeffs_.assign(static_cast<size_t>(n + 1), C{});
        s.coeffs_[0] = seed;
        for (long m = 1; m <= n; ++m) {
            C acc = stored(val_ + m);
            for (long i = 1; i < m; ++i) {
                const C& si = s.coeffs_[static_cast<size_t>(i)];
                if (coeff_is_zero(si)) continue;
                const C& sj = s.coeffs_[static_cast<size_t>(m - i)];
                if (coeff_is_zero(sj)) continue;
                C prod = si * sj;
                acc = coeff_is_zero(acc) ? -prod : acc - prod;
            }
            if (!coeff_is_zero(acc)) s.coeffs_[static_cast<size_t>(m)] = acc * *inv2s;
        }
        if (is_exact()) {
            // Exactness only survives if the square really terminates.
            s.normalize();
            TSeries sq = s * s;
            if (!agrees_with(sq, s.order_)) throw error("exact series has no exact square root");
            s.order_ = kExactOrder;
        }
        s.normalize();
        return s;
    }

    /* Compare through the smaller truncation order; returns the first
     * t-order where the two disagree, or nullopt if they agree. */
    friend std::optional<long> first_difference(const TSeries& a, const TSeries& b) {
        long n = std::min(a.order_, b.order_);
        long lo = std::min(a.low_bound(), b.low_bound());
        for (long k = lo; k <= n; ++k) {
            if (!(a.stored(k) == b.stored(k))) return k;
        }
        return std::nullopt;
    }
    bool agrees_with(const TSeries& o, long through_order) const {
        return !first_difference(truncated(through_order), o.truncated(through_order)).has_value();
    }
    friend bool operator==(const TSeries& a, const TSeries& b) { return !first_difference(a, b).has_value(); }

    /* First t-order with a nonzero known coefficient (nullopt if none). */
    std::optional<long> first_nonzero() const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeff_is_zero(coeffs_[i])) return val_ + static_cast<long>(i);
        return std::nullopt;
    }

    /* Apply f to every stored coefficient (used for coefficient-wise maps
     * such as x -> 1/x or x-range extraction). */
    template <class F>
    TSeries map_coeffs(F&& f) const {
        TSeries s(*this);
        for (auto& c : s.coeffs_) c = f(c);
        s.normalize();
        return s;
    }

    long high_stored() const { return val_ + static_cast<long>(coeffs_.size()) - 1; }

  private:
    const TSeries* ptr() const { return this; }
    static C unit_coeff() {
        if constexpr (std::is_same_v<C, Rational>) return Rational(1);
        else return C::constant(Rational(1));
    }
    long low_bound() const { return coeffs_.empty() ? order_ + 1 : val_; }
    /* Effective valuation used for order bookkeeping: a known-zero series
     * contributes order+1. */
    long eff_val() const { return coeffs_.empty() ? std::min(order_ + 1, kExactOrder) : val_; }
    const C& stored(long k) const {
        static const C kZero{};
        long i = k - val_;
        if (coeffs_.empty() || i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<size_t>(i)];
    }
    void normalize() {
        size_t drop = 0;
        while (drop < coeffs_.size() && coeff_is_zero(coeffs_[drop])) ++drop;
        if (drop > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
            val_ += static_cast<long>(drop);
        }
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) val_ = order_ + 1;
        if (order_ > kExactOrder) order_ = kExactOrder;
    }

    long val_;
    long order_;
    std::vector<C> coeffs_;
};

/* Series in t over plain rationals; hosts T, Z, S(0), R'(0), R''(0), X0 and
 * friends. Negative valuations (e.g. S(0)/t) are allowed. */
using UnivariateSeries = TSeries<Rational>;

/* Series in t with Laurent-polynomial coefficients; hosts Y0, Y1, R, S, the
 * boundary sections and everything built from them. */
using LaurentSeries = TSeries<LaurentPolynomial>;

inline UnivariateSeries u_series(std::vector<Rational> coeffs, long order) {
    return UnivariateSeries::from_coeffs(0, std::move(coeffs), order);
}

/* Square root of a series with constant term 1 (valuation 0). */
template <class C>
TSeries<C> series_sqrt(const TSeries<C>& a) {
    auto v = a.valuation();
    if (!v || *v != 0) throw error("series_sqrt requires constant term 1");
    C lead = a.coeff(0);
    C one;
    if constexpr (std::is_same_v<C, Rational>) one = Rational(1);
    else one = C::constant(Rational(1));
    if (!(lead == one)) throw error("series_sqrt requires constant term 1");
    return a.sqrt_with_seed(one);
}

template <class C>
TSeries<C> series_pow(const TSeries<C>& a, long e) {
    if (e < 0) return series_pow(a.inverse(), -e);
    TSeries<C> acc = TSeries<C>::one();
    TSeries<C> base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

}  // namespace qwalk

#endif
