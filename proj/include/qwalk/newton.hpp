#ifndef QWALK_NEWTON_HPP
#define QWALK_NEWTON_HPP

#include <vector>

#include "qwalk/series.hpp"

namespace qwalk {

/* Solve F(S, t) = 0 for the unique series S with S(0) = seed, where
 *   F(S) = sum_k relation[k] * S^k
 * and the relation coefficients are series known at least to `order`.
 * The constant term of dF/dS at the seed must be invertible; coefficients
 * are then determined one t-order at a time by the linear update
 *   s_n = -[t^n] F(S_{<n}) / c0.
 * Throws if the seed is not a root of the constant-term equation or if the
 * linearization is degenerate. The result is verified against the relation
 * before being returned. */
template <class C>
TSeries<C> newton_implicit(const std::vector<TSeries<C>>& relation, const C& seed, long order) {
    if (relation.empty()) throw error("newton_implicit: empty relation");
    const long deg = static_cast<long>(relation.size()) - 1;

    // Constant-term equation and its S-derivative at the seed.
    C f0{};
    C df0{};
    {
        C pw;  // seed^k
        if constexpr (std::is_same_v<C, Rational>) pw = Rational(1);
        else pw = C::constant(Rational(1));
        for (long k = 0; k <= deg; ++k) {
            const C& ck = relation[static_cast<size_t>(k)].coeff(0);
            if (!coeff_is_zero(ck)) {
                C term = ck * pw;
                f0 = coeff_is_zero(f0) ? term : f0 + term;
                if (k >= 1) {
                    C dterm = term;  // ck * seed^k; derivative contribution is k*ck*seed^(k-1)
                    // recompute properly below
                }
            }
            if (k < deg) pw = pw * seed;
        }
        // derivative: sum_k k * c_k * seed^(k-1)
        C pwd;
        if constexpr (std::is_same_v<C, Rational>) pwd = Rational(1);
        else pwd = C::constant(Rational(1));
        for (long k = 1; k <= deg; ++k) {
            const C& ck = relation[static_cast<size_t>(k)].coeff(0);
            if (!coeff_is_zero(ck)) {
                C term = ck * pwd;
                if constexpr (std::is_same_v<C, Rational>) term = term * Rational(k);
                else term = term * C::constant(Rational(k));
                df0 = coeff_is_zero(df0) ? term : df0 + term;
            }
            pwd = pwd * seed;
        }
    }
    if (!coeff_is_zero(f0)) throw error("newton_implicit: seed is not a root of the constant-term equation");
    auto c0inv = coeff_invert(df0);
    if (!c0inv) throw error("newton_implicit: degenerate linearization at the seed");

    std::vector<C> s(static_cast<size_t>(order) + 1, C{});
    s[0] = seed;

    auto eval = [&](long upto) {
        TSeries<C> S = TSeries<C>::from_coeffs(0, std::vector<C>(s.begin(), s.begin() + upto + 1), upto);
        TSeries<C> G = relation[static_cast<size_t>(deg)].truncated(upto);
        for (long k = deg - 1; k >= 0; --k) G = G * S + relation[static_cast<size_t>(k)].truncated(upto);
        return G;
    };

    for (long n = 1; n <= order; ++n) {
        TSeries<C> r = eval(n);
        const C& rn = r.coeff(n);
        if (!coeff_is_zero(rn)) s[static_cast<size_t>(n)] = -(rn * *c0inv);
    }

    TSeries<C> result = TSeries<C>::from_coeffs(0, std::move(s), order);
    // Residual guard: the defining relation must vanish to the full order.
    TSeries<C> G = relation[static_cast<size_t>(deg)].truncated(order);
    for (long k = deg - 1; k >= 0; --k) G = G * result + relation[static_cast<size_t>(k)].truncated(order);
    if (auto bad = G.first_nonzero())
        throw invariant_violation("newton_implicit: residual nonzero at t^" + std::to_string(*bad));
    return result;
}

}  // namespace qwalk

#endif
