#pragma once

#include <map>
#include <mutex>
#include <stdexcept>

#include "hypersum/rational.hpp"
#include "hypersum/series.hpp"
#include "hypersum/zeta_poly.hpp"

namespace hypersum {

/// zeta(s, {1}^t): leading argument s >= 2 (convergence), t trailing ones.
struct MzvIndex {
    int s;
    int t;

    MzvIndex(int s_, int t_) : s(s_), t(t_) {
        if (s < 2) throw std::invalid_argument("MzvIndex: leading argument must be >= 2");
        if (t < 0) throw std::invalid_argument("MzvIndex: trailing-ones count must be non-negative");
    }

    int weight() const { return s + t; }
};

namespace detail {

/// Table of coefficients of 1 - exp(sum_{n>=2} zeta(n)(x^n + y^n - (x+y)^n)/n)
/// truncated at total degree N; the (a, b) cell is zeta(a+1, {1}^{b-1}) as a
/// raw ZetaPoly. Cached per truncation order.
inline const BivariateSeries<ZetaPoly>& adz_table(int order) {
    static std::mutex mutex;
    static std::map<int, BivariateSeries<ZetaPoly>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    BivariateSeries<ZetaPoly> arg(order);
    for (int n = 2; n <= order; ++n) {
        const ZetaPoly zn = ZetaPoly::zeta(n) * Rational(1, n);
        // x^n + y^n - (x+y)^n contributes -C(n,i) x^i y^{n-i}, with the
        // pure powers i = 0 and i = n cancelling.
        for (int i = 1; i < n; ++i) {
            const Rational coeff = -Rational(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)));
            arg.at(i, n - i) += zn * coeff;
        }
    }
    BivariateSeries<ZetaPoly> one_minus = bivariate_exp(arg);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) one_minus.at(i, j) = -one_minus.at(i, j);
    one_minus.at(0, 0) += ZetaPoly(Rational(1));
    it = cache.emplace(order, std::move(one_minus)).first;
    return it->second;
}

}  // namespace detail

/// Reduces zeta(s, {1}^t) to a raw ZetaPoly through the bivariate
/// generating-function expansion, truncated at total degree s + t
/// (coefficients at degree w involve only weight-w symbols).
inline ZetaPoly adz_reduce(const MzvIndex& idx) {
    return detail::adz_table(idx.weight()).at(idx.s - 1, idx.t + 1);
}

inline ZetaPoly adz_reduce(int s, int t) { return adz_reduce(MzvIndex(s, t)); }

/// Explicit small-weight reductions:
///   zeta(2, {1}^t) = zeta(t+2)
///   zeta(3, {1}^t) = ((t+2)/2) zeta(t+3) - (1/2) sum_k zeta(k+1) zeta(t+2-k).
inline ZetaPoly small_weight_formula(const MzvIndex& idx) {
    if (idx.s == 2) return ZetaPoly::zeta(idx.t + 2);
    if (idx.s == 3) {
        ZetaPoly out = ZetaPoly::zeta(idx.t + 3) * Rational(idx.t + 2, 2);
        for (int k = 1; k <= idx.t; ++k)
            out -= ZetaPoly::zeta(k + 1) * ZetaPoly::zeta(idx.t + 2 - k) * Rational(1, 2);
        return out;
    }
    throw std::invalid_argument("small_weight_formula: only s in {2, 3}");
}

inline ZetaPoly small_weight_formula(int s, int t) { return small_weight_formula(MzvIndex(s, t)); }

}  // namespace hypersum
