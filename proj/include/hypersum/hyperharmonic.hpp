#pragma once

#include <stdexcept>
#include <vector>

#include "hypersum/rational.hpp"
#include "hypersum/sequences.hpp"
#include "hypersum/series.hpp"

namespace hypersum {

/// Query for h_n^(m)(k): n upper summation index, m iteration order,
/// k inner depth. h_n^(m)(k) = 0 whenever n < k.
struct HyperharmonicQuery {
    int n;
    int m;
    int k;

    HyperharmonicQuery(int n_, int m_, int k_) : n(n_), m(m_), k(k_) {
        if (n < 1) throw std::invalid_argument("hyperharmonic: n must be positive");
        if (m < 1) throw std::invalid_argument("hyperharmonic: m must be positive");
        if (k < 0) throw std::invalid_argument("hyperharmonic: k must be non-negative");
    }
};

namespace detail {

/// H_j^({1}^r) for j = 0..n in one DP pass.
inline std::vector<Rational> ones_harmonic_prefix(int n, int r) {
    std::vector<Rational> suffix(static_cast<std::size_t>(n) + 1, Rational(1));
    std::vector<Rational> current(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < r; ++j) {
        current[0] = 0;
        for (int i = 1; i <= n; ++i)
            current[static_cast<std::size_t>(i)] =
                current[static_cast<std::size_t>(i - 1)] + suffix[static_cast<std::size_t>(i - 1)] / i;
        std::swap(suffix, current);
    }
    return suffix;
}

}  // namespace detail

/// h_n^(m)(k) by the defining m-fold iterated prefix summation of the inner
/// sequence H_{j-1}^({1}^{k-1}) / j. Requires k >= 1.
inline Rational hh_direct(const HyperharmonicQuery& q) {
    if (q.k < 1) throw std::invalid_argument("hh_direct: k must be >= 1");
    const auto inner = detail::ones_harmonic_prefix(q.n - 1, q.k - 1);
    std::vector<Rational> values(static_cast<std::size_t>(q.n));
    for (int j = 1; j <= q.n; ++j) values[static_cast<std::size_t>(j - 1)] = inner[static_cast<std::size_t>(j - 1)] / j;
    for (int fold = 0; fold < q.m - 1; ++fold) {
        Rational run = 0;
        for (auto& v : values) {
            run += v;
            v = run;
        }
    }
    Rational total = 0;
    for (const auto& v : values) total += v;
    return total;
}

/// h_n^(m)(k) by the recurrence
///   h(k) = ((-1)^{k-1}/k) sum_{i<k} (-1)^i h(i) {H_{m+n-1}^(k-i) - H_{m-1}^(k-i)}
/// with base h(0) = C(m+n-1, m-1). The whole triangular chain h(0..k) is
/// built in one call. k = 0 is valid here (and only here).
inline Rational hh_recurrence(const HyperharmonicQuery& q) {
    std::vector<Rational> h{Rational(binomial(static_cast<std::uint64_t>(q.m + q.n - 1),
                                              static_cast<std::uint64_t>(q.m - 1)))};
    for (int k = 1; k <= q.k; ++k) {
        Rational acc = 0;
        for (int i = 0; i < k; ++i) {
            const Rational diff = harmonic(q.m + q.n - 1, k - i) - harmonic(q.m - 1, k - i);
            const Rational term = h[static_cast<std::size_t>(i)] * diff;
            acc += (i % 2 == 0) ? term : -term;
        }
        acc /= k;
        h.push_back(k % 2 == 1 ? acc : -acc);
    }
    return h[static_cast<std::size_t>(q.k)];
}

/// h_n^(m)(k) by the explicit binomial-times-harmonic closed forms,
/// available for 1 <= k <= 4.
inline Rational hh_closed(const HyperharmonicQuery& q) {
    if (q.k < 1 || q.k > 4) throw std::invalid_argument("hh_closed: only k in 1..4 has a closed form");
    const Rational c(binomial(static_cast<std::uint64_t>(q.n + q.m - 1), static_cast<std::uint64_t>(q.m - 1)));
    const Rational a = harmonic(q.n + q.m - 1, 1) - harmonic(q.m - 1, 1);
    switch (q.k) {
        case 1:
            return c * a;
        case 2: {
            const Rational b = harmonic(q.n + q.m - 1, 2) - harmonic(q.m - 1, 2);
            return c * (a * a - b) / 2;
        }
        case 3: {
            const Rational b = harmonic(q.n + q.m - 1, 2) - harmonic(q.m - 1, 2);
            const Rational d = harmonic(q.n + q.m - 1, 3) - harmonic(q.m - 1, 3);
            return c * (a * a * a + 2 * d - 3 * a * b) / 6;
        }
        default: {
            const Rational b = harmonic(q.n + q.m - 1, 2) - harmonic(q.m - 1, 2);
            const Rational d = harmonic(q.n + q.m - 1, 3) - harmonic(q.m - 1, 3);
            const Rational e = harmonic(q.n + q.m - 1, 4) - harmonic(q.m - 1, 4);
            return c * (a * a * a * a + 3 * b * b - 6 * e - 6 * a * a * b + 8 * a * d) / 24;
        }
    }
}

/// Coefficients of z^n (n = 1..N) in ((-1)^k/k!) log^k(1-z) / (1-z)^m,
/// computed with exact truncated series.
inline std::vector<Rational> hh_genfunc_coeffs(int m, int k, int order) {
    if (m < 1 || k < 1) throw std::invalid_argument("hh_genfunc_coeffs: m and k must be positive");
    if (order < 1) throw std::invalid_argument("hh_genfunc_coeffs: order must be >= 1");
    const auto log1m = series_log_one_minus(order);
    TruncatedSeries<Rational> logpow(order);
    logpow.at(0) = 1;
    for (int i = 0; i < k; ++i) logpow = series_mul(logpow, log1m);
    TruncatedSeries<Rational> geom(order);  // (1-z)^{-m}
    for (int j = 0; j <= order; ++j)
        geom.at(j) = Rational(binomial(static_cast<std::uint64_t>(m + j - 1), static_cast<std::uint64_t>(j)));
    const auto product = series_mul(logpow, geom);
    const Rational scale = Rational(k % 2 == 0 ? 1 : -1) / Integer(factorial(static_cast<std::uint64_t>(k)));
    std::vector<Rational> out(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) out[static_cast<std::size_t>(n - 1)] = scale * product.at(n);
    return out;
}

}  // namespace hypersum
