#pragma once

#include <stdexcept>

#include "hypersum/mzv.hpp"
#include "hypersum/rational.hpp"
#include "hypersum/sequences.hpp"
#include "hypersum/zeta_poly.hpp"

namespace hypersum {

/// W_{k,r}(m) = (k-1)! sum_n [n+r+1, k] / ((n+r)! n^m): harmonic-power index
/// k in 1..4, shift r >= 0, exponent m >= 2 (convergence).
struct WQuery {
    int k;
    int r;
    int m;

    WQuery(int k_, int r_, int m_) : k(k_), r(r_), m(m_) {
        if (k < 1 || k > 4) throw std::invalid_argument("WQuery: k must be in 1..4");
        if (r < 0) throw std::invalid_argument("WQuery: r must be non-negative");
        if (m < 2) throw std::invalid_argument("WQuery: requires m >= 2");
    }
};

/// S(k, r; p) = sum_n h_n^(r)(k) / n^p with k in {2,3}; p >= r+1 guarantees
/// convergence and keeps every internal W argument >= 2.
struct SQuery {
    int k;
    int r;
    int p;

    SQuery(int k_, int r_, int p_) : k(k_), r(r_), p(p_) {
        if (k != 2 && k != 3) throw std::invalid_argument("SQuery: k must be 2 or 3");
        if (r < 1) throw std::invalid_argument("SQuery: r must be positive");
        if (p <= r) throw std::domain_error("SQuery: requires p >= r+1");
    }
};

/// Euler's linear sum S_{1,q} = (1/2){(q+2) zeta(q+1) - sum zeta(q-i) zeta(i+1)}.
inline ZetaPoly linear_euler_sum(int q) {
    if (q < 2) throw std::invalid_argument("linear_euler_sum: requires q >= 2");
    ZetaPoly out = ZetaPoly::zeta(q + 1) * Rational(q + 2);
    for (int i = 1; i <= q - 2; ++i) out -= ZetaPoly::zeta(q - i) * ZetaPoly::zeta(i + 1);
    return out * Rational(1, 2);
}

/// W_{k,0}(m): zeta(m) for k = 1, else
/// (k-1)! (zeta(m+1,{1}^{k-2}) + zeta(m,{1}^{k-1})) via the MZV reduction.
inline ZetaPoly w_base(int k, int m) {
    if (k < 1 || k > 4) throw std::invalid_argument("w_base: k must be in 1..4");
    if (m < 2) throw std::invalid_argument("w_base: requires m >= 2");
    if (k == 1) return ZetaPoly::zeta(m);
    const ZetaPoly sum = adz_reduce(m + 1, k - 2) + adz_reduce(m, k - 1);
    return sum * Rational(factorial(static_cast<std::uint64_t>(k - 1)));
}

namespace detail {

inline Rational int_pow(int base, int exp) {
    Integer v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return Rational(v);
}

}  // namespace detail

/// W_{k,r}(m) assembled from W_{j,0} values at shifted exponents plus exact
/// rational corrections built from harmonic numbers at indices <= r.
inline ZetaPoly w_shift(const WQuery& q) {
    if (q.k < 2) throw std::invalid_argument("w_shift: k must be in {2, 3, 4}");
    const int r = q.r;
    const int m = q.m;
    const Rational sign = (m % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^{m-1}

    if (q.k == 2) {
        ZetaPoly out = w_base(2, m);
        for (int l = 1; l <= m - 1; ++l) {
            const Rational c = (l % 2 == 1 ? 1 : -1) * harmonic(r, l);
            out += ZetaPoly::zeta(m + 1 - l) * c;
        }
        Rational tail = 0;
        for (int j = 1; j <= r; ++j) tail += harmonic(j) / detail::int_pow(j, m);
        return out + ZetaPoly(sign * tail);
    }

    if (q.k == 3) {
        ZetaPoly out = w_base(3, m);
        for (int i = 1; i <= m - 1; ++i)
            out += w_base(2, m + 1 - i) * (Rational(2) * (i % 2 == 1 ? 1 : -1) * harmonic(r, i));
        for (int l = 1; l <= m - 1; ++l) {
            Rational s = 0;
            for (int j = 1; j <= r; ++j)
                for (int i = 1; i < j; ++i)
                    s += Rational(1) / (detail::int_pow(i, l) * (j - i)) -
                         Rational(1) / (detail::int_pow(j, l) * (j - i));
            out += ZetaPoly::zeta(m + 1 - l) * (Rational(2) * (l % 2 == 1 ? 1 : -1) * s);
        }
        Rational inner = 0;
        for (int j = 1; j <= r; ++j) {
            const Rational hj = harmonic(j);
            inner += (hj * hj + harmonic(j, 2)) / detail::int_pow(j, m);
            inner -= 2 * hj / detail::int_pow(j, m + 1);
        }
        for (int j = 1; j <= r; ++j)
            for (int i = 1; i < j; ++i)
                inner += 2 * harmonic(i) / (detail::int_pow(i, m) * (j - i)) -
                         2 * harmonic(j) / (detail::int_pow(j, m) * (j - i));
        out += ZetaPoly(sign * inner);
        out += ZetaPoly::zeta(2) * (sign * 2 * harmonic(r, m));
        return out;
    }

    // k == 4
    ZetaPoly out = w_base(4, m);
    for (int l = 1; l <= m - 1; ++l)
        out += w_base(3, m + 1 - l) * (Rational(3) * (l % 2 == 1 ? 1 : -1) * harmonic(r, l));
    for (int l = 1; l <= m - 1; ++l) {
        Rational s = 0;
        for (int j = 1; j <= r; ++j)
            for (int i = 1; i < j; ++i)
                s += (Rational(1) / detail::int_pow(i, l) - Rational(1) / detail::int_pow(j, l)) / (j - i);
        out += w_base(2, m + 1 - l) * (Rational(6) * (l % 2 == 1 ? 1 : -1) * s);
    }
    out += ZetaPoly::zeta(3) * (sign * 6 * harmonic(r, m));
    Rational block = 0;
    for (int j = 1; j <= r; ++j) {
        const Rational hj = harmonic(j);
        const Rational hj2 = harmonic(j, 2);
        block -= 3 * (hj * hj + hj2) / detail::int_pow(j, m + 1);
        block += (hj * hj * hj + 3 * hj * hj2 + 2 * harmonic(j, 3)) / detail::int_pow(j, m);
    }
    out += ZetaPoly(sign * block);
    // pair sums over the partial-fraction kernel g(i) = (H_i^2 + H_i^(2))/2
    // + zeta(2) - H_i/i, split into its rational and zeta(2) parts
    Rational pair_rat = 0;
    Rational pair_z2 = 0;
    for (int j = 1; j <= r; ++j) {
        for (int i = 1; i < j; ++i) {
            const Rational w = Rational(1, j - i);
            const Rational hi = harmonic(i);
            const Rational hj = harmonic(j);
            pair_rat += w * ((hi * hi + harmonic(i, 2)) / (2 * detail::int_pow(i, m)) -
                             hi / detail::int_pow(i, m + 1));
            pair_rat -= w * ((hj * hj + harmonic(j, 2)) / (2 * detail::int_pow(j, m)) -
                             hj / detail::int_pow(j, m + 1));
            pair_z2 += w * (Rational(1) / detail::int_pow(i, m) - Rational(1) / detail::int_pow(j, m));
        }
    }
    out += ZetaPoly(sign * 6 * pair_rat);
    out += ZetaPoly::zeta(2) * (sign * 6 * pair_z2);
    for (int l = 1; l <= m - 1; ++l) {
        Rational s = 0;
        for (int c = 1; c <= r; ++c)
            for (int j = 1; j < c; ++j)
                for (int i = 1; i < j; ++i)
                    s += Rational(1) / (detail::int_pow(i, l) * (j - i) * (c - i)) +
                         Rational(1) / (detail::int_pow(j, l) * (i - j) * (c - j)) +
                         Rational(1) / (detail::int_pow(c, l) * (j - c) * (i - c));
        out += ZetaPoly::zeta(m + 1 - l) * (Rational(6) * (l % 2 == 1 ? 1 : -1) * s);
    }
    Rational triple = 0;
    for (int c = 1; c <= r; ++c)
        for (int j = 1; j < c; ++j)
            for (int i = 1; i < j; ++i)
                triple += harmonic(i) / (detail::int_pow(i, m) * (j - i) * (c - i)) +
                          harmonic(j) / (detail::int_pow(j, m) * (i - j) * (c - j)) +
                          harmonic(c) / (detail::int_pow(c, m) * (j - c) * (i - c));
    out += ZetaPoly(sign * 6 * triple);
    return out;
}

inline ZetaPoly w_shift(int k, int r, int m) { return w_shift(WQuery(k, r, m)); }

/// S(2,r;p) / S(3,r;p): the Stirling-weighted combination of shifted W sums
/// and harmonic constants at index r-1. Returns a raw-mode poly; callers
/// canonicalize for equality decisions.
inline ZetaPoly s_closed(const SQuery& q) {
    const int r = q.r;
    const int p = q.p;
    const Rational h1 = harmonic(r - 1);
    const Rational h2 = harmonic(r - 1, 2);
    const Rational h3 = harmonic(r - 1, 3);
    ZetaPoly total;
    for (int k = 1; k <= r; ++k) {
        const Rational st(stirling1(r, k));
        const int m = p + 1 - k;
        ZetaPoly block;
        if (q.k == 2) {
            block = w_shift(3, r - 1, m);
            block -= w_shift(2, r - 1, m) * (2 * h1);
            block += ZetaPoly::zeta(m) * (h1 * h1 + h2);
        } else {
            block = w_shift(4, r - 1, m);
            block -= w_shift(3, r - 1, m) * (3 * h1);
            block += w_shift(2, r - 1, m) * (3 * (h1 * h1 + h2));
            block -= ZetaPoly::zeta(m) * (h1 * h1 * h1 + 3 * h1 * h2 + 2 * h3);
        }
        total += block * st;
    }
    const Rational scale = Rational(1) / (factorial(static_cast<std::uint64_t>(q.k)) *
                                          factorial(static_cast<std::uint64_t>(r - 1)));
    return total * scale;
}

inline ZetaPoly s_closed(int k, int r, int p) { return s_closed(SQuery(k, r, p)); }

/// Partial-fraction sum (p-1)! sum_n [n+1, p]/(n! n (n+j)) as
/// (1/j){(p-1)! zeta(p) + Y_p(j)/p - Y_{p-1}(j)/j}.
inline ZetaPoly lemma_partial_fraction(int p, int j) {
    if (p < 2) throw std::invalid_argument("lemma_partial_fraction: requires p >= 2");
    if (j < 1) throw std::invalid_argument("lemma_partial_fraction: requires j >= 1");
    const Rational constant = (bell_Y(p, j) / p - bell_Y(p - 1, j) / j) / j;
    return ZetaPoly::zeta(p) * (Rational(factorial(static_cast<std::uint64_t>(p - 1))) / j) + ZetaPoly(constant);
}

/// The three explicit partial-fraction sums, written out with literal
/// harmonic polynomials (an independent route from lemma_partial_fraction's
/// Bell recurrence):
///   1: sum H_n/(n(n+j))
///   2: sum (H_n^2 - H_n^(2))/(n(n+j))
///   3: sum (H_n^3 - 3 H_n H_n^(2) + 2 H_n^(3))/(n(n+j))
inline ZetaPoly corollary_sum(int variant, int j) {
    if (j < 1) throw std::invalid_argument("corollary_sum: requires j >= 1");
    const Rational h = harmonic(j);
    const Rational h2 = harmonic(j, 2);
    const Rational h3 = harmonic(j, 3);
    const Rational h4 = harmonic(j, 4);
    const Rational inv(1, j);
    switch (variant) {
        case 1:
            return ZetaPoly::zeta(2) * inv + ZetaPoly(inv * (h * h / 2 + h2 / 2 - h / j));
        case 2:
            return ZetaPoly::zeta(3) * (2 * inv) +
                   ZetaPoly(inv * ((h * h * h + 3 * h * h2 + 2 * h3) / 3 - (h * h + h2) / j));
        case 3:
            return ZetaPoly::zeta(4) * (6 * inv) +
                   ZetaPoly(inv * ((h * h * h * h + 8 * h * h3 + 6 * h * h * h2 + 3 * h2 * h2 + 6 * h4) / 4 -
                                   (h * h * h + 3 * h * h2 + 2 * h3) / j));
        default:
            throw std::invalid_argument("corollary_sum: variant must be 1, 2 or 3");
    }
}

/// The textbook-looking shortcut W_{3,0}(m) = m W_{2,0}(m+1)
/// - (m(m+1)/6) zeta(m+2) + zeta(2) zeta(m). Known bad: disagrees with the
/// w_base route and with direct summation; kept only as the expected-failure
/// fixture behind the erratum-w30 verification suite.
inline ZetaPoly w30_inline_variant(int m) {
    if (m < 2) throw std::invalid_argument("w30_inline_variant: requires m >= 2");
    ZetaPoly out = linear_euler_sum(m + 1) * Rational(m);
    out -= ZetaPoly::zeta(m + 2) * Rational(m * (m + 1), 6);
    out += ZetaPoly::zeta(2) * ZetaPoly::zeta(m);
    return out;
}

}  // namespace hypersum
