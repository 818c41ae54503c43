#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum {

/// Index (s_1, ..., s_r) of a multiple harmonic number. The empty
/// composition is allowed; every part must be positive.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int s : parts)
            if (s < 1) throw std::invalid_argument("Composition: parts must be positive");
    }

    /// ({1}^r)
    static Composition ones(int r) {
        if (r < 0) throw std::invalid_argument("Composition::ones: negative repeat count");
        return Composition(std::vector<int>(static_cast<std::size_t>(r), 1));
    }

    int depth() const { return static_cast<int>(parts.size()); }
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Prefix cache of generalized harmonic numbers H_n^(k), one column per k.
/// Synchronized; cached and uncached paths agree by construction (the cache
/// only ever extends the defining prefix sums).
class HarmonicTable {
public:
    /// H_n^(k) = sum_{j<=n} 1/j^k, exactly; H_0^(k) = 0.
    Rational value(int n, int k) const {
        if (n < 0) throw std::invalid_argument("harmonic: negative index");
        if (k < 1) throw std::invalid_argument("harmonic: order must be positive");
        std::lock_guard lock(mutex_);
        auto& column = columns_[k];
        if (column.empty()) column.push_back(Rational(0));
        while (static_cast<int>(column.size()) <= n) {
            const int j = static_cast<int>(column.size());
            Integer jk = 1;
            for (int i = 0; i < k; ++i) jk *= j;
            column.push_back(column.back() + Rational(Integer(1), jk));
        }
        return column[static_cast<std::size_t>(n)];
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<int, std::vector<Rational>> columns_;
};

/// Process-wide harmonic cache.
inline Rational harmonic(int n, int k = 1) {
    static HarmonicTable table;
    return table.value(n, k);
}

/// Multiple harmonic number H_n^(s) over strictly decreasing index chains.
/// 1 for the empty composition, 0 when n < depth.
inline Rational multiple_harmonic(int n, const Composition& s) {
    if (n < 0) throw std::invalid_argument("multiple_harmonic: negative index");
    const int r = s.depth();
    if (r == 0) return Rational(1);
    if (n < r) return Rational(0);
    // g[j][i] = H_i^{(s_j,...,s_r)}; dynamic programming over suffix depth,
    // O(n*r) additions on prefix sums.
    std::vector<Rational> suffix(static_cast<std::size_t>(n) + 1, Rational(1));  // empty suffix
    std::vector<Rational> current(static_cast<std::size_t>(n) + 1);
    for (int j = r - 1; j >= 0; --j) {
        const int sj = s.parts[static_cast<std::size_t>(j)];
        current[0] = 0;
        for (int i = 1; i <= n; ++i) {
            Integer isj = 1;
            for (int t = 0; t < sj; ++t) isj *= i;
            current[static_cast<std::size_t>(i)] =
                current[static_cast<std::size_t>(i - 1)] + suffix[static_cast<std::size_t>(i - 1)] / isj;
        }
        std::swap(suffix, current);
    }
    return suffix[static_cast<std::size_t>(n)];
}

/// Unsigned Stirling number of the first kind by the triangular recurrence
/// [n k] = [n-1 k-1] + (n-1)[n-1 k], with [0 0] = 1 and [n 0] = [0 k] = 0
/// for n, k >= 1. Values overflow 64 bits near n = 21, hence Integer.
inline Integer stirling1(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling1: negative argument");
    if (k > n) return 0;
    static std::mutex mutex;
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const int m = static_cast<int>(rows.size());
        const auto& prev = rows.back();
        std::vector<Integer> row(static_cast<std::size_t>(m) + 1);
        for (int j = 1; j <= m; ++j) {
            Integer v = (j <= m - 1) ? prev[static_cast<std::size_t>(j)] * (m - 1) : Integer(0);
            if (j - 1 <= m - 1) v += prev[static_cast<std::size_t>(j - 1)];
            row[static_cast<std::size_t>(j)] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Complete exponential Bell polynomial evaluated on the harmonic sequence,
/// Y_k(n) = Y_k(H_n, 1! H_n^(2), 2! H_n^(3), ...), via
/// Y_{j+1} = sum_i C(j,i) x_{i+1} Y_{j-i}, Y_0 = 1.
inline Rational bell_Y(int k, int n) {
    if (k < 0) throw std::invalid_argument("bell_Y: negative order");
    if (n < 1) throw std::invalid_argument("bell_Y: index must be positive");
    std::vector<Rational> x;  // x_m = (m-1)! H_n^(m), 1-based
    x.reserve(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) x.push_back(Rational(factorial(static_cast<std::uint64_t>(m - 1))) * harmonic(n, m));
    std::vector<Rational> y{Rational(1)};
    for (int j = 0; j < k; ++j) {
        Rational acc = 0;
        for (int i = 0; i <= j; ++i)
            acc += Rational(binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(i))) *
                   x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j - i)];
        y.push_back(acc);
    }
    return y[static_cast<std::size_t>(k)];
}

}  // namespace hypersum
