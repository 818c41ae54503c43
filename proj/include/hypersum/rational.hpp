#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace hypersum {

/// Arbitrary-precision signed integer (GMP-backed).
using Integer = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator; all arithmetic is exact.
using Rational = boost::multiprecision::mpq_rational;

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

/// Serializes as "p/q", or "p" when q == 1, sign on the numerator.
inline std::string rational_to_string(const Rational& q) { return q.str(); }

/// Parses the "p/q" / "p" format produced by rational_to_string.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational_from_string: empty input");
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational_from_string: denominator must be positive");
    return Rational(num) / den;
}

inline Integer factorial(std::uint64_t n) {
    Integer f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

/// C(n, k); zero when k > n.
inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

/// n-th Bernoulli number, convention B_1 = -1/2. Memoized.
inline Rational bernoulli(std::uint64_t n) {
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    while (table.size() <= n) {
        const std::uint64_t m = table.size();
        // sum_{k<m} C(m+1,k) B_k = 0
        Rational acc = 0;
        for (std::uint64_t k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * table[k];
        table.push_back(-acc / Integer(m + 1));
    }
    return table[n];
}

}  // namespace hypersum
