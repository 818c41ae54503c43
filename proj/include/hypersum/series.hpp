#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum {

/// Formal power series over a coefficient ring, truncated at a fixed order
/// (inclusive). Coefficient access beyond the order is a hard error rather
/// than an implicit zero: silent zero-padding hides truncation bugs.
///
/// The ring must be default-constructible to its zero, constructible from
/// Rational, and support +, *, ==.
template <typename Ring>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}

    explicit TruncatedSeries(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: no coefficients");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Ring& at(int i) const {
        if (i < 0 || i > order()) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
        return coeffs_[static_cast<std::size_t>(i)];
    }
    Ring& at(int i) {
        if (i < 0 || i > order()) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
        return coeffs_[static_cast<std::size_t>(i)];
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
        return order;
    }
    std::vector<Ring> coeffs_;
};

template <typename Ring>
TruncatedSeries<Ring> series_add(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries<Ring> out(n);
    for (int i = 0; i <= n; ++i) out.at(i) = a.at(i) + b.at(i);
    return out;
}

/// Cauchy product truncated at min(order a, order b).
template <typename Ring>
TruncatedSeries<Ring> series_mul(const TruncatedSeries<Ring>& a, const TruncatedSeries<Ring>& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries<Ring> out(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out.at(i + j) = out.at(i + j) + a.at(i) * b.at(j);
    return out;
}

/// exp of a series with zero constant term, by the differential recurrence
/// n e_n = sum_{j=1..n} j a_j e_{n-j}.
template <typename Ring>
TruncatedSeries<Ring> series_exp(const TruncatedSeries<Ring>& a) {
    if (!(a.at(0) == Ring())) throw std::domain_error("series_exp: nonzero constant term");
    const int n = a.order();
    TruncatedSeries<Ring> out(n);
    out.at(0) = Ring(Rational(1));
    for (int i = 1; i <= n; ++i) {
        Ring acc{};
        for (int j = 1; j <= i; ++j) acc = acc + Ring(Rational(j)) * a.at(j) * out.at(i - j);
        out.at(i) = Ring(Rational(1, i)) * acc;
    }
    return out;
}

/// log(1-x) = -sum_{n=1..N} x^n / n, exact rational coefficients.
inline TruncatedSeries<Rational> series_log_one_minus(int order) {
    if (order < 1) throw std::invalid_argument("series_log_one_minus: order must be >= 1");
    TruncatedSeries<Rational> out(order);
    for (int n = 1; n <= order; ++n) out.at(n) = Rational(-1, n);
    return out;
}

/// Bivariate formal series truncated at total degree N; coefficients stored
/// triangularly for i + j <= N.
template <typename Ring>
class BivariateSeries {
public:
    explicit BivariateSeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("BivariateSeries: negative order");
        rows_.resize(static_cast<std::size_t>(order) + 1);
        for (int i = 0; i <= order; ++i) rows_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(order - i) + 1);
    }

    int order() const { return order_; }

    const Ring& at(int i, int j) const {
        check(i, j);
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    Ring& at(int i, int j) {
        check(i, j);
        return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

private:
    void check(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_) throw std::out_of_range("BivariateSeries: index beyond truncation order");
    }
    int order_;
    std::vector<std::vector<Ring>> rows_;
};

/// exp of a bivariate series with zero constant term. Euler-operator
/// recurrence on total-degree layers: d E_d = sum_j (j A_j) E_{d-j}.
template <typename Ring>
BivariateSeries<Ring> bivariate_exp(const BivariateSeries<Ring>& a) {
    if (!(a.at(0, 0) == Ring())) throw std::domain_error("bivariate_exp: nonzero constant term");
    const int n = a.order();
    BivariateSeries<Ring> out(n);
    out.at(0, 0) = Ring(Rational(1));
    for (int d = 1; d <= n; ++d) {
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            Ring acc{};
            for (int ai = 0; ai <= i; ++ai) {
                for (int aj = 0; aj <= j; ++aj) {
                    const int deg = ai + aj;
                    if (deg == 0) continue;
                    acc = acc + Ring(Rational(deg)) * a.at(ai, aj) * out.at(i - ai, j - aj);
                }
            }
            out.at(i, j) = Ring(Rational(1, d)) * acc;
        }
    }
    return out;
}

}  // namespace hypersum
