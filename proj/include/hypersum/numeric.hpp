#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "hypersum/rational.hpp"
#include "hypersum/sequences.hpp"
#include "hypersum/zeta_poly.hpp"

namespace hypersum {

using MpReal = boost::multiprecision::mpfr_float;

/// Guard digits carried by every high-precision computation beyond the
/// digits the caller asked for.
inline constexpr int kGuardDigits = 10;

/// Scoped override of the default construction precision (decimal digits).
/// Arithmetic on existing variables follows operand precision, so the guard
/// governs fresh temporaries created inside its scope. The setting is
/// process-wide: concurrent numeric work must share one digits setting
/// (parallel verification sweeps do; they run under a single outer guard).
class PrecisionGuard {
public:
    explicit PrecisionGuard(int digits) : saved_(MpReal::default_precision()) {
        MpReal::default_precision(static_cast<unsigned>(digits));
    }
    ~PrecisionGuard() { MpReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// A real number together with the decimal precision it claims. Results of
/// arithmetic never claim more digits than their inputs support.
struct HighPrecisionReal {
    MpReal value;
    int digits = 0;

    HighPrecisionReal() = default;
    HighPrecisionReal(MpReal v, int d) : value(std::move(v)), digits(d) {}

    std::string str() const { return value.str(static_cast<std::streamsize>(digits)); }
};

inline HighPrecisionReal hp_sub(const HighPrecisionReal& a, const HighPrecisionReal& b) {
    return {MpReal(a.value - b.value), std::min(a.digits, b.digits)};
}
inline HighPrecisionReal hp_abs(const HighPrecisionReal& a) { return {MpReal(abs(a.value)), a.digits}; }

namespace detail {

inline MpReal mp_pow10(int e) { return pow(MpReal(10), e); }

inline MpReal machin_arctan_inv(unsigned x, const MpReal& eps) {
    // arctan(1/x) by the Taylor series; alternating, so the error is below
    // the first omitted term.
    const MpReal x2 = MpReal(x) * x;
    MpReal power = MpReal(1) / x;
    MpReal total = 0;
    bool negative = false;
    for (unsigned j = 1;; j += 2) {
        const MpReal term = power / j;
        total += negative ? -term : term;
        negative = !negative;
        power /= x2;
        if (term < eps) break;
    }
    return total;
}

}  // namespace detail

/// pi by Machin's formula, 16 atan(1/5) - 4 atan(1/239). Memoized per digits.
inline HighPrecisionReal pi_numeric(int digits) {
    if (digits < 10) throw std::invalid_argument("pi_numeric: digits must be >= 10");
    static std::mutex mutex;
    static std::map<int, MpReal> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(digits);
    if (it == cache.end()) {
        PrecisionGuard guard(digits + kGuardDigits);
        const MpReal eps = detail::mp_pow10(-(digits + kGuardDigits));
        MpReal pi = 16 * detail::machin_arctan_inv(5, eps) - 4 * detail::machin_arctan_inv(239, eps);
        it = cache.emplace(digits, std::move(pi)).first;
    }
    return {it->second, digits};
}

/// zeta(s) by Euler-Maclaurin summation with the remainder controlled by the
/// first omitted correction term. Exact Bernoulli numbers feed the
/// corrections. Memoized per (s, digits).
inline HighPrecisionReal zeta_numeric(int s, int digits) {
    if (s < 2) throw std::invalid_argument("zeta_numeric: requires s >= 2");
    if (digits < 10) throw std::invalid_argument("zeta_numeric: digits must be >= 10");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, MpReal> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find({s, digits});
    if (it == cache.end()) {
        PrecisionGuard guard(digits + kGuardDigits);
        // Split point: correction terms decay like ((2k)/(2 pi M))^{2k}, so
        // M proportional to the digit target reaches eps before divergence.
        const int split = std::max(18, static_cast<int>(std::ceil(0.4 * (digits + kGuardDigits))) + 8);
        const MpReal eps = detail::mp_pow10(-(digits + kGuardDigits + 2));
        MpReal total = 0;
        for (int n = 1; n < split; ++n) total += 1 / pow(MpReal(n), s);
        const MpReal msp = pow(MpReal(split), -s);
        total += msp / 2;
        total += pow(MpReal(split), 1 - s) / (s - 1);
        Integer pochhammer = s;  // (s)_{2k-1}
        for (int k = 1; k <= 4 * split; ++k) {
            const Rational factor = bernoulli(static_cast<std::uint64_t>(2 * k)) /
                                    Rational(factorial(static_cast<std::uint64_t>(2 * k)));
            const MpReal term = MpReal(factor) * MpReal(pochhammer) * pow(MpReal(split), 1 - s - 2 * k);
            total += term;
            if (abs(term) < eps) break;
            pochhammer *= (s + 2 * k - 1) * (s + 2 * k);
        }
        it = cache.emplace(std::make_pair(s, digits), std::move(total)).first;
    }
    return {it->second, digits};
}

/// Numeric value of a ZetaPoly; error bounded by 10^(-digits+guard) with the
/// guard documented in kGuardDigits.
inline HighPrecisionReal zp_eval(const ZetaPoly& poly, int digits) {
    if (digits < 10) throw std::invalid_argument("zp_eval: digits must be >= 10");
    PrecisionGuard guard(digits + kGuardDigits);
    MpReal total = 0;
    for (const auto& [mono, coeff] : poly.terms()) {
        MpReal term(coeff);
        if (mono.pi2_power > 0) term *= pow(pi_numeric(digits).value, 2 * mono.pi2_power);
        for (int arg : mono.args) term *= zeta_numeric(arg, digits).value;
        total += term;
    }
    return {std::move(total), digits};
}

/// Raised when a series specification violates its convergence condition.
struct DivergentSeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

/// One of the summable series families. Parameters follow the owning
/// closed-form's conventions.
struct SeriesSpec {
    enum class Family { S, W, Linear, Lemma, Corollary, Mzv };

    Family family;
    int a = 0;
    int b = 0;
    int c = 0;

    static SeriesSpec s_sum(int k, int m, int p) {
        if (k < 2 || k > 3) throw std::invalid_argument("S family: k must be 2 or 3");
        if (m < 1) throw std::invalid_argument("S family: m must be positive");
        if (p <= m) throw DivergentSeriesError("S family diverges: requires p >= m+1");
        return {Family::S, k, m, p};
    }
    static SeriesSpec w_sum(int k, int r, int m) {
        if (k < 1 || k > 4) throw std::invalid_argument("W family: k must be in 1..4");
        if (r < 0) throw std::invalid_argument("W family: r must be non-negative");
        if (m < 2) throw DivergentSeriesError("W family diverges: requires m >= 2");
        return {Family::W, k, r, m};
    }
    static SeriesSpec linear(int q) {
        if (q < 2) throw DivergentSeriesError("linear family diverges: requires q >= 2");
        return {Family::Linear, q, 0, 0};
    }
    static SeriesSpec lemma(int p, int j) {
        if (p < 2) throw std::invalid_argument("lemma family: requires p >= 2");
        if (j < 1) throw std::invalid_argument("lemma family: requires j >= 1");
        return {Family::Lemma, p, j, 0};
    }
    static SeriesSpec corollary(int v, int j) {
        if (v < 1 || v > 3) throw std::invalid_argument("corollary family: variant must be 1..3");
        if (j < 1) throw std::invalid_argument("corollary family: requires j >= 1");
        return {Family::Corollary, v, j, 0};
    }
    static SeriesSpec mzv(int s, int t) {
        if (s < 2) throw DivergentSeriesError("mzv family diverges: requires s >= 2");
        if (t < 0) throw std::invalid_argument("mzv family: t must be non-negative");
        return {Family::Mzv, s, t, 0};
    }

    /// Known log-degree of the term asymptotics.
    int log_degree() const {
        switch (family) {
            case Family::S: return a;
            case Family::W: return a - 1;
            case Family::Linear: return 1;
            case Family::Lemma: return a - 1;
            case Family::Corollary: return a;
            case Family::Mzv: return b;
        }
        return 0;
    }
    /// Known power decay of the term (term ~ log^d(n) / n^decay).
    int decay() const {
        switch (family) {
            case Family::S: return c - b + 1;
            case Family::W: return c;
            case Family::Linear: return a;
            case Family::Lemma: return 2;
            case Family::Corollary: return 2;
            case Family::Mzv: return a;
        }
        return 2;
    }

    std::string str() const {
        switch (family) {
            case Family::S: return "S(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + ")";
            case Family::W: return "W(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + ")";
            case Family::Linear: return "linear(" + std::to_string(a) + ")";
            case Family::Lemma: return "lemma(" + std::to_string(a) + "," + std::to_string(b) + ")";
            case Family::Corollary: return "corollary(" + std::to_string(a) + "," + std::to_string(b) + ")";
            case Family::Mzv: return "mzv(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        return "?";
    }
};

namespace detail {

/// Neumaier-compensated accumulator; keeps the running harmonic chains and
/// partial sums at machine accuracy over tens of millions of additions.
struct Compensated {
    double sum = 0;
    double carry = 0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

/// Produces the terms of a series family in order n = 1, 2, 3, ...
class TermStream {
public:
    explicit TermStream(const SeriesSpec& spec) : spec_(spec) {
        switch (spec.family) {
            case SeriesSpec::Family::S: {
                chains_.resize(5);
                chains_[0].add(1.0);
                for (int u = 1; u <= spec.b - 1; ++u) advance_power_chains(u, 4);
                for (int j = 1; j <= 4; ++j)
                    offsets_[static_cast<std::size_t>(j)] =
                        static_cast<double>(Rational(harmonic(spec.b - 1, j)));
                binom_ = static_cast<double>(spec.b);  // C(m, m-1)
                break;
            }
            case SeriesSpec::Family::W: {
                chains_.resize(static_cast<std::size_t>(spec.a));
                for (int u = 1; u <= spec.b; ++u) advance_ones_chains(u);
                break;
            }
            case SeriesSpec::Family::Linear:
            case SeriesSpec::Family::Corollary:
                chains_.resize(4);
                break;
            case SeriesSpec::Family::Lemma:
                chains_.resize(static_cast<std::size_t>(spec.a));
                break;
            case SeriesSpec::Family::Mzv:
                chains_.resize(static_cast<std::size_t>(spec.b) + 1);
                break;
        }
    }

    double next() {
        ++n_;
        const double n = static_cast<double>(n_);
        switch (spec_.family) {
            case SeriesSpec::Family::S: {
                const int m = spec_.b;
                advance_power_chains(n_ + m - 1, 4);
                if (n_ > 1) binom_ *= (n - 1 + m) / n;  // C(n+m-1, m-1)
                const double a = chains_[1].value() - offsets_[1];
                const double b = chains_[2].value() - offsets_[2];
                const double c = chains_[3].value() - offsets_[3];
                const double h = (spec_.a == 2) ? binom_ * (a * a - b) / 2
                                                : binom_ * (a * a * a + 2 * c - 3 * a * b) / 6;
                return h / std::pow(n, spec_.c);
            }
            case SeriesSpec::Family::W: {
                advance_ones_chains(n_ + spec_.b);
                const double h = (spec_.a == 1) ? 1.0 : chains_[static_cast<std::size_t>(spec_.a - 1)].value();
                return factorial_[static_cast<std::size_t>(spec_.a - 1)] * h / std::pow(n, spec_.c);
            }
            case SeriesSpec::Family::Linear: {
                advance_power_chains(n_, 1);
                return chains_[1].value() / std::pow(n, spec_.a);
            }
            case SeriesSpec::Family::Lemma: {
                advance_ones_chains(n_);
                const double h = (spec_.a == 1) ? 1.0 : chains_[static_cast<std::size_t>(spec_.a - 1)].value();
                return factorial_[static_cast<std::size_t>(spec_.a - 1)] * h / (n * (n + spec_.b));
            }
            case SeriesSpec::Family::Corollary: {
                advance_power_chains(n_, 3);
                const double h1 = chains_[1].value();
                double numerator = h1;
                if (spec_.a == 2) numerator = h1 * h1 - chains_[2].value();
                if (spec_.a == 3) numerator = h1 * h1 * h1 - 3 * h1 * chains_[2].value() + 2 * chains_[3].value();
                return numerator / (n * (n + spec_.b));
            }
            case SeriesSpec::Family::Mzv: {
                // needs H_{n-1}^{({1}^t)}: read the chain before updating
                const double h = (spec_.b == 0) ? 1.0 : chains_[static_cast<std::size_t>(spec_.b)].value();
                advance_ones_chains(n_);
                return h / std::pow(n, spec_.a);
            }
        }
        return 0;
    }

private:
    // chains_[r] = H_u^{({1}^r)} for the ones families (chains_[0] unused,
    // the empty composition is the constant 1)...
    void advance_ones_chains(std::int64_t u) {
        const double inv = 1.0 / static_cast<double>(u);
        for (std::size_t r = chains_.size(); r-- > 1;) {
            const double lower = (r == 1) ? 1.0 : chains_[r - 1].value();
            chains_[r].add(lower * inv);
        }
    }
    // ...or power sums H_u^(j) for the polynomial families (chains_[j], j>=1).
    void advance_power_chains(std::int64_t u, int maxj) {
        const double inv = 1.0 / static_cast<double>(u);
        double p = 1.0;
        for (int j = 1; j <= maxj; ++j) {
            p *= inv;
            chains_[static_cast<std::size_t>(j)].add(p);
        }
    }
    static constexpr double factorial_[5] = {1, 1, 2, 6, 24};
    SeriesSpec spec_;
    std::int64_t n_ = 0;
    std::vector<Compensated> chains_;
    double offsets_[5] = {0, 0, 0, 0, 0};
    double binom_ = 1.0;
};

/// J_i = int_N^inf log^i(x) x^{-beta-1} dx, by the downward recurrence
/// J_i = log^i(N)/(beta N^beta) + (i/beta) J_{i-1}.
inline double log_power_integral(int i, double n, int beta) {
    const double base = 1.0 / (beta * std::pow(n, beta));
    double j = base;
    for (int q = 1; q <= i; ++q) j = std::pow(std::log(n), q) * base + (static_cast<double>(q) / beta) * j;
    return j;
}

/// Upper bound on the tail sum_{n>N} t(n) from the integral comparison of a
/// per-family decreasing envelope t(n) <= pref (log n + shift)^d / n^decay.
inline double tail_envelope(const SeriesSpec& spec, double n) {
    const int d = spec.log_degree();
    const int beta = spec.decay() - 1;
    double pref = 1.0;
    double shift = 1.0;
    switch (spec.family) {
        case SeriesSpec::Family::S: {
            const int m = spec.b;
            const int k = spec.a;
            pref = 1.0;
            for (int i = 1; i <= m - 1; ++i) pref *= (1.0 + std::max(0, m - 2) / n) / i;
            for (int i = 2; i <= k; ++i) pref /= i;
            break;
        }
        case SeriesSpec::Family::W:
            shift = 1.0 + std::log1p(static_cast<double>(spec.b) / n);
            break;
        case SeriesSpec::Family::Mzv:
            for (int i = 2; i <= spec.b; ++i) pref /= i;
            break;
        case SeriesSpec::Family::Corollary:
            shift = 2.0;  // absorbs the bounded H^(2), H^(3) contributions
            break;
        case SeriesSpec::Family::Linear:
        case SeriesSpec::Family::Lemma:
            break;
    }
    double total = 0;
    double shift_pow = 1.0;
    std::vector<double> binom_row(static_cast<std::size_t>(d) + 1, 1.0);
    for (int i = 1; i <= d; ++i)
        binom_row[static_cast<std::size_t>(i)] =
            binom_row[static_cast<std::size_t>(i - 1)] * (d - i + 1) / i;
    for (int i = d; i >= 0; --i) {
        total += binom_row[static_cast<std::size_t>(i)] * shift_pow * log_power_integral(i, n, beta);
        shift_pow *= shift;
    }
    return pref * total;
}

/// Weights of the dyadic annihilation operator prod_{l}(E - 2^l)^{d+1},
/// normalized so they sum to one. Index i applies to the sample i halvings
/// below the top cutoff.
inline std::vector<double> annihilation_weights(int delta, int d, int tail_orders) {
    std::vector<Rational> poly{Rational(1)};
    for (int l = delta; l < delta + tail_orders; ++l) {
        const Integer root_int = pow(Integer(2), static_cast<unsigned>(l));
        const Rational root(root_int);
        for (int rep = 0; rep <= d; ++rep) {
            std::vector<Rational> next(poly.size() + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * root;
            }
            poly = std::move(next);
        }
    }
    Rational total = 0;
    for (const auto& c : poly) total += c;
    std::vector<double> weights(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) weights[i] = static_cast<double>(Rational(poly[i] / total));
    return weights;
}

}  // namespace detail

/// Result of a numeric series evaluation: the (possibly extrapolated) value
/// and a conservative absolute error bound.
struct SumResult {
    HighPrecisionReal value;
    HighPrecisionReal bound;
    double raw_partial = 0;
    std::int64_t terms_used = 0;
};

/// Sums the family to (almost) the requested cutoff, sampling partial sums
/// on an exact dyadic grid and annihilating the known tail model
/// N^{-l} P_l(log N). The reported bound is 2x the integral envelope at the
/// top sample (1x when no extrapolation ran), which is sound because the
/// extrapolated value is clamped back to the raw partial sum whenever the
/// two drift apart by more than the envelope.
inline SumResult sum_series(const SeriesSpec& spec, std::int64_t terms = 100000, int digits = 30,
                            int extrap_order = 6) {
    if (terms < 100) throw std::invalid_argument("sum_series: terms must be >= 100");
    if (digits < 10) throw std::invalid_argument("sum_series: digits must be >= 10");
    const int d = spec.log_degree();
    const int delta = spec.decay() - 1;

    int samples_log2 = 0;
    for (std::int64_t t = terms; t >= 2048; t >>= 1) ++samples_log2;
    samples_log2 = std::min(samples_log2, 11);
    const int tail_orders = std::min(2, std::min(extrap_order, samples_log2) / (d + 1));
    const int k_used = samples_log2;
    const std::int64_t base = std::max<std::int64_t>(1, terms >> k_used);
    const std::int64_t top = base << k_used;

    detail::TermStream stream(spec);
    detail::Compensated partial;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(k_used) + 1);
    std::int64_t next_sample = base;
    for (std::int64_t n = 1; n <= top; ++n) {
        partial.add(stream.next());
        if (n == next_sample) {
            samples.push_back(partial.value());
            next_sample <<= 1;
        }
    }
    const double raw = partial.value();
    const double envelope = detail::tail_envelope(spec, static_cast<double>(top));

    double value = raw;
    if (tail_orders >= 1) {
        const auto weights = detail::annihilation_weights(delta, d, tail_orders);
        double extrapolated = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            extrapolated += weights[i] * samples[samples.size() - 1 - i];
        if (std::abs(extrapolated - raw) <= envelope) value = extrapolated;
    }
    // |value - S_inf| <= |value - raw| + tail <= 2 envelope, whether or not
    // the extrapolation was accepted. The fixed 2x keeps the bound monotone
    // under cutoff doubling; the 1e-12 floor covers double round-off in the
    // term stream and is constant in the cutoff for the same reason.
    const double bound = std::max(2 * envelope, 1e-12);

    PrecisionGuard guard(digits + kGuardDigits);
    const int value_digits = std::min(digits, 15);
    return {HighPrecisionReal{MpReal(value), value_digits}, HighPrecisionReal{MpReal(bound), value_digits}, raw, top};
}

/// Partial multiple-harmonic value H_N^(s, {1}^t) with the crude integral
/// tail bound; a sanity oracle rather than a precision instrument.
inline SumResult mzv_numeric(int s, int t, int digits = 30, std::int64_t terms = 100000) {
    if (terms < 100) throw std::invalid_argument("mzv_numeric: terms must be >= 100");
    return sum_series(SeriesSpec::mzv(s, t), terms, digits, /*extrap_order=*/0);
}

/// Outcome of one symbolic-vs-numeric identity check.
struct VerificationReport {
    std::string spec_name;
    HighPrecisionReal symbolic;
    HighPrecisionReal numeric;
    HighPrecisionReal error_estimate;
    HighPrecisionReal tolerance;
    bool passed = false;

    /// The comparison bound actually applied: max(tolerance, error_estimate).
    MpReal effective_bound() const {
        return tolerance.value > error_estimate.value ? tolerance.value : error_estimate.value;
    }
};

/// Evaluates both sides and fills a report; mismatches are reported, never
/// thrown.
inline VerificationReport verify(const ZetaPoly& closed, const SeriesSpec& spec, int digits,
                                 const MpReal& tolerance, std::int64_t terms = 100000, int extrap_order = 6) {
    PrecisionGuard guard(digits + kGuardDigits);
    VerificationReport report;
    report.spec_name = spec.str();
    report.symbolic = zp_eval(closed, digits);
    const SumResult numeric = sum_series(spec, terms, digits, extrap_order);
    report.numeric = numeric.value;
    report.error_estimate = numeric.bound;
    report.tolerance = {tolerance, digits};
    const MpReal gap = abs(report.symbolic.value - report.numeric.value);
    report.passed = gap <= report.effective_bound();
    return report;
}

}  // namespace hypersum
