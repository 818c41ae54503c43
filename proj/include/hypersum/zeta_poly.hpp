#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersum/rational.hpp"

namespace hypersum {

enum class ZetaMode { raw, canonical };

/// A product of zeta symbols. In raw mode pi2_power is always zero and args
/// is a sorted multiset of integers >= 2. In canonical mode args holds only
/// odd integers >= 3 and pi2_power counts factors of pi^2. The empty
/// monomial is the rational constant.
struct ZetaMonomial {
    int pi2_power = 0;
    std::vector<int> args;

    ZetaMonomial() = default;
    ZetaMonomial(int pi2, std::vector<int> a) : pi2_power(pi2), args(std::move(a)) {
        std::sort(args.begin(), args.end());
    }

    static ZetaMonomial one() { return {}; }
    static ZetaMonomial zeta(int s) {
        if (s < 2) throw std::invalid_argument("zeta symbol requires argument >= 2");
        return ZetaMonomial(0, {s});
    }

    int weight() const { return 2 * pi2_power + std::accumulate(args.begin(), args.end(), 0); }
    bool empty() const { return pi2_power == 0 && args.empty(); }

    ZetaMonomial operator*(const ZetaMonomial& other) const {
        ZetaMonomial out(pi2_power + other.pi2_power, args);
        out.args.insert(out.args.end(), other.args.begin(), other.args.end());
        std::sort(out.args.begin(), out.args.end());
        return out;
    }

    friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;

    /// Deterministic term order: by (weight, pi2_power, lexicographic args).
    friend std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        if (auto c = a.pi2_power <=> b.pi2_power; c != 0) return c;
        return a.args <=> b.args;
    }
};

/// Element of the free commutative algebra over the rationals generated by
/// zeta symbols (raw mode), or of its quotient with each zeta(2k) rewritten
/// as a rational multiple of (pi^2)^k (canonical mode). Immutable value
/// semantics; no stored zero coefficients.
class ZetaPoly {
public:
    ZetaPoly() = default;
    explicit ZetaPoly(ZetaMode mode) : mode_(mode) {}
    /*implicit*/ ZetaPoly(const Rational& constant) { insert(ZetaMonomial::one(), constant); }
    /*implicit*/ ZetaPoly(int constant) : ZetaPoly(Rational(constant)) {}

    static ZetaPoly zeta(int s) {
        ZetaPoly p;
        p.insert(ZetaMonomial::zeta(s), Rational(1));
        return p;
    }
    static ZetaPoly term(ZetaMonomial m, const Rational& coeff, ZetaMode mode = ZetaMode::raw) {
        ZetaPoly p(mode);
        p.insert(std::move(m), coeff);
        return p;
    }

    ZetaMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ZetaMonomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const ZetaMonomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Largest monomial weight present (0 for the zero or constant poly).
    int max_weight() const {
        int w = 0;
        for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
        return w;
    }

    ZetaPoly operator+(const ZetaPoly& other) const {
        check_mode(other);
        ZetaPoly out = *this;
        for (const auto& [m, c] : other.terms_) out.insert(m, c);
        return out;
    }
    ZetaPoly operator-(const ZetaPoly& other) const {
        check_mode(other);
        ZetaPoly out = *this;
        for (const auto& [m, c] : other.terms_) out.insert(m, -c);
        return out;
    }
    ZetaPoly operator-() const {
        ZetaPoly out(mode_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    ZetaPoly operator*(const ZetaPoly& other) const {
        check_mode(other);
        ZetaPoly out(mode_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : other.terms_) out.insert(m1 * m2, c1 * c2);
        return out;
    }
    ZetaPoly operator*(const Rational& s) const {
        ZetaPoly out(mode_);
        if (s == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
        return out;
    }
    friend ZetaPoly operator*(const Rational& s, const ZetaPoly& p) { return p * s; }

    ZetaPoly& operator+=(const ZetaPoly& other) { return *this = *this + other; }
    ZetaPoly& operator-=(const ZetaPoly& other) { return *this = *this - other; }

    friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) {
        return a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }

private:
    void check_mode(const ZetaPoly& other) const {
        if (mode_ != other.mode_) throw std::invalid_argument("ZetaPoly: mode mismatch (raw vs canonical)");
    }
    void insert(ZetaMonomial m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(std::move(m), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ZetaMode mode_ = ZetaMode::raw;
    std::map<ZetaMonomial, Rational> terms_;
};

inline ZetaPoly zp_add(const ZetaPoly& a, const ZetaPoly& b) { return a + b; }
inline ZetaPoly zp_mul(const ZetaPoly& a, const ZetaPoly& b) { return a * b; }

/// zeta(2k) = r_k (pi^2)^k with r_k = (-1)^{k+1} B_{2k} 2^{2k} / (2 (2k)!).
inline Rational zeta_even_pi_ratio(int k) {
    const Integer two_pow = pow(Integer(2), static_cast<unsigned>(2 * k));
    const Rational r = bernoulli(static_cast<std::uint64_t>(2 * k)) * Rational(two_pow) /
                       (2 * Rational(factorial(static_cast<std::uint64_t>(2 * k))));
    return (k % 2 == 1) ? r : -r;
}

/// Rewrites every even zeta argument into powers of pi^2; odd arguments pass
/// through. Idempotent on canonical input by construction of the modes.
inline ZetaPoly zp_canonicalize(const ZetaPoly& a) {
    if (a.mode() == ZetaMode::canonical) return a;
    ZetaPoly out(ZetaMode::canonical);
    for (const auto& [m, c] : a.terms()) {
        Rational coeff = c;
        int pi2 = m.pi2_power;
        std::vector<int> odds;
        for (int arg : m.args) {
            if (arg % 2 == 0) {
                coeff *= zeta_even_pi_ratio(arg / 2);
                pi2 += arg / 2;
            } else {
                odds.push_back(arg);
            }
        }
        out += ZetaPoly::term(ZetaMonomial(pi2, std::move(odds)), coeff, ZetaMode::canonical);
    }
    return out;
}

namespace detail {

inline void render_coeff_latex(std::ostringstream& os, const Rational& c, bool leading, bool lone) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (leading) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    if (mag != 1 || lone) os << mag.str();
}

inline void render_monomial_latex(std::ostringstream& os, const ZetaMonomial& m) {
    if (m.pi2_power > 0) os << "\\pi^{" << 2 * m.pi2_power << "}";
    for (std::size_t i = 0; i < m.args.size();) {
        std::size_t j = i;
        while (j < m.args.size() && m.args[j] == m.args[i]) ++j;
        os << "\\zeta(" << m.args[i] << ")";
        if (j - i > 1) os << "^{" << (j - i) << "}";
        i = j;
    }
}

inline void render_monomial_plain(std::ostringstream& os, const ZetaMonomial& m) {
    bool first = true;
    if (m.pi2_power > 0) {
        os << "pi^" << 2 * m.pi2_power;
        first = false;
    }
    for (std::size_t i = 0; i < m.args.size();) {
        std::size_t j = i;
        while (j < m.args.size() && m.args[j] == m.args[i]) ++j;
        if (!first) os << "*";
        os << "zeta(" << m.args[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
}

}  // namespace detail

/// Deterministic LaTeX rendering; terms in (weight, lex) order, coefficients
/// as "p/q".
inline std::string render_latex(const ZetaPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [m, c] : p.terms()) {
        detail::render_coeff_latex(os, c, leading, m.empty());
        detail::render_monomial_latex(os, m);
        leading = false;
    }
    return os.str();
}

/// ASCII rendering in the same order ("4*zeta(5) - 2*zeta(2)*zeta(3) + ...").
inline std::string render_plain(const ZetaPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (leading) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mag != 1 || m.empty()) {
            os << mag.str();
            if (!m.empty()) os << "*";
        }
        detail::render_monomial_plain(os, m);
        leading = false;
    }
    return os.str();
}

}  // namespace hypersum
