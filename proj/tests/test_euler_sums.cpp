#include <array>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "hypersum/euler_sums.hpp"
#include "hypersum/numeric.hpp"

using namespace hypersum;

TEST_CASE("linear Euler sums", "[euler]") {
    CHECK(linear_euler_sum(2) == ZetaPoly::zeta(3) * Rational(2));
    CHECK(linear_euler_sum(3) ==
          ZetaPoly::zeta(4) * Rational(5, 2) - ZetaPoly::zeta(2) * ZetaPoly::zeta(2) * Rational(1, 2));
    CHECK(linear_euler_sum(4) == ZetaPoly::zeta(5) * Rational(3) - ZetaPoly::zeta(2) * ZetaPoly::zeta(3));
    CHECK_THROWS_AS(linear_euler_sum(1), std::invalid_argument);
}

TEST_CASE("w_base", "[euler]") {
    CHECK(w_base(1, 7) == ZetaPoly::zeta(7));
    for (int m = 2; m <= 8; ++m) CHECK(zp_canonicalize(w_base(2, m)) == zp_canonicalize(linear_euler_sum(m)));
    const ZetaPoly w33 = w_base(3, 3);
    CHECK(w33 == ZetaPoly::zeta(5) * Rational(8) - ZetaPoly::zeta(2) * ZetaPoly::zeta(3) * Rational(4));
    {
        PrecisionGuard guard(45);
        const MpReal reference("0.386204639957774937862582125715771056128");
        CHECK(abs(zp_eval(w33, 20).value - reference) < MpReal(1e-18));
    }
    CHECK_THROWS_AS(w_base(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(w_base(2, 1), std::invalid_argument);
}

TEST_CASE("w_shift examples", "[euler]") {
    CHECK(w_shift(2, 0, 5) == w_base(2, 5));
    CHECK(w_shift(3, 0, 4) == w_base(3, 4));
    CHECK(w_shift(4, 0, 3) == w_base(4, 3));

    CHECK(w_shift(2, 1, 2) == ZetaPoly::zeta(3) * Rational(2) + ZetaPoly::zeta(2) + ZetaPoly(Rational(-1)));

    const ZetaPoly w312 = w_shift(3, 1, 2);
    const ZetaPoly expected = ZetaPoly::zeta(4) * Rational(5) -
                              ZetaPoly::zeta(2) * ZetaPoly::zeta(2) + ZetaPoly::zeta(3) * Rational(4) -
                              ZetaPoly::zeta(2) * Rational(2);
    CHECK(w312 == expected);
    {
        PrecisionGuard guard(45);
        const MpReal reference("4.224167563219769747444131554106669341559");
        CHECK(abs(zp_eval(w312, 20).value - reference) < MpReal(1e-18));
    }

    CHECK_THROWS_AS(w_shift(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(WQuery(2, 1, 1), std::invalid_argument);
}

TEST_CASE("harmonic shift identities", "[euler]") {
    // the two expansion identities behind w_shift, re-derived exactly at
    // random (n, r)
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> pick(1, 20);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = pick(rng);
        const int r = pick(rng);
        const Rational h1 = harmonic(n), h2 = harmonic(n, 2), h3 = harmonic(n, 3);
        const Rational a1 = harmonic(n + r), a2 = harmonic(n + r, 2), a3 = harmonic(n + r, 3);
        Rational single = 0;
        for (int j = 1; j <= r; ++j) single += Rational(1, n + j);
        Rational pairs = 0;
        for (int j = 1; j <= r; ++j)
            for (int i = 1; i < j; ++i) pairs += Rational(1, (n + i)) * Rational(1, (n + j));
        Rational triples = 0;
        for (int k = 1; k <= r; ++k)
            for (int j = 1; j < k; ++j)
                for (int i = 1; i < j; ++i)
                    triples += Rational(1, n + i) * Rational(1, n + j) * Rational(1, n + k);

        CHECK(a1 * a1 - a2 == h1 * h1 - h2 + 2 * h1 * single + 2 * pairs);
        CHECK(a1 * a1 * a1 - 3 * a1 * a2 + 2 * a3 ==
              h1 * h1 * h1 - 3 * h1 * h2 + 2 * h3 + 3 * (h1 * h1 - h2) * single + 6 * h1 * pairs + 6 * triples);
    }
}

TEST_CASE("s_closed reductions at r = 1", "[euler]") {
    for (int p = 2; p <= 6; ++p) {
        CHECK(s_closed(2, 1, p) == w_base(3, p) * Rational(1, 2));
        CHECK(s_closed(3, 1, p) == w_base(4, p) * Rational(1, 6));
    }
}

TEST_CASE("worked example S(2,2;3)", "[euler]") {
    const ZetaPoly printed = ZetaPoly::zeta(5) * Rational(4) -
                             ZetaPoly::zeta(2) * ZetaPoly::zeta(3) * Rational(2) +
                             ZetaPoly::zeta(4) * Rational(5, 4) - ZetaPoly::zeta(3) * Rational(2) +
                             ZetaPoly::zeta(2);
    CHECK(zp_canonicalize(s_closed(2, 2, 3)) == zp_canonicalize(printed));
}

TEST_CASE("s_closed validation", "[euler]") {
    CHECK_THROWS_AS(s_closed(2, 3, 3), std::domain_error);
    CHECK_THROWS_AS(s_closed(4, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_closed(2, 0, 3), std::invalid_argument);
}

TEST_CASE("weights bookkeeping of s_closed", "[euler]") {
    for (int k = 2; k <= 3; ++k) {
        for (int r = 1; r <= 4; ++r) {
            for (int p = r + 1; p <= r + 3; ++p) {
                const ZetaPoly poly = s_closed(k, r, p);
                const int top = p + k;
                bool top_seen = false;
                for (const auto& [mono, coeff] : poly.terms()) {
                    CHECK(mono.weight() <= top);
                    if (mono.weight() == top) top_seen = true;
                }
                CHECK(top_seen);
            }
        }
    }
}

TEST_CASE("partial fraction sums", "[euler]") {
    CHECK(lemma_partial_fraction(2, 1) == ZetaPoly::zeta(2));
    CHECK(lemma_partial_fraction(2, 2) == ZetaPoly::zeta(2) * Rational(1, 2) + ZetaPoly(Rational(1, 2)));
    CHECK(lemma_partial_fraction(3, 1) == ZetaPoly::zeta(3) * Rational(2));
    CHECK_THROWS_AS(lemma_partial_fraction(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lemma_partial_fraction(2, 0), std::invalid_argument);

    CHECK(corollary_sum(1, 1) == ZetaPoly::zeta(2));
    CHECK(corollary_sum(2, 1) == ZetaPoly::zeta(3) * Rational(2));
    CHECK(corollary_sum(3, 1) == ZetaPoly::zeta(4) * Rational(6));
    CHECK_THROWS_AS(corollary_sum(4, 1), std::invalid_argument);
}

TEST_CASE("corollary and lemma routes agree", "[euler]") {
    for (int v = 1; v <= 3; ++v)
        for (int j = 1; j <= 10; ++j)
            CHECK(zp_canonicalize(corollary_sum(v, j)) == zp_canonicalize(lemma_partial_fraction(v + 1, j)));
}

TEST_CASE("the shortcut W_{3,0} identity really is wrong", "[euler]") {
    for (int m = 2; m <= 3; ++m) {
        const MpReal gap = abs(zp_eval(w30_inline_variant(m), 20).value - zp_eval(w_base(3, m), 20).value);
        CHECK(gap > MpReal(1e-2));
    }
}

TEST_CASE("w_shift closed forms match direct summation", "[euler]") {
    for (const auto& [k, r, m] : std::vector<std::array<int, 3>>{
             {2, 1, 2}, {2, 3, 2}, {3, 1, 2}, {3, 2, 2}, {3, 2, 4}, {4, 2, 3}, {4, 3, 2}, {4, 4, 2}}) {
        const auto numeric = sum_series(SeriesSpec::w_sum(k, r, m), 100000, 30);
        const MpReal gap = abs(zp_eval(w_shift(k, r, m), 30).value - numeric.value.value);
        INFO("W(" << k << "," << r << ";" << m << ") gap " << gap.str(3));
        CHECK(gap <= numeric.bound.value);
    }
}
