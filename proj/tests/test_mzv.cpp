#include <catch2/catch_amalgamated.hpp>

#include "hypersum/mzv.hpp"
#include "hypersum/numeric.hpp"

using namespace hypersum;

TEST_CASE("depth-one and known reductions", "[mzv]") {
    CHECK(adz_reduce(2, 0) == ZetaPoly::zeta(2));
    for (int t = 0; t <= 8; ++t) CHECK(adz_reduce(2, t) == ZetaPoly::zeta(t + 2));
    // zeta(3,1) = (3/2) zeta(4) - (1/2) zeta(2)^2
    const ZetaPoly z31 = adz_reduce(3, 1);
    CHECK(z31.coefficient(ZetaMonomial(0, {4})) == Rational(3, 2));
    CHECK(z31.coefficient(ZetaMonomial(0, {2, 2})) == Rational(-1, 2));
    CHECK(z31.term_count() == 2);
}

TEST_CASE("index validation", "[mzv]") {
    CHECK_THROWS_AS(MzvIndex(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(MzvIndex(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(small_weight_formula(4, 1), std::invalid_argument);
}

TEST_CASE("duality", "[mzv]") {
    for (int weight = 2; weight <= 10; ++weight)
        for (int s = 2; s <= weight; ++s) CHECK(adz_reduce(s, weight - s) == adz_reduce(weight - s + 2, s - 2));
}

TEST_CASE("small-weight formulas agree with the expansion", "[mzv]") {
    for (int t = 0; t <= 8; ++t) {
        CHECK(adz_reduce(2, t) == small_weight_formula(2, t));
        CHECK(adz_reduce(3, t) == small_weight_formula(3, t));
    }
    // spot value: zeta(3,{1}^2) = 2 zeta(5) - zeta(2) zeta(3)
    const ZetaPoly z311 = small_weight_formula(3, 2);
    CHECK(z311.coefficient(ZetaMonomial(0, {5})) == 2);
    CHECK(z311.coefficient(ZetaMonomial(0, {2, 3})) == -1);
}

TEST_CASE("expansion is symmetric and homogeneous", "[mzv]") {
    // symmetry of the table in x <-> y at every order <= 12
    const auto& table = detail::adz_table(12);
    for (int i = 0; i <= 12; ++i)
        for (int j = 0; i + j <= 12; ++j) CHECK(table.at(i, j) == table.at(j, i));
    // every monomial of zeta(s, {1}^t) has weight exactly s + t
    for (int s = 2; s <= 7; ++s) {
        for (int t = 0; s + t <= 10; ++t) {
            const ZetaPoly reduced = adz_reduce(s, t);
            CHECK(!reduced.is_zero());
            for (const auto& [mono, coeff] : reduced.terms()) CHECK(mono.weight() == s + t);
        }
    }
}

TEST_CASE("numeric oracle confirms the reductions", "[mzv]") {
    {
        // zeta(2) within 1e-4 at 1e5 terms (tail ~ 1/N)
        const auto r = mzv_numeric(2, 0, 30, 100000);
        CHECK(abs(r.value.value - zeta_numeric(2, 30).value) < MpReal(1e-4));
        CHECK(r.bound.value < MpReal(1e-4));
    }
    {
        // zeta(2,1) = zeta(3)
        const auto r = mzv_numeric(2, 1, 30, 100000);
        const MpReal gap = abs(r.value.value - zeta_numeric(3, 30).value);
        CHECK(gap <= r.bound.value);
    }
    {
        // zeta(3,1) = pi^4 / 360
        const auto r = mzv_numeric(3, 1, 30, 100000);
        PrecisionGuard guard(40);
        const MpReal reference = pow(pi_numeric(30).value, 4) / 360;
        CHECK(abs(r.value.value - reference) <= r.bound.value);
    }
    for (int weight = 3; weight <= 7; ++weight) {
        for (int s = 2; s <= weight; ++s) {
            const int t = weight - s;
            const auto numeric = mzv_numeric(s, t, 30, 100000);
            const auto symbolic = zp_eval(adz_reduce(s, t), 30);
            CHECK(abs(numeric.value.value - symbolic.value) <= numeric.bound.value);
        }
    }
}
