#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "hypersum/series.hpp"

using namespace hypersum;

namespace {

TruncatedSeries<Rational> from_ints(std::vector<int> v) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
    return TruncatedSeries<Rational>(std::move(c));
}

TruncatedSeries<Rational> random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    TruncatedSeries<Rational> s(order);
    for (int i = 0; i <= order; ++i) s.at(i) = Rational(num(rng), den(rng));
    return s;
}

}  // namespace

TEST_CASE("series multiplication basics", "[series]") {
    const auto one_plus = from_ints({1, 1});
    const auto one_minus = from_ints({1, -1});
    const auto lifted_plus = from_ints({1, 1, 0});
    const auto lifted_minus = from_ints({1, -1, 0});
    CHECK(series_mul(lifted_plus, lifted_minus) == from_ints({1, 0, -1}));
    // truncation at the min order
    CHECK(series_mul(one_plus, lifted_minus).order() == 1);

    const auto log1m = series_log_one_minus(4);
    const auto square = series_mul(log1m, log1m);
    CHECK(square.at(3) == 1);               // 2*(1 * 1/2)
    CHECK(square.at(4) == Rational(11, 12));  // 2*(1 * 1/3) + 1/4

    // identity element
    std::mt19937 rng(7);
    const auto a = random_series(rng, 6);
    TruncatedSeries<Rational> one(6);
    one.at(0) = 1;
    CHECK(series_mul(a, one) == a);
}

TEST_CASE("series multiplication is commutative and associative", "[series]") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 20);
        const auto b = random_series(rng, 20);
        const auto c = random_series(rng, 20);
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    }
}

TEST_CASE("series exp", "[series]") {
    TruncatedSeries<Rational> zero(4);
    auto e = series_exp(zero);
    CHECK(e.at(0) == 1);
    for (int i = 1; i <= 4; ++i) CHECK(e.at(i) == 0);

    TruncatedSeries<Rational> x(3);
    x.at(1) = 1;
    e = series_exp(x);
    CHECK(e.at(0) == 1);
    CHECK(e.at(1) == 1);
    CHECK(e.at(2) == Rational(1, 2));
    CHECK(e.at(3) == Rational(1, 6));

    TruncatedSeries<Rational> bad(2);
    bad.at(0) = 1;
    CHECK_THROWS_AS(series_exp(bad), std::domain_error);
}

TEST_CASE("exp of log(1-x) recovers 1-x", "[series]") {
    for (int order = 1; order <= 50; ++order) {
        const auto e = series_exp(series_log_one_minus(order));
        REQUIRE(e.at(0) == 1);
        REQUIRE(e.at(1) == -1);
        for (int i = 2; i <= order; ++i) REQUIRE(e.at(i) == 0);
    }
}

TEST_CASE("log series shape", "[series]") {
    const auto l = series_log_one_minus(3);
    CHECK(l.at(0) == 0);
    CHECK(l.at(1) == -1);
    CHECK(l.at(2) == Rational(-1, 2));
    CHECK(l.at(3) == Rational(-1, 3));
    CHECK(series_log_one_minus(1).order() == 1);
    CHECK_THROWS_AS(series_log_one_minus(0), std::invalid_argument);
}

TEST_CASE("coefficient access beyond the order is an error", "[series]") {
    const auto l = series_log_one_minus(3);
    CHECK_THROWS_AS(l.at(4), std::out_of_range);
    CHECK_THROWS_AS(l.at(-1), std::out_of_range);
    CHECK_THROWS_AS(TruncatedSeries<Rational>(std::vector<Rational>{}), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries<Rational>(-1), std::invalid_argument);
    BivariateSeries<Rational> b(3);
    CHECK_THROWS_AS(b.at(2, 2), std::out_of_range);
    CHECK(b.at(2, 1) == 0);
}

TEST_CASE("bivariate exp matches the Taylor sum", "[series]") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    const int order = 6;
    BivariateSeries<Rational> a(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            if (i + j > 0) a.at(i, j) = Rational(num(rng), den(rng));

    const auto via_recurrence = bivariate_exp(a);

    // independent oracle: sum a^p / p!
    BivariateSeries<Rational> taylor(order);
    taylor.at(0, 0) = 1;
    BivariateSeries<Rational> power(order);
    power.at(0, 0) = 1;
    Rational fct = 1;
    for (int p = 1; p <= order; ++p) {
        BivariateSeries<Rational> next(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j)
                for (int ai = 0; ai <= i; ++ai)
                    for (int aj = 0; aj <= j; ++aj)
                        next.at(i, j) += power.at(ai, aj) * a.at(i - ai, j - aj);
        power = next;
        fct *= p;
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) taylor.at(i, j) += power.at(i, j) / fct;
    }
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) CHECK(via_recurrence.at(i, j) == taylor.at(i, j));
}
