#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "hypersum/rational.hpp"

using namespace hypersum;

TEST_CASE("rationals normalize to lowest terms with positive denominator", "[rational]") {
    const Rational q(Integer(6), Integer(-4));
    CHECK(rational_num(q) == -3);
    CHECK(rational_den(q) == 2);
    CHECK(rational_to_string(q) == "-3/2");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("rational string round trip", "[rational]") {
    for (const char* text : {"-3/2", "5", "0", "22/7", "-1000000000000000000001/3"}) {
        const Rational q = rational_from_string(text);
        CHECK(rational_to_string(q) == text);
    }
    CHECK(rational_from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS(rational_from_string("abc"));
}

TEST_CASE("binomial values", "[rational]") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(6, 3) == 20);  // Pascal-triangle oracle below
}

TEST_CASE("binomial matches the Pascal triangle and row sums", "[rational]") {
    std::vector<std::vector<Integer>> pascal{{1}};
    for (int n = 1; n <= 40; ++n) {
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(1));
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)] +
                                               pascal.back()[static_cast<std::size_t>(k)];
        pascal.push_back(std::move(row));
    }
    for (int n = 0; n <= 40; ++n) {
        Integer row_sum = 0;
        for (int k = 0; k <= n; ++k) {
            const Integer b = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
            CHECK(b == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
            row_sum += b;
        }
        CHECK(row_sum == pow(Integer(2), static_cast<unsigned>(n)));
    }
}

TEST_CASE("bernoulli numbers", "[rational]") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    for (int k = 1; k <= 15; ++k) CHECK(bernoulli(static_cast<std::uint64_t>(2 * k + 1)) == 0);
    // independent oracle: sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1
    for (int n = 1; n <= 20; ++n) {
        Rational acc = 0;
        for (int k = 0; k <= n; ++k)
            acc += Rational(binomial(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(k))) *
                   bernoulli(static_cast<std::uint64_t>(k));
        CHECK(acc == 0);
    }
}

TEST_CASE("factorial", "[rational]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(21) == Integer("51090942171709440000"));
}
