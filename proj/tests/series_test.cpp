#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kvalent/series.hpp"
#include "support.hpp"

using kvalent::BigInt;
using kvalent::Series;
using kvalent::testing::make_series;
using kvalent::testing::poly_mul;
using kvalent::testing::random_series;

TEST_CASE("constant series") {
    CHECK(Series::constant(1, 3) == make_series({1, 0, 0, 0}));
    CHECK(Series::constant(0, 2) == make_series({0, 0, 0}));
    CHECK(Series::constant(7, 0) == make_series({7}));
}

TEST_CASE("addition") {
    CHECK(make_series({1, 1}) + make_series({0, 1}) == make_series({1, 2}));
    CHECK(make_series({0, 0}) + make_series({0, 0}) == make_series({0, 0}));
    CHECK(make_series({1, 2, 3}) + make_series({1, 0, -1}) == make_series({2, 2, 2}));
    CHECK_THROWS_AS(make_series({1, 1}) + make_series({1, 1, 1}), std::invalid_argument);
}

TEST_CASE("subtraction") {
    CHECK(make_series({1, 1, 1}) - make_series({1, 0, 0}) == make_series({0, 1, 1}));
    const Series a = make_series({3, -1, 4});
    CHECK((a - a).is_zero());
    // T_0 - T_{-1} = (1+z) - 1
    CHECK(make_series({1, 1, 0}) - make_series({1, 0, 0}) == make_series({0, 1, 0}));
    CHECK_THROWS_AS(make_series({1}) - make_series({1, 1}), std::invalid_argument);
}

TEST_CASE("multiplication") {
    CHECK(make_series({0, 1, 0, 0}) * make_series({0, 1, 0, 0}) ==
          make_series({0, 0, 1, 0}));
    CHECK(make_series({1, 1, 0}) * make_series({1, 1, 0}) == make_series({1, 2, 1}));
    const Series a = make_series({2, 5, -3, 7});
    CHECK(Series::constant(1, 3) * a == a);
    CHECK_THROWS_AS(make_series({1, 1}) * make_series({1}), std::invalid_argument);
}

TEST_CASE("stretch") {
    CHECK(make_series({1, 1, 0, 0, 0}).stretch(2) == make_series({1, 0, 1, 0, 0}));
    const Series a = make_series({4, 1, 1, 2});
    CHECK(a.stretch(1) == a);
    CHECK(make_series({0, 1, 2, 0, 0, 0, 0}).stretch(3) ==
          make_series({0, 0, 0, 1, 0, 0, 2}));
    CHECK_THROWS_AS(a.stretch(0), std::invalid_argument);
}

TEST_CASE("coefficient access") {
    const Series a = make_series({1, 0, 1, 1});
    CHECK(a.coefficient(2) == 1);
    CHECK(a.coefficient(0) == 1);
    CHECK_THROWS_AS(a.coefficient(4), std::out_of_range);
    CHECK_THROWS_AS(a.coefficient(-1), std::out_of_range);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const int N = 1 + static_cast<int>(rng() % 8);
        const Series a = random_series(rng, N, 6, -6);
        const Series b = random_series(rng, N, 6, -6);
        const Series c = random_series(rng, N, 6, -6);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("stretch composes multiplicatively") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const int N = 4 + static_cast<int>(rng() % 12);
        const int d1 = 1 + static_cast<int>(rng() % 3);
        const int d2 = 1 + static_cast<int>(rng() % 3);
        const Series a = random_series(rng, N, 9);
        CHECK(a.stretch(d1).stretch(d2) == a.stretch(d1 * d2));
    }
}

TEST_CASE("truncated product agrees with untruncated schoolbook product") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const int deg = static_cast<int>(rng() % 9);
        const int N = deg + static_cast<int>(rng() % 9);
        std::vector<long> pa(static_cast<std::size_t>(deg) + 1);
        std::vector<long> pb(static_cast<std::size_t>(deg) + 1);
        for (auto& v : pa) v = coeff(rng);
        for (auto& v : pb) v = coeff(rng);

        Series a(N), b(N);
        for (int i = 0; i <= deg; ++i) {
            a[static_cast<std::size_t>(i)] = pa[static_cast<std::size_t>(i)];
            b[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i)];
        }
        const Series prod = a * b;
        const std::vector<long> full = poly_mul(pa, pb);
        for (int n = 0; n <= N; ++n) {
            const long expected =
                n < static_cast<int>(full.size()) ? full[static_cast<std::size_t>(n)] : 0;
            CHECK(prod.coefficient(n) == expected);
        }
    }
}
