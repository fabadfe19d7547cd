#include "doctest.h"
#include "secantry/arith.hpp"
#include "secantry/ramify.hpp"

using namespace secantry;

TEST_CASE("power_bound worked example") {
    const SchubertIndex alpha({0, 0, 1, 2}, 6);
    auto b = power_bound(3, alpha, 3);
    CHECK(b.m == 2);
    CHECK(b.rho_adjusted == 0);
    CHECK(b.threshold == 14);  // 18 - 0 - 3 - floor(3/2)

    SUBCASE("n=3 and n=4 share m; threshold grows by d") {
        auto b4 = power_bound(3, alpha, 4);
        CHECK(b4.m == 2);
        CHECK(b4.threshold == b.threshold + 6);
    }
}

TEST_CASE("power_bound rejects n < 3") {
    const SchubertIndex alpha({0, 0}, 4);
    CHECK_THROWS_AS(power_bound(2, alpha, 2), PreconditionError);
    CHECK_THROWS_AS(power_bound(2, alpha, 1), PreconditionError);
}

TEST_CASE("power_bound at genus zero drops the genus terms") {
    for (long long d = 2; d <= 8; ++d) {
        for (long long n = 3; n <= 5; ++n) {
            const SchubertIndex alpha({1, d - 1}, d);  // some type (1, d) index
            auto b = power_bound(0, alpha, n);
            CHECK(b.threshold == n * d - (rho(0, 1, d) - alpha.sum()));
        }
    }
}

TEST_CASE("m = floor((n+1)/2) pairing") {
    for (long long n = 3; n <= 100; ++n) {
        const SchubertIndex alpha({0, 0}, 4);
        CHECK(power_bound(5, alpha, n).m == (n + 1) / 2);
    }
    const SchubertIndex alpha({0, 0}, 4);
    CHECK(power_bound(5, alpha, 3).m == power_bound(5, alpha, 4).m);
    CHECK(power_bound(5, alpha, 5).m == power_bound(5, alpha, 6).m);
    CHECK(power_bound(5, alpha, 5).m == 3);
}

TEST_CASE("square_bound sharp instance") {
    auto b = square_bound(3, SchubertIndex({0, 0, 1, 2}, 6));
    CHECK(b.rho_adjusted == 0);
    CHECK(b.threshold == 10);
    // the threshold meets the outright ceiling: sharp
    CHECK(b.threshold == riemann_roch_ceiling(2, 6, 3));
}

TEST_CASE("square_bound branch comparison at rho_adjusted = 0") {
    // r = 0 with alpha = (d) pins rho_adjusted to 0 for every genus
    const long long d = 5;
    for (long long g = 0; g <= 1000; ++g) {
        auto b = square_bound(g, SchubertIndex({d}, d));
        REQUIRE(b.rho_adjusted == 0);
        const long long first = 2 * d + 2 - 2 * g + floor_div(g - 1, 2);
        const long long second = 2 * d + 2 - 2 * g + 2 * (g / 3);
        CHECK(b.threshold == std::max(first, second));
        CHECK((second >= first) == (2 * (g / 3) >= floor_div(g - 1, 2)));
    }
}

TEST_CASE("square_bound at genus zero") {
    // rational normal curve: r = d forces alpha = 0 and rho_adjusted = 0,
    // and both branches collapse so that T = 2d+2
    for (long long d = 1; d <= 6; ++d) {
        auto b = square_bound(0, SchubertIndex::zero(d, d));
        CHECK(b.rho_adjusted == 0);
        CHECK(b.threshold == 2 * d + 2);
    }
}

TEST_CASE("riemann_roch_ceiling") {
    CHECK(riemann_roch_ceiling(2, 6, 3) == 10);
    CHECK(riemann_roch_ceiling(3, 6, 3) == 16);  // exceeds the power threshold 14
    CHECK(riemann_roch_ceiling(1, 4, 5) == 0);   // theta-divisor boundary d = g-1
}

TEST_CASE("dn_theta_coefficient") {
    CHECK(dn_theta_coefficient(1) == 1);
    CHECK(dn_theta_coefficient(2) == 4);
    CHECK(dn_theta_coefficient(7) == 49);
    CHECK_THROWS_AS(dn_theta_coefficient(0), PreconditionError);
}
