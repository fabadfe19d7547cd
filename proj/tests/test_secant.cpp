#include "doctest.h"
#include "secantry/secant.hpp"

using namespace secantry;

TEST_CASE("SecantProblem invariants") {
    CHECK_NOTHROW(SecantProblem(8, 10, 3, 4, 2));
    CHECK_THROWS_AS(SecantProblem(8, 10, 3, 2, 2), PreconditionError);  // f = e
    CHECK_THROWS_AS(SecantProblem(8, 10, 1, 4, 2), PreconditionError);  // r-e+f < 0
    CHECK_THROWS_AS(SecantProblem(-1, 10, 3, 4, 2), PreconditionError);
}

TEST_CASE("expected_cycle_dim") {
    CHECK(expected_cycle_dim(SecantProblem(8, 10, 3, 4, 2)) == 0);
    for (long long r = 2; r <= 20; ++r) {
        // (2r-2)-secant (r-2)-planes always have expected dimension zero
        CHECK(expected_cycle_dim(SecantProblem(2 * r, 4 * r, r, 2 * r - 2, r - 1)) == 0);
    }
    for (long long e = 1; e <= 6; ++e) {
        CHECK(expected_cycle_dim(SecantProblem(4, 9, 6, e, 0)) == e);
    }
}

TEST_CASE("family_dim_bound") {
    CHECK(family_dim_bound(SecantProblem(1, 4, 3, 3, 1)) == 2);
    CHECK(family_dim_bound(SecantProblem(8, 10, 3, 4, 2)) == 4);
    for (long long e = 1; e <= 6; ++e) {
        SecantProblem p(4, 9, 6, e, 0);
        CHECK(family_dim_bound(p) == rho(4, 6, 9) + e);
    }
}

TEST_CASE("family = rho + cycle identity on a grid") {
    for (long long g = 0; g <= 12; ++g)
        for (long long d = 0; d <= 14; ++d)
            for (long long r = 0; r <= 8; ++r)
                for (long long e = 1; e <= 8; ++e)
                    for (long long f = 0; f < e; ++f) {
                        if (r - e + f < 0) continue;
                        SecantProblem p(g, d, r, e, f);
                        CHECK(family_dim_bound(p) ==
                              rho(g, r, d) + expected_cycle_dim(p));
                    }
}

TEST_CASE("verdict: elliptic quartic has no 3-secant lines") {
    auto v = secant_verdict(SecantProblem(1, 4, 3, 3, 1));
    CHECK(v.status == SecantStatus::EmptyGeneralCurve);
    // positive family bound alone does not rescue existence
    CHECK(v.expected_dim_family == 2);
}

TEST_CASE("verdict: worked existence cases") {
    SUBCASE("g=8 d=10 r=3 e=4 f=2") {
        auto v = secant_verdict(SecantProblem(8, 10, 3, 4, 2));
        CHECK(v.status == SecantStatus::ExistsExpectedDim);
        CHECK(v.expected_dim_family == 4);
        CHECK(v.expected_dim_cycle == 0);
    }
    SUBCASE("g=4 d=6 r=2 e=2 f=1") {
        auto v = secant_verdict(SecantProblem(4, 6, 2, 2, 1));
        CHECK(v.status == SecantStatus::ExistsExpectedDim);
        CHECK(expected_cycle_dim(SecantProblem(4, 6, 2, 2, 1)) == 0);
    }
}

TEST_CASE("verdict: unknown and out-of-range statuses are reachable") {
    // in range, none of the four certifying cases applies
    CHECK(secant_verdict(SecantProblem(12, 16, 5, 6, 3)).status == SecantStatus::Unknown);
    // necessary conditions hold but e > g and no counting regime
    CHECK(secant_verdict(SecantProblem(0, 5, 2, 2, 1)).status == SecantStatus::HypothesesFail);
}

TEST_CASE("verdict: counting regime fires without e <= g") {
    // degree-7 genus-3 space curves: quadrisecants exist although e=4 > g=3
    auto v = secant_verdict(SecantProblem(3, 7, 3, 4, 2));
    CHECK(v.status == SecantStatus::ExistsExpectedDim);
    // rational septics in P^3 likewise (g = 0)
    CHECK(secant_verdict(SecantProblem(0, 7, 3, 4, 2)).status ==
          SecantStatus::ExistsExpectedDim);
    // the rational quintic's quadrisecant is classical, but d = 5 < 3r-2
    // sits outside the counting regime: no certificate either way
    CHECK(secant_verdict(SecantProblem(0, 5, 3, 4, 2)).status ==
          SecantStatus::HypothesesFail);
}

TEST_CASE("verdict never asserts existence below the emptiness bound (grid)") {
    for (long long g = 0; g <= 20; ++g)
        for (long long d = 0; d <= 20; ++d)
            for (long long e = 1; e <= 10; ++e)
                for (long long f = 0; f < e; ++f)
                    for (long long r = e - f; r <= 12; ++r) {
                        SecantProblem p(g, d, r, e, f);
                        auto v = secant_verdict(p);
                        if (family_dim_bound(p) < 0) {
                            CHECK(v.status == SecantStatus::EmptyGeneralCurve);
                        }
                        if (v.status == SecantStatus::ExistsExpectedDim) {
                            CHECK(family_dim_bound(p) >= 0);
                            CHECK(rho(g, r - e + f, d - e) >= 0);
                        }
                    }
}

TEST_CASE("rho_zero_emptiness") {
    CHECK(rho_zero_emptiness(SecantProblem(12, 12, 3, 2, 1)));
    CHECK_FALSE(rho_zero_emptiness(SecantProblem(8, 10, 3, 4, 2)));  // rho != 0
    // e = f(r+1-e+f) exactly: strict inequality fails
    CHECK_FALSE(rho_zero_emptiness(SecantProblem(4, 6, 3, 4, 2)));  // rho(4,3,6)=0
}

TEST_CASE("coppens_martens_dim") {
    CHECK(coppens_martens_dim(SecantProblem(8, 10, 3, 4, 2)) == 0);
    CHECK(coppens_martens_dim(SecantProblem(1, 4, 3, 3, 1)) == 1);
    CHECK_FALSE(coppens_martens_dim(SecantProblem(5, 7, 3, 2, 1)).has_value());
}

TEST_CASE("very_ample_guaranteed") {
    CHECK(very_ample_guaranteed(1, 3, 4, 1));
    CHECK_FALSE(very_ample_guaranteed(1, 3, 4, 2));
    for (long long d = 1; d <= 10; ++d) {
        for (long long e = 1; e <= d + 2; ++e) {
            // rational normal curve: rho = 0
            CHECK(very_ample_guaranteed(0, d, d, e) == (2 * e - 2 - d < 0));
        }
    }
    CHECK_THROWS_AS(very_ample_guaranteed(1, 3, 4, 0), PreconditionError);
}

TEST_CASE("uf-secant specialization") {
    CHECK(uf_secant_params(2, 2) == std::pair<long long, long long>{3, 4});
    CHECK(uf_secant_params(1, 2) == std::pair<long long, long long>{0, 2});
    CHECK(uf_secant_params(3, 2) == std::pair<long long, long long>{6, 6});

    auto p = uf_secant_problem(8, 10, 2, 2);
    CHECK(p.r == 3);
    CHECK(p.e == 4);
    CHECK(p.f == 2);
    // u = 1 collapses to e = f and is not a secant problem
    CHECK_THROWS_AS(uf_secant_problem(8, 10, 1, 2), PreconditionError);
    CHECK_THROWS_AS(uf_secant_params(2, 1), PreconditionError);
}

TEST_CASE("uf-secant problems in range get an existence verdict") {
    // u=2: e = 2r-2 case; u=3: the 2f <= e-1 case
    CHECK(secant_verdict(uf_secant_problem(8, 10, 2, 2)).status ==
          SecantStatus::ExistsExpectedDim);
    CHECK(secant_verdict(uf_secant_problem(12, 17, 3, 2)).status ==
          SecantStatus::ExistsExpectedDim);
    // finite count: expected cycle dimension is zero since e = f(r+1-e+f)
    CHECK(expected_cycle_dim(uf_secant_problem(12, 17, 3, 2)) == 0);
}
