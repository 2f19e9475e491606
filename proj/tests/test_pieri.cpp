#include <doctest.h>

#include <cmath>

#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"
#include "kepler/pieri.hpp"

using namespace kepler;

TEST_CASE("rank one: expansion of (1-x) x^m / m!") {
    // oracle: (1-x) x^m/m! = x^m/m! - (m+1) x^{m+1}/(m+1)!, so the only
    // nonzero coefficients are C_m = 1 and C_{m+1} = -(m+1)
    JordanType ball(1, 2.0, 2.0);
    for (int m = 0; m <= 5; ++m) {
        auto coeffs = pieri_coefficients(Partition{m}, ball);
        REQUIRE(coeffs.size() == 2);
        CHECK(coeffs.at(Partition{m}) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(coeffs.at(Partition{m + 1}) ==
              doctest::Approx(-(m + 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("empty partition: elementary symmetric expansion") {
    // N(e-x) = 1 - s_1(x) + s_2(x) on a rank-two algebra; in the component
    // basis for 2x2 matrices this reads 1 - E^{(1)} + 2 E^{(1,1)}
    JordanType full22(2, 2.0, 0.0);
    auto coeffs = pieri_coefficients(Partition{}, full22);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs.at(Partition{}) == doctest::Approx(1.0));
    CHECK(coeffs.at(Partition{1}) == doctest::Approx(-1.0));
    CHECK(coeffs.at(Partition{1, 1}) == doctest::Approx(2.0));
}

TEST_CASE("support bounds") {
    JordanType sym3(3, 1.0, 0.0);
    Partition mu{2, 1};
    auto coeffs = pieri_coefficients(mu, sym3);
    for (const auto& [nu, c] : coeffs) {
        CHECK(mu.contained_in(nu));
        CHECK(nu.weight() <= mu.weight() + sym3.r);
        CHECK(c != 0.0);
    }
    CHECK(coeffs.count(mu) == 1);
}

TEST_CASE("identity holds at held-out evaluation points") {
    for (const auto& jt : {JordanType(2, 2.0, 0.0), JordanType(3, 1.0, 0.0),
                           JordanType(2, 3.0, 0.0)}) {
        for (const Partition& nu :
             {Partition{3}, Partition{2, 2}, Partition{3, 1}, Partition{2, 2, 1}}) {
            if (nu.length() > jt.r) continue;
            auto row = pieri_row(nu, jt);
            for (double gamma : {7.0 / 3.0, 2.6180339887498949, -1.234}) {
                double scale = std::max(
                    1.0, std::fabs(pochhammer_partition_d(gamma - 1.0, nu, jt.a, jt.r)));
                CHECK(pieri_residual(nu, row, jt, gamma) <= 1e-11 * scale);
            }
        }
    }
}

TEST_CASE("guards") {
    JordanType sym3(3, 1.0, 0.0);
    CHECK_THROWS_AS(pieri_coefficients(Partition{13}, sym3), domain_error);
    CHECK_THROWS_AS(pieri_coefficients(Partition{1, 1, 1, 1}, sym3), domain_error);
    CHECK_THROWS_AS(pieri_row(Partition{1, 1, 1, 1}, sym3), domain_error);
}
