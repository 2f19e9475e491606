#include <doctest.h>

#include <cmath>

#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"
#include "kepler/series.hpp"

#include "oracles.hpp"

using namespace kepler;

namespace {
const SeriesControl tight(120, 1e-15, 1e-14);
}

TEST_CASE("0F0 is the exponential") {
    for (const auto& jt : {JordanType(2, 1.0, 0.0), JordanType(2, 4.0, 0.0)}) {
        DiagonalPoint t = DiagonalPoint::cone({0.7, 0.3});
        auto r = hyper_pFq({}, {}, t, jt, tight);
        CHECK(r.converged);
        CHECK(r.value == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
    }
}

TEST_CASE("1F0 is the binomial product") {
    JordanType jt(2, 1.0, 0.0);
    DiagonalPoint t = DiagonalPoint::cone({0.4, 0.2});
    auto r = hyper_pFq({2.3}, {}, t, jt, tight);
    CHECK(r.converged);
    CHECK(r.value ==
          doctest::Approx(std::pow(0.6, -2.3) * std::pow(0.8, -2.3)).epsilon(1e-11));
}

TEST_CASE("rank one reduces to the classical Kummer function") {
    JordanType disc(1, 2.0, 0.0);
    for (double z : {0.3, 1.7, 3.0, -2.0}) {
        auto r = hyper_pFq({1.4}, {2.9}, DiagonalPoint::free({z}), disc, tight);
        CHECK(r.value == doctest::Approx(oracles::kummer_1f1(1.4, 2.9, z)).epsilon(1e-12));
    }
}

TEST_CASE("rank one 2F1 against scalar summation") {
    JordanType disc(1, 2.0, 0.0);
    auto r = hyper_pFq({1.2, 2.7}, {3.3}, DiagonalPoint::free({0.45}), disc,
                       SeriesControl(300, 1e-16, 1e-15));
    CHECK(r.value ==
          doctest::Approx(oracles::gauss_2f1(1.2, 2.7, 3.3, 0.45)).epsilon(1e-12));
}

TEST_CASE("Kummer relation on cones of rank up to two") {
    // 1F1(l; b; t) = e^{sum t} 1F1(b-l; b; -t)
    for (const auto& jt : {JordanType(2, 1.0, 0.0), JordanType(2, 2.0, 0.0)}) {
        for (std::vector<double> tv :
             {std::vector<double>{1.5, 0.5}, std::vector<double>{3.0, 1.0}}) {
            double l = 1.35, b = 2.8;
            SeriesControl ctl(200, 1e-16, 1e-15);
            auto lhs = hyper_pFq({l}, {b}, DiagonalPoint::cone(tv), jt, ctl);
            std::vector<double> neg(tv);
            for (double& x : neg) x = -x;
            auto rhs = hyper_pFq({b - l}, {b}, DiagonalPoint::free(neg), jt, ctl);
            double trace = tv[0] + tv[1];
            CHECK(lhs.value ==
                  doctest::Approx(std::exp(trace) * rhs.value).epsilon(1e-9));
        }
    }
    JordanType disc(1, 2.0, 0.0);
    auto lhs = hyper_pFq({1.35}, {2.8}, DiagonalPoint::cone({3.0}), disc, tight);
    auto rhs = hyper_pFq({1.45}, {2.8}, DiagonalPoint::free({-3.0}), disc, tight);
    CHECK(lhs.value == doctest::Approx(std::exp(3.0) * rhs.value).epsilon(1e-9));
}

TEST_CASE("shell decay becomes monotone in the convergent regime") {
    JordanType jt(2, 2.0, 0.0);
    DiagonalPoint t = DiagonalPoint::cone({1.2, 0.8});
    std::vector<double> shells;
    double total = 0.0;
    for (int k = 0; k <= 40; ++k) {
        double shell = 0.0;
        for (const Partition& mu : partitions_of_weight(k, 2)) {
            LogValue c = pochhammer_partition(1.5, mu, jt.a, jt.r) /
                         pochhammer_partition(2.5, mu, jt.a, jt.r);
            shell += (c * fock_component_log(mu, t.t, jt.a)).to_double();
        }
        shells.push_back(std::fabs(shell));
        total += shell;
    }
    for (size_t i = shells.size() - 5; i < shells.size(); ++i)
        CHECK(shells[i] < shells[i - 1]);
}

TEST_CASE("series control validation and convergence reporting") {
    CHECK_THROWS_AS(SeriesControl(-1, 1e-10, 1e-10), domain_error);
    CHECK_THROWS_AS(SeriesControl(10, 0.0, 1e-10), domain_error);
    JordanType disc(1, 2.0, 0.0);
    // truncation short of convergence is reported, not silently accepted
    auto r = hyper_pFq({}, {}, DiagonalPoint::cone({5.0}), disc,
                       SeriesControl(3, 1e-16, 1e-15));
    CHECK_FALSE(r.converged);
    CHECK(r.degrees_used == 3);
}

TEST_CASE("parameter guards") {
    JordanType disc(1, 2.0, 0.0);
    // vanishing denominator Pochhammer
    CHECK_THROWS_AS(hyper_pFq({1.0}, {0.0}, DiagonalPoint::free({0.5}), disc, tight),
                    parameter_error);
    CHECK_THROWS_AS(hyper_pFq({1.0}, {-2.0}, DiagonalPoint::free({0.5}), disc, tight),
                    parameter_error);
    // p = q+1 outside the spectral unit ball
    CHECK_THROWS_AS(hyper_pFq({1.0, 2.0}, {3.0}, DiagonalPoint::free({1.2}), disc, tight),
                    domain_error);
    // p > q+1 is formal only
    CHECK_THROWS_AS(hyper_pFq({1.0, 2.0}, {}, DiagonalPoint::free({0.1}), disc, tight),
                    parameter_error);
    SeriesControl formal(6, 1e-15, 1e-14);
    formal.allow_formal = true;
    auto r = hyper_pFq({1.0, 2.0}, {}, DiagonalPoint::free({0.1}), disc, formal);
    CHECK_FALSE(r.converged); // asymptotic-only: never reported convergent
    // point length must match the rank
    CHECK_THROWS_AS(
        hyper_pFq({}, {}, DiagonalPoint::cone({0.5, 0.5}), disc, tight), domain_error);
}

TEST_CASE("Mittag-Leffler identities") {
    SeriesControl ctl(300, 1e-300, 1e-16);
    for (double s : {0.3, 2.0, 10.0}) {
        CHECK(mittag_leffler(1.0, 1.0, s, ctl).value ==
              doctest::Approx(std::exp(s)).epsilon(1e-14));
        CHECK(mittag_leffler(1.0, 2.0, s, ctl).value ==
              doctest::Approx((std::exp(s) - 1.0) / s).epsilon(1e-13));
    }
    // A = 1/2 peaks around m = 2 s^2, so give both routes a long tail
    SeriesControl wide(1500, 1e-300, 1e-16);
    for (double s : {0.3, 2.0, 10.0}) {
        auto r = mittag_leffler(0.5, 1.0, s, wide);
        CHECK(r.converged);
        CHECK(r.value ==
              doctest::Approx(oracles::mittag_leffler(0.5, 1.0, s, 1500)).epsilon(1e-12));
    }
    // weighted sum matching the rank-one flat closed form
    double lam = 2.0, p = 4.0, nu = 1.7, t = 0.6;
    double direct = 0.0;
    for (int m = 0; m < 200; ++m)
        direct += std::pow(nu, m / lam) * std::pow(t, m) /
                  std::tgamma(p - 1.0 + m / lam);
    CHECK(mittag_leffler(1.0 / lam, p - 1.0, std::pow(nu, 1.0 / lam) * t, ctl).value ==
          doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("Mittag-Leffler treats Gamma poles as zero terms") {
    SeriesControl ctl(300, 1e-300, 1e-16);
    // B = 0: the m = 0 term hits Gamma(0) and is dropped; E_{1,0}(s) = s e^s
    auto r = mittag_leffler(1.0, 0.0, 2.0, ctl);
    CHECK(r.value == doctest::Approx(2.0 * std::exp(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, 1.0, ctl), domain_error);
}
