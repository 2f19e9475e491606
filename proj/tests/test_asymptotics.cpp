#include <doctest.h>

#include <cmath>

#include "kepler/asymptotics.hpp"
#include "kepler/errors.hpp"
#include "kepler/exp_poly.hpp"
#include "kepler/gamma.hpp"
#include "kepler/series.hpp"

#include "oracles.hpp"

using namespace kepler;

TEST_CASE("exp-poly calculus") {
    // d/ds [s^2 e^s] = (2s + s^2) e^s
    ExpPolyFunction f((Rational(1)));
    f.add_term(Rational(2), 1.0);
    auto df = f.derivative();
    CHECK(df.terms.at(Rational(1)) == doctest::Approx(2.0));
    CHECK(df.terms.at(Rational(2)) == doctest::Approx(1.0));
    // d/ds [e^{s^{1/2}}] = (1/2) s^{-1/2} e^{s^{1/2}}
    ExpPolyFunction g(Rational(1, 2));
    g.add_term(Rational(0), 1.0);
    auto dg = g.derivative();
    REQUIRE(dg.terms.size() == 1);
    CHECK(dg.terms.at(Rational(-1, 2)) == doctest::Approx(0.5));
    // power shifts are exact on the exponent lattice
    auto shifted = f.mul_power(Rational(-3, 2));
    CHECK(shifted.terms.count(Rational(1, 2)) == 1);
}

TEST_CASE("leading-order expansion series at order zero is one") {
    JordanType sym2(2, 1.0, 0.0);
    DiagonalPoint t = DiagonalPoint::cone({12.0, 8.0});
    CHECK(asympt_1f1_series(1.7, 2.4, t, sym2, 0) == doctest::Approx(1.0));
}

TEST_CASE("first-parameter collapse kills every correction") {
    // lambda = d/r zeroes the Pochhammer (d/r - lambda)_mu for mu != 0
    JordanType sym2(2, 1.0, 0.0);
    DiagonalPoint t = DiagonalPoint::cone({11.0, 6.0});
    CHECK(asympt_1f1_series(sym2.dim_over_rank(), 2.4, t, sym2, 3) ==
          doctest::Approx(1.0));
    JordanType disc(1, 2.0, 0.0);
    DiagonalPoint y = DiagonalPoint::bounded({0.4});
    CHECK(asympt_2f1_series(disc.dim_over_rank(), 2.2, 50.0, y, disc, 3) ==
          doctest::Approx(1.0));
}

TEST_CASE("term tables carry the error proxy") {
    JordanType sym2(2, 1.0, 0.0);
    auto series = asympt_1f1_terms(1.7, 2.4, sym2, 2);
    CHECK(series.order == 2);
    CHECK(series.terms.at(Partition{}) == doctest::Approx(1.0));
    // shells up to order+1 are present so evaluation can report the remainder
    CHECK(series.terms.count(Partition{2, 1}) == 1);
    for (double s : {10.0, 40.0}) {
        std::vector<double> inv{1.0 / s, 1.0 / (0.7 * s)};
        auto v = evaluate_asymptotic(series, inv, sym2.a);
        CHECK(v.first_omitted > 0.0);
        CHECK(v.first_omitted < 1.0);
        // the proxy scales like s^{-(order+1)}
        if (s == 40.0) {
            auto v10 = evaluate_asymptotic(series,
                                           std::vector<double>{0.1, 1.0 / 7.0}, sym2.a);
            CHECK(v.first_omitted < v10.first_omitted * std::pow(0.25, 2.5));
        }
    }
}

TEST_CASE("rank one matches the classical Kummer expansion") {
    JordanType disc(1, 2.0, 0.0);
    double lambda = 1.3, beta = 2.6;
    for (double s : {15.0, 40.0}) {
        DiagonalPoint t = DiagonalPoint::cone({s});
        for (int order : {0, 1, 2, 3}) {
            double series = asympt_1f1_series(lambda, beta, t, disc, order);
            double classical =
                oracles::kummer_asympt_2f0(1.0 - lambda, beta - lambda, 1.0 / s, order);
            CHECK(series == doctest::Approx(classical).epsilon(1e-13));
        }
    }
}

TEST_CASE("rank-one large-argument accuracy improves with the order") {
    JordanType disc(1, 2.0, 0.0);
    double lambda = 1.3, beta = 2.6;
    double g = std::exp(std::lgamma(lambda) - std::lgamma(beta));
    for (double s : {20.0, 60.0}) {
        double lhs = g * oracles::kummer_1f1(lambda, beta, s, 800) * std::exp(-s) *
                     std::pow(s, beta - lambda);
        double e0 = std::fabs(lhs - asympt_1f1_series(lambda, beta,
                                                      DiagonalPoint::cone({s}), disc, 0));
        double e2 = std::fabs(lhs - asympt_1f1_series(lambda, beta,
                                                      DiagonalPoint::cone({s}), disc, 2));
        CHECK(e2 < e0);
        CHECK(e0 < 5.0 / s);
    }
}

TEST_CASE("rank-one large-weight expansion against scalar 2F1") {
    JordanType disc(1, 2.0, 0.0);
    double lambda = 2.4, beta = 3.1, y = 0.35;
    for (double nu : {40.0, 120.0}) {
        double f21 = oracles::gauss_2f1(lambda, nu, beta, y, 4000);
        LogValue lhs = LogValue::from_double(f21);
        lhs.log_abs +=
            std::lgamma(lambda) + std::lgamma(nu) - std::lgamma(beta);
        LogValue rhs =
            asympt_2f1(lambda, beta, nu, DiagonalPoint::bounded({y}), disc, 0);
        double ratio = std::exp(lhs.log_abs - rhs.log_abs);
        CHECK(std::fabs(ratio - 1.0) < 6.0 / nu);
    }
}

TEST_CASE("asymptotic domain guards") {
    JordanType sym2(2, 1.0, 0.0);
    CHECK_THROWS_AS(
        asympt_1f1(1.5, 2.0, DiagonalPoint::free({3.0, -1.0}), sym2, 1), domain_error);
    CHECK_THROWS_AS(
        asympt_2f1_series(1.5, 2.0, 30.0, DiagonalPoint::free({0.5, 1e-9}), sym2, 1),
        domain_error);
    CHECK_THROWS_AS(asympt_2f1(0.1, 2.0, 30.0, DiagonalPoint::bounded({0.5, 0.4}),
                               sym2, 1),
                    domain_error);
}

TEST_CASE("distortion coefficients: degenerate and known cases") {
    // p = 2: empty operator chain, the expansion is the single term 1
    auto disc = rank1_kempf_coeffs(JordanType(1, 2.0, 0.0), 1, 1);
    REQUIRE(disc.size() == 1);
    CHECK(disc[0] == 1.0);
    // b_0 = 1 exactly whatever the exponent
    for (const auto& name : {"sym:3", "spin:6", "ball:5", "full:2,3", "asym:5"}) {
        JordanType jt = *parse_type_name(name);
        for (auto [n, d] : std::vector<std::pair<long long, long long>>{
                 {1, 1}, {2, 1}, {3, 2}}) {
            auto b = rank1_kempf_coeffs(jt, n, d);
            REQUIRE(b.size() == size_t(llround(jt.genus())) - 1);
            CHECK(b[0] == 1.0);
        }
    }
    CHECK_THROWS_AS(rank1_kempf_coeffs(JordanType(2, 3.0, 0.0), 0, 1), domain_error);
    CHECK_THROWS_AS(rank1_kempf_coeffs(JordanType(2, 3.0, 0.0), 1, -2), domain_error);
}

TEST_CASE("distortion expansion fits the normalized kernel") {
    // spin factor dim 5, lambda = 1, nu = 120: residual at machine-near level
    JordanType spin5(2, 3.0, 0.0);
    auto b = rank1_kempf_coeffs(spin5, 1, 1);
    double p1 = spin5.genus() - 1.0, nu = 120.0;
    KernelSpec spec = KernelSpec::flat(spin5, 1, 1.0, nu);
    for (double t : {0.6, 1.2}) {
        SeriesControl ctl(2000, 1e-280, 1e-15);
        auto k = kernel_diag(spec, DiagonalPoint::cone({t}), ctl);
        double normalized =
            std::exp(k.log_value.log_abs - nu * t - p1 * std::log(nu));
        double expansion = 0.0;
        for (size_t j = 0; j < b.size(); ++j)
            expansion += b[j] * std::pow(nu * t, -double(j));
        CHECK(normalized == doctest::Approx(expansion).epsilon(1e-10));
    }
}

TEST_CASE("bounded distortion ratio is exactly one on the disc") {
    JordanType disc(1, 2.0, 0.0);
    KernelSpec spec = KernelSpec::bounded(disc, 1, 30.0);
    SeriesControl ctl(600, 1e-280, 1e-14);
    auto rows = tyz_bounded_leading(spec, DiagonalPoint::bounded({0.3}),
                                    {30.0, 60.0}, ctl);
    for (const auto& row : rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-12));
    // flat analogue on the disc: e^{-nu t} nu e^{nu t} / nu = 1
    KernelSpec flat = KernelSpec::flat(disc, 1, 1.0, 30.0);
    auto frows = tyz_bounded_leading(flat, DiagonalPoint::cone({0.6}), {30.0, 90.0}, ctl);
    for (const auto& row : frows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Mittag-Leffler leading term") {
    CHECK(mittag_leffler_asympt(1.0, 1.0, 3.0) == doctest::Approx(std::exp(3.0)));
    // E_{1,2}(s) = (e^s - 1)/s vs leading e^s/s: relative gap e^{-s}
    double s = 12.0;
    double lead = mittag_leffler_asympt(1.0, 2.0, s);
    double exact = (std::exp(s) - 1.0) / s;
    CHECK(std::fabs(lead / exact - 1.0) < 2.0 * std::exp(-s));
    CHECK_THROWS_AS(mittag_leffler_asympt(-1.0, 1.0, 2.0), domain_error);
    CHECK_THROWS_AS(mittag_leffler_asympt(1.0, 1.0, -2.0), domain_error);
}
