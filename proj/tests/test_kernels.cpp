#include <doctest.h>

#include <cmath>

#include "kepler/dimension.hpp"
#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"
#include "kepler/kernels.hpp"
#include "kepler/measures.hpp"
#include "kepler/quadrature.hpp"

#include "oracles.hpp"

using namespace kepler;

namespace {
const SeriesControl tight(300, 1e-15, 1e-14);
}

TEST_CASE("classical Fock-space weights on the disc") {
    // r = 1, b = 0, lambda = 1, nu = 1, p = 2: sigma_m = m!
    JordanType disc(1, 2.0, 0.0);
    KernelSpec spec = KernelSpec::flat(disc, 1, 1.0, 1.0);
    for (int m = 0; m <= 8; ++m) {
        CHECK(moments_flat(spec, Partition{m}).to_double() ==
              doctest::Approx(std::tgamma(m + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("flat moments: lambda = 1 simplification") {
    JordanType jt(2, 2.0, 1.0);
    int ell = 2;
    KernelSpec spec = KernelSpec::flat(jt, ell, 1.0, 2.4);
    KeplerRank kr = derive_invariants(jt, ell);
    LogValue pref = log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * ell) /
                    (log_gindikin_gamma(ell, jt.a, jt.dim_over_rank()) *
                     log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * jt.r));
    for (const Partition& mu : partitions_up_to(5, ell)) {
        LogValue expected = pref * log_gindikin_gamma(ell, jt.a, mu, kr.d_ell / ell);
        expected.log_abs -= (kr.d_ell + mu.weight()) * std::log(2.4);
        CHECK(moments_flat(spec, mu).log_abs ==
              doctest::Approx(expected.log_abs).epsilon(1e-13));
    }
}

TEST_CASE("rank-one flat moment ratio for general exponent") {
    // sigma_m / sigma_0 = Gamma(p-1+m/lambda) / (Gamma(p-1) nu^{m/lambda})
    JordanType spin6(2, 4.0, 0.0);
    double p = spin6.genus();
    for (double lam : {1.0, 2.0, 0.5}) {
        KernelSpec spec = KernelSpec::flat(spin6, 1, lam, 3.1);
        for (int m = 1; m <= 6; ++m) {
            double ratio =
                (moments_flat(spec, Partition{m}) / moments_flat(spec, Partition{}))
                    .to_double();
            double expected = std::exp(std::lgamma(p - 1.0 + m / lam) -
                                       std::lgamma(p - 1.0) -
                                       (m / lam) * std::log(3.1));
            CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("bounded moment ratios and the large-weight limit") {
    JordanType jt(3, 1.0, 0.0);
    int ell = 2;
    KeplerRank kr = derive_invariants(jt, ell);
    double threshold = KernelSpec::bounded_nu_threshold(jt, ell);
    KernelSpec spec = KernelSpec::bounded(jt, ell, threshold + 4.2);
    for (const Partition& mu : partitions_up_to(4, ell)) {
        double ratio =
            (moments_bounded(spec, mu) / moments_bounded(spec, Partition{})).to_double();
        double expected =
            (pochhammer_partition(kr.d_ell / ell, mu, jt.a, ell) /
             pochhammer_partition(spec.nu, mu, jt.a, ell))
                .to_double();
        CHECK(ratio == doctest::Approx(expected).epsilon(1e-12));
    }
    // nu -> infinity: nu^{|mu|} sigma_mu / sigma_0 -> (d_ell/ell)_mu
    KernelSpec big = KernelSpec::bounded(jt, ell, 1e7);
    Partition mu{2, 1};
    double limit = pochhammer_partition(kr.d_ell / ell, mu, jt.a, ell).to_double();
    double scaled = std::pow(1e7, mu.weight()) *
                    (moments_bounded(big, mu) / moments_bounded(big, Partition{}))
                        .to_double();
    CHECK(scaled == doctest::Approx(limit).epsilon(1e-5));
}

TEST_CASE("rank-one bounded moments are beta integrals") {
    JordanType spin5(2, 3.0, 0.0);
    double p = spin5.genus(), nu = 9.5;
    KernelSpec spec = KernelSpec::bounded(spin5, 1, nu);
    for (int m = 1; m <= 3; ++m) {
        auto integrand = [&](double t) {
            return std::pow(t, p - 2.0 + m) * std::pow(1.0 - t, nu - p);
        };
        auto norm = [&](double t) {
            return std::pow(t, p - 2.0) * std::pow(1.0 - t, nu - p);
        };
        double quad = integrate_gk(integrand, 0.0, 1.0, 1e-13, 1e-11).value /
                      integrate_gk(norm, 0.0, 1.0, 1e-13, 1e-11).value;
        double formula =
            (moments_bounded(spec, Partition{m}) / moments_bounded(spec, Partition{}))
                .to_double();
        CHECK(formula == doctest::Approx(quad).epsilon(1e-9));
    }
}

TEST_CASE("bounded weight-shift identity") {
    // sigma_mu(nu)/sigma_mu(nu+1) = prod_j (mu_j + nu - (j-1)a/2) / (nu - d_ell/ell - ... )
    JordanType jt(2, 3.0, 0.0);
    int ell = 2;
    double nu = KernelSpec::bounded_nu_threshold(jt, ell) + 2.5;
    KernelSpec s0 = KernelSpec::bounded(jt, ell, nu);
    KernelSpec s1 = KernelSpec::bounded(jt, ell, nu + 1.0);
    KeplerRank kr = derive_invariants(jt, ell);
    for (const Partition& mu : partitions_up_to(4, ell)) {
        double lhs = (moment(s0, mu) / moment(s1, mu)).log_abs;
        double rhs = 0.0;
        for (int j = 1; j <= ell; ++j) {
            rhs += std::log(mu.part(j) + nu - 0.5 * jt.a * (j - 1));
            rhs -= std::log(nu - kr.d_ell / ell - 0.5 * jt.a * (j - 1));
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("moment quadrature cross-check, rank one") {
    JordanType spin5(2, 3.0, 0.0);
    KernelSpec flat = KernelSpec::flat(spin5, 1, 1.0, 2.3);
    Partition mu{2};
    CHECK(moment_quadrature(flat, mu) ==
          doctest::Approx((moment(flat, mu) / moment(flat, Partition{})).to_double())
              .epsilon(1e-7));
    CHECK(moment_quadrature(flat, Partition{}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("diagonal kernels on the disc in closed form") {
    JordanType disc(1, 2.0, 0.0);
    // flat: K = nu e^{nu t}
    KernelSpec flat = KernelSpec::flat(disc, 1, 1.0, 3.0);
    auto kf = kernel_diag(flat, DiagonalPoint::cone({0.5}), tight);
    CHECK(kf.converged);
    CHECK(kf.value == doctest::Approx(3.0 * std::exp(1.5)).epsilon(1e-12));
    // bounded: K = (nu - 1)(1 - t)^{-nu}
    KernelSpec bounded = KernelSpec::bounded(disc, 1, 5.5);
    auto kb = kernel_diag(bounded, DiagonalPoint::bounded({0.3}), tight);
    CHECK(kb.value == doctest::Approx(4.5 * std::pow(0.7, -5.5)).epsilon(1e-12));
}

TEST_CASE("full-rank tube-type flat kernel collapses to the exponential") {
    // coefficients reduce so that K = nu^d e^{nu sum t} / (C Gamma_r(d/r))
    JordanType jt(2, 1.0, 0.0);
    KernelSpec spec = KernelSpec::flat(jt, 2, 1.0, 2.0);
    DiagonalPoint t = DiagonalPoint::cone({0.6, 0.25});
    auto k = kernel_diag(spec, t, tight);
    LogValue c = log_gindikin_gamma(2, jt.a, 0.5 * jt.a * 2) /
                 (log_gindikin_gamma(2, jt.a, jt.dim_over_rank()) *
                  log_gindikin_gamma(2, jt.a, jt.a));
    double expected = std::pow(2.0, jt.dim()) * std::exp(2.0 * 0.85) /
                      (c * log_gindikin_gamma(2, jt.a, jt.dim_over_rank())).to_double();
    CHECK(k.value == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("spectral route equals direct route pointwise") {
    JordanType jt(2, 2.0, 1.0);
    for (int ell : {1, 2}) {
        KernelSpec flat = KernelSpec::flat(jt, ell, 1.0, 2.7);
        KernelSpec flat2 = KernelSpec::flat(jt, ell, 2.0, 2.7);
        KernelSpec bounded =
            KernelSpec::bounded(jt, ell, KernelSpec::bounded_nu_threshold(jt, ell) + 3.0);
        std::vector<double> tv(ell == 1 ? std::vector<double>{0.35}
                                        : std::vector<double>{0.5, 0.2});
        auto d1 = kernel_diag(flat, DiagonalPoint::cone(tv), tight);
        auto s1 = kernel_spectral(flat, DiagonalPoint::cone(tv), tight);
        CHECK(d1.value == doctest::Approx(s1.value).epsilon(1e-11));
        auto d2 = kernel_diag(bounded, DiagonalPoint::bounded(tv), tight);
        auto s2 = kernel_spectral(bounded, DiagonalPoint::bounded(tv), tight);
        CHECK(d2.value == doctest::Approx(s2.value).epsilon(1e-11));
        auto d3 = kernel_diag(flat2, DiagonalPoint::cone(tv), tight);
        auto s3 = kernel_spectral(flat2, DiagonalPoint::cone(tv), tight);
        CHECK(d3.value == doctest::Approx(s3.value).epsilon(1e-11));
    }
}

TEST_CASE("general-exponent closed form expands over the moment quotients") {
    // F = C sum_mu [Gamma_ell(mu + d'_ell/ell) / sigma_mu] E^mu(t), any lambda
    JordanType jt(3, 2.0, 0.0);
    int ell = 2;
    KernelSpec spec = KernelSpec::flat(jt, ell, 2.0, 1.7);
    DiagonalPoint t = DiagonalPoint::cone({0.6, 0.25});
    auto f = closed_form_flat(spec, t, SeriesControl(80, 1e-15, 1e-14));
    KeplerRank kr = derive_invariants(jt, ell);
    LogValue c = log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * ell) /
                 (log_gindikin_gamma(ell, jt.a, jt.dim_over_rank()) *
                  log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * jt.r));
    double expected = 0.0;
    for (int k = 0; k <= 60; ++k) {
        for (const Partition& mu : partitions_of_weight(k, ell)) {
            LogValue coeff = c * log_gindikin_gamma(ell, jt.a, mu, kr.dprime_ell / ell) /
                             moments_flat(spec, mu);
            expected += (coeff * fock_component_log(mu, t.t, jt.a)).to_double();
        }
    }
    CHECK(f.value == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("operator-factor route reproduces the kernel") {
    // coefficients assembled from the first-order factor list instead of
    // the Gamma quotient
    JordanType jt(3, 2.0, 0.0);
    int ell = 2;
    KernelSpec spec = KernelSpec::flat(jt, ell, 1.0, 1.9);
    DiagonalPoint t = DiagonalPoint::cone({0.55, 0.3});
    auto reference = kernel_diag(spec, t, tight);
    auto lambdas = universal_factor_list(jt, ell);
    KeplerRank kr = derive_invariants(jt, ell);
    LogValue c = log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * ell) /
                 (log_gindikin_gamma(ell, jt.a, jt.dim_over_rank()) *
                  log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * jt.r));
    double total = 0.0;
    for (int k = 0; k <= 60; ++k) {
        for (const Partition& mu : partitions_of_weight(k, ell)) {
            double a_mu = 1.0;
            for (double lam : lambdas) a_mu *= bracket_eigenvalue(lam, mu, jt.a, ell);
            LogValue coeff = c * LogValue::from_double(a_mu) *
                             log_gindikin_gamma(ell, jt.a, mu, kr.dprime_ell / ell) /
                             moment(spec, mu);
            total += (coeff * fock_component_log(mu, t.t, jt.a)).to_double();
        }
    }
    CHECK(total == doctest::Approx(reference.value).epsilon(1e-11));
}

TEST_CASE("closed forms") {
    // rank one, lambda = 1: F = nu^{p-1} E_{1,p-1}(nu t), summed directly
    JordanType spin5(2, 3.0, 0.0);
    double p = spin5.genus();
    KernelSpec spec = KernelSpec::flat(spin5, 1, 1.0, 2.6);
    double t = 0.8;
    auto f = closed_form_flat(spec, DiagonalPoint::cone({t}), tight);
    double direct = 0.0;
    for (int m = 0; m < 200; ++m)
        direct += std::pow(2.6 * t, m) / std::tgamma(p - 1.0 + m);
    CHECK(f.value == doctest::Approx(std::pow(2.6, p - 1.0) * direct).epsilon(1e-12));

    // rank one, general lambda: Mittag-Leffler form against term-by-term sum
    KernelSpec spec2 = KernelSpec::flat(spin5, 1, 2.0, 1.8);
    auto f2 = closed_form_flat(spec2, DiagonalPoint::cone({t}), tight);
    double direct2 = 0.0;
    for (int m = 0; m < 300; ++m)
        direct2 += std::pow(1.8, m / 2.0) * std::pow(t, m) /
                   std::tgamma(p - 1.0 + m / 2.0);
    CHECK(f2.value ==
          doctest::Approx(std::pow(1.8 / 2.0, p - 1.0) * direct2).epsilon(1e-12));

    // rank one bounded: (4t)-style sum
    KernelSpec spec3 = KernelSpec::bounded(spin5, 1, 9.0);
    auto f3 = closed_form_bounded(spec3, DiagonalPoint::bounded({0.4}), tight);
    double direct3 = 0.0;
    for (int m = 0; m < 400; ++m)
        direct3 += std::exp(std::lgamma(9.0 + m) - std::lgamma(p - 1.0 + m)) *
                   std::pow(0.4, m);
    CHECK(f3.value ==
          doctest::Approx(direct3 / std::tgamma(9.0 + 1.0 - p)).epsilon(1e-11));

    // t -> 0 limit of the bounded form: prefactor only
    auto f0 = closed_form_bounded(spec3, DiagonalPoint::bounded({1e-14}), tight);
    KeplerRank kr = derive_invariants(spin5, 1);
    double pref = (log_gindikin_gamma(1, spin5.a, 9.0) *
                   log_gindikin_gamma(1, spin5.a, kr.dprime_ell) /
                   (log_gindikin_gamma(1, spin5.a, 9.0 - kr.d_ell) *
                    log_gindikin_gamma(1, spin5.a, kr.d_ell)))
                      .to_double();
    CHECK(f0.value == doctest::Approx(pref).epsilon(1e-10));

    // rank two bounded closed form against the scalar-series-free route:
    // the hypergeometric with equal parameters collapses (a = 0 degenerate
    // is excluded, use the 2F1 value itself against rank-two summation)
    JordanType sym2(2, 1.0, 0.0);
    KernelSpec spec4 =
        KernelSpec::bounded(sym2, 2, KernelSpec::bounded_nu_threshold(sym2, 2) + 3.5);
    auto f4 = closed_form_bounded(spec4, DiagonalPoint::bounded({0.35, 0.15}), tight);
    CHECK(f4.converged);
    CHECK(std::isfinite(f4.value));
}

TEST_CASE("rank-one kernel coefficients are positive") {
    for (const auto& name : {"ball:4", "sym:3", "spin:7", "exc:16"}) {
        JordanType jt = *parse_type_name(name);
        KernelSpec flat = KernelSpec::flat(jt, 1, 1.0, 2.0);
        KernelSpec bounded =
            KernelSpec::bounded(jt, 1, KernelSpec::bounded_nu_threshold(jt, 1) + 2.0);
        for (int m = 0; m <= 20; ++m) {
            CHECK(kernel_coeff_direct(flat, Partition{m}).sign == 1);
            CHECK(kernel_coeff_direct(bounded, Partition{m}).sign == 1);
        }
    }
}

TEST_CASE("kernel spec validation") {
    JordanType jt(2, 3.0, 0.0);
    CHECK_THROWS_AS(KernelSpec::flat(jt, 1, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(KernelSpec::flat(jt, 1, 1.0, -1.0), domain_error);
    // bounded threshold: nu must exceed d_ell/ell + (a/2)(ell-1)
    double threshold = KernelSpec::bounded_nu_threshold(jt, 2);
    CHECK_THROWS_AS(KernelSpec::bounded(jt, 2, threshold - 0.1), domain_error);
    KernelSpec ok = KernelSpec::bounded(jt, 2, threshold + 0.1);
    KernelSpec flat = KernelSpec::flat(jt, 1, 1.0, 2.0);
    CHECK_THROWS_AS(kernel_diag(flat, DiagonalPoint::free({-0.2}), tight), domain_error);
    CHECK_THROWS_AS(kernel_diag(ok, DiagonalPoint::free({0.5, 1.2}), tight),
                    domain_error);
    CHECK_THROWS_AS(moments_flat(ok, Partition{}), domain_error);
    CHECK_THROWS_AS(moments_bounded(flat, Partition{}), domain_error);
    CHECK_THROWS_AS(moment_quadrature(KernelSpec::flat(JordanType(3, 1.0, 0.0), 3, 1.0, 2.0),
                                      Partition{1}),
                    domain_error);
}

TEST_CASE("moment map enumeration") {
    JordanType jt(2, 2.0, 0.0);
    KernelSpec spec = KernelSpec::flat(jt, 2, 1.0, 2.0);
    auto seq = moments_up_to(spec, 3);
    CHECK(seq.sigma.size() == partitions_up_to(3, 2).size());
    for (const auto& [mu, s] : seq.sigma) CHECK(s.sign == 1);
}
