#include "kepler/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "kepler/errors.hpp"
#include "kepler/exp_poly.hpp"
#include "kepler/gamma.hpp"

namespace kepler {

namespace {

std::vector<double> inverted(const DiagonalPoint& t, double floor_value) {
    std::vector<double> inv(t.t.size());
    for (size_t i = 0; i < inv.size(); ++i) {
        if (!(t.t[i] >= floor_value))
            throw domain_error("asymptotic expansion: entry below the domain guard");
        inv[i] = 1.0 / t.t[i];
    }
    return inv;
}

} // namespace

AsymptoticSeries asympt_1f1_terms(double lambda, double beta, const JordanType& jt,
                                  int order) {
    if (order < 0) throw domain_error("asympt_1f1_terms: order must be >= 0");
    const double dr = jt.dim_over_rank();
    AsymptoticSeries series;
    series.order = order;
    for (int k = 0; k <= order + 1; ++k) {
        for (const Partition& mu : partitions_of_weight(k, jt.r)) {
            LogValue coeff = pochhammer_partition(dr - lambda, mu, jt.a, jt.r) *
                             pochhammer_partition(beta - lambda, mu, jt.a, jt.r);
            if (!coeff.is_zero()) series.terms.emplace(mu, coeff.to_double());
        }
    }
    return series;
}

AsymptoticSeries asympt_2f1_terms(double lambda, double beta, double nu,
                                  const JordanType& jt, int order) {
    if (order < 0) throw domain_error("asympt_2f1_terms: order must be >= 0");
    const double dr = jt.dim_over_rank();
    AsymptoticSeries series;
    series.order = order;
    for (int k = 0; k <= order + 1; ++k) {
        for (const Partition& mu : partitions_of_weight(k, jt.r)) {
            LogValue coeff = pochhammer_partition(dr - lambda, mu, jt.a, jt.r) *
                             pochhammer_partition(beta - lambda, mu, jt.a, jt.r);
            if (coeff.is_zero()) continue;
            LogValue den = pochhammer_partition(dr + beta - lambda - nu, mu, jt.a, jt.r);
            if (den.is_zero())
                throw parameter_error("asympt_2f1: denominator Pochhammer vanishes");
            series.terms.emplace(mu, (coeff / den).to_double());
        }
    }
    return series;
}

AsymptoticValue evaluate_asymptotic(const AsymptoticSeries& series,
                                    std::span<const double> arg, double a) {
    AsymptoticValue out;
    for (const auto& [mu, c] : series.terms) {
        double term = c * fock_component_log(mu, arg, a).to_double();
        if (mu.weight() <= series.order) {
            out.value += term;
        } else {
            out.first_omitted += std::fabs(term);
        }
    }
    return out;
}

double asympt_1f1_series(double lambda, double beta, const DiagonalPoint& t,
                         const JordanType& jt, int order) {
    if (t.length() != jt.r)
        throw domain_error("asympt_1f1: point length must equal the rank");
    for (double x : t.t)
        if (!(x > 0.0)) throw domain_error("asympt_1f1: t must lie in the open cone");
    std::vector<double> inv = inverted(t, 1e-300);
    return evaluate_asymptotic(asympt_1f1_terms(lambda, beta, jt, order), inv, jt.a)
        .value;
}

double asympt_1f1(double lambda, double beta, const DiagonalPoint& t,
                  const JordanType& jt, int order) {
    double log_pref = t.sum();
    for (double x : t.t) log_pref += (lambda - beta) * std::log(x);
    return std::exp(log_pref) * asympt_1f1_series(lambda, beta, t, jt, order);
}

double asympt_2f1_series(double lambda, double beta, double nu, const DiagonalPoint& y,
                         const JordanType& jt, int order) {
    if (y.length() != jt.r)
        throw domain_error("asympt_2f1: point length must equal the rank");
    std::vector<double> arg(y.t.size());
    for (size_t i = 0; i < arg.size(); ++i) {
        if (!(y.t[i] > 1e-6) || !(y.t[i] < 1.0))
            throw domain_error("asympt_2f1: need 1e-6 <= y_i < 1");
        arg[i] = 1.0 - 1.0 / y.t[i]; // e - y^{-1}, entries in (-inf, 0]
    }
    return evaluate_asymptotic(asympt_2f1_terms(lambda, beta, nu, jt, order), arg, jt.a)
        .value;
}

LogValue asympt_2f1(double lambda, double beta, double nu, const DiagonalPoint& y,
                    const JordanType& jt, int order) {
    if (!(lambda > jt.dim_over_rank() - 1.0) || !(beta > jt.dim_over_rank() - 1.0))
        throw domain_error("asympt_2f1: lambda, beta must exceed d/r - 1");
    double series = asympt_2f1_series(lambda, beta, nu, y, jt, order);
    LogValue out = log_gindikin_gamma(jt.r, jt.a, lambda - beta + nu);
    for (double x : y.t) {
        out.log_abs += (lambda - beta) * std::log(x);
        out.log_abs -= (lambda - beta + nu) * std::log(1.0 - x);
    }
    return out * LogValue::from_double(series);
}

std::vector<double> rank1_kempf_coeffs(const JordanType& jt, long long lambda_num,
                                       long long lambda_den) {
    if (lambda_num <= 0 || lambda_den <= 0)
        throw domain_error("rank1_kempf_coeffs: lambda must be a positive rational");
    const double a_d = jt.a;
    const double b_d = jt.b;
    if (b_d != std::floor(b_d))
        throw domain_error("rank1_kempf_coeffs: integer b required");
    if (jt.r > 1 && (a_d != std::floor(a_d) || a_d < 1.0))
        throw domain_error("rank1_kempf_coeffs: integer a >= 1 required for r > 1");
    const long long a = llround(a_d), b = llround(b_d);
    const long long p = 2 + a * (jt.r - 1) + b; // genus, integer by the above
    const int degree = static_cast<int>(p - 2);

    const Rational lambda(lambda_num, lambda_den);
    ExpPolyFunction f(lambda);
    f.add_term(lambda * Rational(2 - p), 1.0);

    // product over j = 2..r of (D_j s + s D_j)/2 with D_j = s^{a-aj/2} d^a s^{aj/2-1};
    // the factors commute, the application order is immaterial
    for (int j = 2; j <= jt.r; ++j) {
        auto apply_dj = [&](const ExpPolyFunction& g) {
            return g.mul_power(Rational(a * j, 2) - Rational(1))
                .derivative(static_cast<int>(a))
                .mul_power(Rational(a) - Rational(a * j, 2));
        };
        ExpPolyFunction left = apply_dj(f.mul_power(Rational(1)));
        ExpPolyFunction right = apply_dj(f).mul_power(Rational(1));
        ExpPolyFunction sum(lambda);
        for (const auto& [q, c] : left.terms) sum.add_term(q, 0.5 * c);
        for (const auto& [q, c] : right.terms) sum.add_term(q, 0.5 * c);
        f = std::move(sum);
    }
    // s^{(1-r)a/2} d^b s^{(r-1)a/2 + b}
    f = f.mul_power(Rational(a * (jt.r - 1), 2) + Rational(b))
            .derivative(static_cast<int>(b))
            .mul_power(Rational(a * (1 - jt.r), 2));

    // result is s^{(2-p)lambda} Q(s^lambda) e^{s^lambda}; read Q off the grid
    std::vector<double> q_coeffs(static_cast<size_t>(degree + 1), 0.0);
    const Rational base = lambda * Rational(2 - p);
    for (const auto& [q, c] : f.terms) {
        Rational rel = (q - base) / lambda;
        if (!rel.is_integer())
            throw accuracy_error("rank1_kempf_coeffs: exponent off the expansion grid");
        long long k = rel.as_int();
        if (k < 0 || k > degree)
            throw accuracy_error("rank1_kempf_coeffs: exponent outside expected range");
        q_coeffs[static_cast<size_t>(k)] += c;
    }
    const double leading = q_coeffs[static_cast<size_t>(degree)];
    if (leading == 0.0)
        throw accuracy_error("rank1_kempf_coeffs: vanishing leading coefficient");
    std::vector<double> b_coeffs(static_cast<size_t>(degree + 1));
    for (int j = 0; j <= degree; ++j)
        b_coeffs[static_cast<size_t>(j)] = q_coeffs[static_cast<size_t>(degree - j)] / leading;
    return b_coeffs;
}

std::vector<TyzRow> tyz_bounded_leading(const KernelSpec& spec, const DiagonalPoint& t,
                                        const std::vector<double>& nu_list,
                                        const SeriesControl& ctl) {
    const KeplerRank kr = spec.rank_data();
    std::vector<TyzRow> rows;
    rows.reserve(nu_list.size());
    for (double nu : nu_list) {
        KernelSpec s = spec;
        s.nu = nu;
        SeriesResult k = kernel_diag(s, t, ctl);
        if (!k.converged)
            throw accuracy_error("tyz_bounded_leading: kernel series did not converge");
        double log_r;
        if (spec.potential == KernelSpec::Potential::Bounded) {
            double log_nb = 0.0;
            for (double x : t.t) log_nb += std::log1p(-x);
            log_r = nu * log_nb + k.log_value.log_abs +
                    (log_gindikin_gamma(spec.ell, spec.jt.a, nu - kr.d_ell / spec.ell) /
                     log_gindikin_gamma(spec.ell, spec.jt.a, nu - kr.dsecond_ell / spec.ell))
                        .log_abs -
                    kr.dsecond_ell * std::log(nu);
        } else {
            if (spec.lambda_exp != 1.0)
                throw domain_error("tyz leading ratio: flat potential needs lambda = 1");
            log_r = -nu * t.sum() + k.log_value.log_abs - kr.d_ell * std::log(nu);
        }
        rows.push_back(TyzRow{nu, k.log_value.sign * std::exp(log_r)});
    }
    return rows;
}

double mittag_leffler_asympt(double A, double B, double s) {
    if (!(A > 0.0)) throw domain_error("mittag_leffler_asympt: A must be positive");
    if (!(s > 0.0)) throw domain_error("mittag_leffler_asympt: s must be positive");
    return (1.0 / A) * std::pow(s, (1.0 - B) / A) * std::exp(std::pow(s, 1.0 / A));
}

} // namespace kepler
