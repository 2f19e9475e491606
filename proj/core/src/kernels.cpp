#include "kepler/kernels.hpp"

#include <cmath>
#include <limits>

#include "kepler/dimension.hpp"
#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"
#include "kepler/measures.hpp"

namespace kepler {

namespace {

// Signed accumulator on a floating scale: sum = s * exp(M).  Keeps kernel
// sums finite even when individual Gamma factors are far outside double
// range.
struct ScaledSum {
    double M = -std::numeric_limits<double>::infinity();
    double s = 0.0;

    void add_log(double log_abs, int sign) {
        if (sign == 0) return;
        if (log_abs > M) {
            s = s * std::exp(M - log_abs) + sign;
            M = log_abs;
        } else {
            s += sign * std::exp(log_abs - M);
        }
    }

    void add(const ScaledSum& o) {
        if (o.s == 0.0) return;
        add_log(o.M + std::log(std::fabs(o.s)), o.s > 0 ? +1 : -1);
    }

    LogValue log_value() const {
        if (s == 0.0) return LogValue::zero();
        return LogValue{M + std::log(std::fabs(s)), s > 0 ? +1 : -1};
    }

    double magnitude_log() const {
        if (s == 0.0) return -std::numeric_limits<double>::infinity();
        return M + std::log(std::fabs(s));
    }
};

LogValue radial_constant_log(const JordanType& jt, int ell) {
    return log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * ell) /
           (log_gindikin_gamma(ell, jt.a, jt.dim_over_rank()) *
            log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * jt.r));
}

void require_positive_moment(const LogValue& sigma, const Partition& mu) {
    if (sigma.sign <= 0)
        throw domain_error("moment sigma_" + mu.to_string() + " is not positive");
}

} // namespace

KernelSpec KernelSpec::flat(const JordanType& jt, int ell, double lambda_exp, double nu) {
    derive_invariants(jt, ell);
    if (!(lambda_exp > 0.0)) throw domain_error("KernelSpec: flat needs lambda_exp > 0");
    if (!(nu > 0.0)) throw domain_error("KernelSpec: flat needs nu > 0");
    return KernelSpec{jt, ell, Potential::Flat, lambda_exp, nu};
}

KernelSpec KernelSpec::bounded(const JordanType& jt, int ell, double nu) {
    derive_invariants(jt, ell);
    double threshold = bounded_nu_threshold(jt, ell);
    if (!(nu > threshold))
        throw domain_error("KernelSpec: bounded potential needs nu > " +
                           std::to_string(threshold) + " for finite moments");
    return KernelSpec{jt, ell, Potential::Bounded, 1.0, nu};
}

double KernelSpec::bounded_nu_threshold(const JordanType& jt, int ell) {
    KeplerRank kr = derive_invariants(jt, ell);
    return kr.d_ell / ell + 0.5 * jt.a * (ell - 1);
}

LogValue moments_flat(const KernelSpec& spec, const Partition& mu) {
    if (spec.potential != KernelSpec::Potential::Flat)
        throw domain_error("moments_flat: spec is not a flat potential");
    const KeplerRank kr = spec.rank_data();
    const double lam = spec.lambda_exp;
    const double w = mu.weight();
    LogValue out = radial_constant_log(spec.jt, spec.ell);
    out.log_abs += kr.d_ell * std::log(lam);
    out *= log_gindikin_gamma(spec.ell, spec.jt.a, mu, kr.d_ell / spec.ell);
    out.log_abs -= (kr.d_ell + w / lam) * std::log(spec.nu);
    out *= log_gamma_signed(kr.d_ell + w / lam) / log_gamma_signed(kr.d_ell + w);
    return out;
}

LogValue moments_bounded(const KernelSpec& spec, const Partition& mu) {
    if (spec.potential != KernelSpec::Potential::Bounded)
        throw domain_error("moments_bounded: spec is not a bounded potential");
    const KeplerRank kr = spec.rank_data();
    LogValue out = radial_constant_log(spec.jt, spec.ell);
    out *= log_gindikin_gamma(spec.ell, spec.jt.a, spec.nu - kr.d_ell / spec.ell);
    out *= log_gindikin_gamma(spec.ell, spec.jt.a, mu, kr.d_ell / spec.ell);
    out /= log_gindikin_gamma(spec.ell, spec.jt.a, mu, spec.nu);
    return out;
}

LogValue moment(const KernelSpec& spec, const Partition& mu) {
    return spec.potential == KernelSpec::Potential::Flat ? moments_flat(spec, mu)
                                                         : moments_bounded(spec, mu);
}

MomentSequence moments_up_to(const KernelSpec& spec, int max_weight) {
    MomentSequence seq;
    for (const Partition& mu : partitions_up_to(max_weight, spec.ell)) {
        LogValue s = moment(spec, mu);
        require_positive_moment(s, mu);
        seq.sigma.emplace(mu, s);
    }
    return seq;
}

double moment_quadrature(const KernelSpec& spec, const Partition& mu) {
    if (spec.ell > 2)
        throw domain_error("moment_quadrature: quadrature oracle covers ell <= 2 only");
    RadialDensity rd = spec.potential == KernelSpec::Potential::Flat
                           ? RadialDensity::flat(spec.jt, spec.ell, spec.lambda_exp, spec.nu)
                           : RadialDensity::bounded(spec.jt, spec.ell, spec.nu);
    const double a = spec.jt.a;
    const double abs_tol = 1e-13;
    const double rel_tol = spec.ell == 1 ? 1e-9 : 1e-7;
    // L_c-invariant integrand: the group average of the conical function is
    // the spherical polynomial, so the ratio uses Phi_mu directly.
    auto f_mu = [&](const std::vector<double>& t) {
        return spherical_phi_log(mu, t, a).to_double();
    };
    auto f_one = [](const std::vector<double>&) { return 1.0; };
    double num = eigenvalue_quadrature(f_mu, rd, spec.ell, abs_tol, rel_tol);
    double den = eigenvalue_quadrature(f_one, rd, spec.ell, abs_tol, rel_tol);
    if (!(den > 0.0)) throw accuracy_error("moment_quadrature: vanishing normalization");
    return num / den;
}

LogValue kernel_coeff_direct(const KernelSpec& spec, const Partition& mu) {
    const KeplerRank kr = spec.rank_data();
    LogValue sigma = moment(spec, mu);
    require_positive_moment(sigma, mu);
    LogValue a_ratio = universal_eigenvalue(mu, spec.jt, spec.ell) /
                       universal_eigenvalue(Partition{}, spec.jt, spec.ell);
    return pochhammer_partition(kr.dprime_ell / spec.ell, mu, spec.jt.a, spec.ell) *
           a_ratio / sigma;
}

LogValue kernel_coeff_spectral(const KernelSpec& spec, const Partition& mu) {
    const KeplerRank kr = spec.rank_data();
    LogValue sigma = moment(spec, mu);
    require_positive_moment(sigma, mu);
    return radial_constant_log(spec.jt, spec.ell) *
           universal_eigenvalue(mu, spec.jt, spec.ell) *
           log_gindikin_gamma(spec.ell, spec.jt.a, mu, kr.dprime_ell / spec.ell) / sigma;
}

namespace {

void check_kernel_domain(const KernelSpec& spec, const DiagonalPoint& t) {
    if (t.length() != spec.ell)
        throw domain_error("kernel: point length must equal ell");
    for (double x : t.t) {
        if (!(x > 0.0)) throw domain_error("kernel: t must lie in the open cone");
        if (spec.potential == KernelSpec::Potential::Bounded && !(x < 1.0))
            throw domain_error("kernel: bounded potential needs t_i < 1");
    }
}

using CoeffFn = LogValue (*)(const KernelSpec&, const Partition&);

SeriesResult kernel_sum(const KernelSpec& spec, const DiagonalPoint& t,
                        const SeriesControl& ctl, CoeffFn coeff) {
    check_kernel_domain(spec, t);
    ScaledSum total;
    SeriesResult res;
    int small_streak = 0;
    for (int k = 0; k <= ctl.max_degree; ++k) {
        ScaledSum shell;
        for (const Partition& mu : partitions_of_weight(k, spec.ell)) {
            LogValue term = coeff(spec, mu) * fock_component_log(mu, t.t, spec.jt.a);
            shell.add_log(term.log_abs, term.sign);
        }
        double shell_log = shell.magnitude_log();
        total.add(shell);
        res.degrees_used = k;
        res.last_shell = std::exp(shell_log); // may flush to 0/inf harmlessly
        bool small = shell_log <=
                     std::max(std::log(ctl.abs_tol),
                              total.magnitude_log() + std::log(ctl.rel_tol));
        if (k >= 1 && small) {
            if (++small_streak >= 2) {
                res.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    res.log_value = total.log_value();
    res.value = res.log_value.to_double();
    return res;
}

} // namespace

SeriesResult kernel_diag(const KernelSpec& spec, const DiagonalPoint& t,
                         const SeriesControl& ctl) {
    return kernel_sum(spec, t, ctl, &kernel_coeff_direct);
}

SeriesResult kernel_spectral(const KernelSpec& spec, const DiagonalPoint& t,
                             const SeriesControl& ctl) {
    return kernel_sum(spec, t, ctl, &kernel_coeff_spectral);
}

SeriesResult closed_form_flat(const KernelSpec& spec, const DiagonalPoint& t,
                              const SeriesControl& ctl) {
    if (spec.potential != KernelSpec::Potential::Flat)
        throw domain_error("closed_form_flat: spec is not a flat potential");
    check_kernel_domain(spec, t);
    const KeplerRank kr = spec.rank_data();
    const double lam = spec.lambda_exp;
    const double nu = spec.nu;

    if (spec.ell == 1) {
        // (nu/lambda)^{p-1} E_{1/lambda, p-1}(nu^{1/lambda} t); d_1 = p - 1
        SeriesResult ml =
            mittag_leffler(1.0 / lam, kr.d_ell, std::pow(nu, 1.0 / lam) * t.t[0], ctl);
        double pref = std::pow(nu / lam, kr.d_ell);
        ml.value *= pref;
        ml.last_shell *= pref;
        ml.log_value = LogValue::from_double(ml.value);
        return ml;
    }

    const double dp = kr.dprime_ell / spec.ell;
    const double dl = kr.d_ell / spec.ell;
    JordanType sub(spec.ell, spec.jt.a, 0.0);

    if (lam == 1.0) {
        std::vector<double> scaled(t.t);
        for (double& x : scaled) x *= nu;
        SeriesResult f = hyper_pFq({dp}, {dl}, DiagonalPoint::cone(scaled), sub, ctl);
        LogValue pref = log_gindikin_gamma(spec.ell, spec.jt.a, dp) /
                        log_gindikin_gamma(spec.ell, spec.jt.a, dl);
        pref.log_abs += kr.d_ell * std::log(nu);
        f.log_value = LogValue::from_double(f.value) * pref;
        f.value = f.log_value.to_double();
        f.last_shell *= pref.to_double();
        return f;
    }

    // general lambda: degree-weighted series in E^mu(nu^{1/lambda} t)
    std::vector<double> scaled(t.t);
    for (double& x : scaled) x *= std::pow(nu, 1.0 / lam);
    ScaledSum total;
    SeriesResult res;
    LogValue pref{kr.d_ell * std::log(nu / lam), +1};
    int small_streak = 0;
    for (int k = 0; k <= ctl.max_degree; ++k) {
        ScaledSum shell;
        for (const Partition& mu : partitions_of_weight(k, spec.ell)) {
            LogValue term = log_gindikin_gamma(spec.ell, spec.jt.a, mu, dp) /
                            log_gindikin_gamma(spec.ell, spec.jt.a, mu, dl);
            term *= log_gamma_signed(kr.d_ell + k) / log_gamma_signed(kr.d_ell + k / lam);
            term *= fock_component_log(mu, scaled, spec.jt.a);
            term *= pref;
            shell.add_log(term.log_abs, term.sign);
        }
        double shell_log = shell.magnitude_log();
        total.add(shell);
        res.degrees_used = k;
        res.last_shell = std::exp(shell_log);
        bool small = shell_log <= std::max(std::log(ctl.abs_tol),
                                           total.magnitude_log() + std::log(ctl.rel_tol));
        if (k >= 1 && small) {
            if (++small_streak >= 2) {
                res.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    res.log_value = total.log_value();
    res.value = res.log_value.to_double();
    return res;
}

SeriesResult closed_form_bounded(const KernelSpec& spec, const DiagonalPoint& t,
                                 const SeriesControl& ctl) {
    if (spec.potential != KernelSpec::Potential::Bounded)
        throw domain_error("closed_form_bounded: spec is not a bounded potential");
    check_kernel_domain(spec, t);
    const KeplerRank kr = spec.rank_data();
    const double dp = kr.dprime_ell / spec.ell;
    const double dl = kr.d_ell / spec.ell;
    LogValue pref = log_gindikin_gamma(spec.ell, spec.jt.a, spec.nu) *
                    log_gindikin_gamma(spec.ell, spec.jt.a, dp) /
                    (log_gindikin_gamma(spec.ell, spec.jt.a, spec.nu - dl) *
                     log_gindikin_gamma(spec.ell, spec.jt.a, dl));

    if (spec.ell == 1) {
        // [1/Gamma(nu+1-p)] sum_m Gamma(nu+m)/Gamma(p-1+m) t^m
        ScaledSum total;
        SeriesResult res;
        const double log_t = std::log(t.t[0]);
        LogValue norm = log_gamma_signed(spec.nu + 1.0 - spec.jt.genus());
        int small_streak = 0;
        for (int m = 0; m <= ctl.max_degree; ++m) {
            LogValue term = log_gamma_signed(spec.nu + m) / log_gamma_signed(kr.d_ell + m);
            term /= norm;
            term.log_abs += m * log_t;
            total.add_log(term.log_abs, term.sign);
            res.degrees_used = m;
            res.last_shell = term.to_double();
            bool small = term.log_abs <= std::max(std::log(ctl.abs_tol),
                                                  total.magnitude_log() +
                                                      std::log(ctl.rel_tol));
            if (m >= 1 && small) {
                if (++small_streak >= 2) {
                    res.converged = true;
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
        res.log_value = total.log_value();
        res.value = res.log_value.to_double();
        return res;
    }

    JordanType sub(spec.ell, spec.jt.a, 0.0);
    SeriesResult f = hyper_pFq({dp, spec.nu}, {dl}, t, sub, ctl);
    f.log_value = LogValue::from_double(f.value) * pref;
    f.value = f.log_value.to_double();
    f.last_shell *= pref.to_double();
    return f;
}

} // namespace kepler
