#include "kepler/series.hpp"

#include <cmath>

#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"

namespace kepler {

SeriesControl::SeriesControl(int max_degree_, double abs_tol_, double rel_tol_)
    : max_degree(max_degree_), abs_tol(abs_tol_), rel_tol(rel_tol_) {
    if (max_degree < 0) throw domain_error("SeriesControl: max_degree must be >= 0");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw domain_error("SeriesControl: tolerances must be positive");
}

namespace {

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

bool shell_small(double shell, double total, const SeriesControl& ctl) {
    return std::fabs(shell) <= std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(total));
}

} // namespace

SeriesResult hyper_pFq(const std::vector<double>& num, const std::vector<double>& den,
                       const DiagonalPoint& t, const JordanType& jt,
                       const SeriesControl& ctl) {
    const int ell = t.length();
    if (ell != jt.r)
        throw domain_error("hyper_pFq: point length must equal the rank of jt");
    const size_t p = num.size(), q = den.size();
    if (p == q + 1 && !(t.max_abs() < 1.0))
        throw domain_error("hyper_pFq: p = q+1 series needs spectral radius < 1");
    if (p > q + 1 && !ctl.allow_formal)
        throw parameter_error("hyper_pFq: p > q+1 has empty convergence domain; "
                              "request the formal sum explicitly");

    KahanSum total;
    SeriesResult res;
    int small_streak = 0;
    for (int k = 0; k <= ctl.max_degree; ++k) {
        KahanSum shell;
        for (const Partition& mu : partitions_of_weight(k, ell)) {
            LogValue coeff = LogValue::one();
            for (double aprm : num) coeff *= pochhammer_partition(aprm, mu, jt.a, jt.r);
            if (coeff.is_zero()) continue;
            for (double bprm : den) {
                LogValue dp = pochhammer_partition(bprm, mu, jt.a, jt.r);
                if (dp.is_zero())
                    throw parameter_error("hyper_pFq: denominator Pochhammer vanishes at " +
                                          mu.to_string());
                coeff /= dp;
            }
            LogValue term = coeff * fock_component_log(mu, t.t, jt.a);
            shell.add(term.to_double());
        }
        total.add(shell.sum);
        res.last_shell = shell.sum;
        res.degrees_used = k;
        if (shell_small(shell.sum, total.sum, ctl)) {
            if (++small_streak >= 2 && k >= 1) {
                res.converged = (p <= q + 1);
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    res.value = total.sum;
    res.log_value = LogValue::from_double(total.sum);
    return res;
}

SeriesResult mittag_leffler(double A, double B, double s, const SeriesControl& ctl) {
    if (!(A > 0.0)) throw domain_error("mittag_leffler: A must be positive");
    KahanSum total;
    SeriesResult res;
    int small_streak = 0;
    const double log_abs_s = (s == 0.0) ? 0.0 : std::log(std::fabs(s));
    for (int m = 0; m <= ctl.max_degree; ++m) {
        double arg = A * m + B;
        double term;
        if (arg <= 0.0 && arg == std::floor(arg)) {
            term = 0.0; // 1/Gamma at a pole
        } else if (s == 0.0 && m > 0) {
            term = 0.0;
        } else {
            LogValue g = log_gamma_signed(arg);
            double log_term = m * log_abs_s - g.log_abs;
            int sign = g.sign * ((s < 0.0 && m % 2 == 1) ? -1 : 1);
            term = sign * std::exp(log_term);
        }
        total.add(term);
        res.last_shell = term;
        res.degrees_used = m;
        if (m >= 1 && shell_small(term, total.sum, ctl)) {
            if (++small_streak >= 2) {
                res.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    res.value = total.sum;
    res.log_value = LogValue::from_double(total.sum);
    return res;
}

} // namespace kepler
