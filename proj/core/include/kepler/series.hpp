#ifndef KEPLER_SERIES_HPP
#define KEPLER_SERIES_HPP

#include <vector>

#include "kepler/jack.hpp"
#include "kepler/jordan.hpp"
#include "kepler/log_value.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Truncation control shared by every partition series.
struct SeriesControl {
    int max_degree = 40;
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    // Permit parameter sets with empty convergence domain (p > q); such a
    // sum is a formal/asymptotic object and is never reported converged.
    bool allow_formal = false;

    SeriesControl() = default;
    SeriesControl(int max_degree_, double abs_tol_, double rel_tol_);
};

struct SeriesResult {
    double value = 0.0;
    // log-scale copy of the value; usable when value over/underflows double
    LogValue log_value = LogValue::zero();
    double last_shell = 0.0; // contribution of the last evaluated degree
    bool converged = false;
    int degrees_used = 0;
};

// Hypergeometric function of the symmetric cone of rank len(t):
//   pFq(num; den; t) = sum_mu [prod (num_i)_mu / prod (den_j)_mu] E^mu(t),
// summed by total-degree shells with compensated accumulation, stopping
// when two consecutive shells fall below tolerance.  len(t) must equal
// jt.r (pass the Peirce sub-type to evaluate on a smaller cone).
// Entire for p <= q; for p = q+1 requires max|t_i| < 1; for p > q the
// series is formal only and requires ctl.allow_formal.
SeriesResult hyper_pFq(const std::vector<double>& num, const std::vector<double>& den,
                       const DiagonalPoint& t, const JordanType& jt,
                       const SeriesControl& ctl);

// Generalized Mittag-Leffler function E_{A,B}(s) = sum_m s^m / Gamma(A m + B).
// A Gamma pole at some A m + B contributes a zero term, never an error.
SeriesResult mittag_leffler(double A, double B, double s, const SeriesControl& ctl);

} // namespace kepler

#endif
