#ifndef KEPLER_QUADRATURE_HPP
#define KEPLER_QUADRATURE_HPP

#include <functional>

namespace kepler {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval.  Bisects the interval
// with the largest local error until the summed estimate meets
// max(abs_tol, rel_tol*|value|); throws accuracy_error when the interval
// budget runs out first.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_intervals = 2000);

// Same on (a, +inf) through the rational substitution x = a + u/(1-u).
QuadResult integrate_gk_half_line(const std::function<double(double)>& f, double a,
                                  double abs_tol, double rel_tol,
                                  int max_intervals = 2000);

} // namespace kepler

#endif
