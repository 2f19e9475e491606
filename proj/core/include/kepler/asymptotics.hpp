#ifndef KEPLER_ASYMPTOTICS_HPP
#define KEPLER_ASYMPTOTICS_HPP

#include <map>
#include <span>
#include <vector>

#include "kepler/jack.hpp"
#include "kepler/jordan.hpp"
#include "kepler/kernels.hpp"
#include "kepler/log_value.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Truncated divergent expansion as data: per-partition coefficient products
// up to (and including) degree order+1, so evaluation can report the first
// omitted shell as the error proxy.  Asymptotic evaluators never report
// "converged".
struct AsymptoticSeries {
    int order = 0;
    std::map<Partition, double> terms; // coefficients for |mu| <= order+1
};

struct AsymptoticValue {
    double value = 0.0;
    double first_omitted = 0.0; // magnitude of the degree order+1 shell
};

// Coefficient tables (d/r-lambda)_mu (beta-lambda)_mu, and the 2F1 variant
// divided by (d/r+beta-lambda-nu)_mu.
AsymptoticSeries asympt_1f1_terms(double lambda, double beta, const JordanType& jt,
                                  int order);
AsymptoticSeries asympt_2f1_terms(double lambda, double beta, double nu,
                                  const JordanType& jt, int order);

// Evaluate a coefficient table against E^mu at the argument point (already
// inverted / reflected by the caller-facing wrappers below).
AsymptoticValue evaluate_asymptotic(const AsymptoticSeries& series,
                                    std::span<const double> arg, double a);

// Truncated large-argument expansion of the confluent hypergeometric
// function on a rank-r cone:
//   Gamma_r(lambda)/Gamma_r(beta) 1F1(lambda; beta; t)
//     ~ e^{sum t} prod t_i^{lambda-beta}
//       * sum_{|mu|<=order} (d/r-lambda)_mu (beta-lambda)_mu E^mu(t^{-1}).
// Returns the right-hand side; multiply by Gamma_r(beta)/Gamma_r(lambda)
// for the 1F1 approximation itself.  Divergent-series semantics: no
// convergence flag, the first omitted shell is the error proxy.
double asympt_1f1(double lambda, double beta, const DiagonalPoint& t,
                  const JordanType& jt, int order);

// Just the bracketed partition sum at t^{-1} (the normalized expansion).
double asympt_1f1_series(double lambda, double beta, const DiagonalPoint& t,
                         const JordanType& jt, int order);

// Large-weight expansion of the Gauss hypergeometric function:
//   Gamma_r(lambda) Gamma_r(nu)/Gamma_r(beta) 2F1(lambda, nu; beta; y)
//     ~ Gamma_r(lambda-beta+nu) prod y_i^{lambda-beta} (1-y_i)^{-(lambda-beta+nu)}
//       * sum_{|mu|<=order} [(d/r-lambda)_mu (beta-lambda)_mu
//                            / (d/r+beta-lambda-nu)_mu] E^mu(e - y^{-1}).
// Returned in log scale: the Gamma_r(nu)-sized factors overflow double
// long before the interesting weights are reached.
LogValue asympt_2f1(double lambda, double beta, double nu, const DiagonalPoint& y,
                    const JordanType& jt, int order);

// The partition sum of the expansion above (a plain double; its terms are O(1)).
double asympt_2f1_series(double lambda, double beta, double nu, const DiagonalPoint& y,
                         const JordanType& jt, int order);

// Coefficients b_0..b_{p-2} of the rank-one distortion expansion
//   (lambda/nu)^{p-1} e^{-nu t^lambda} K^nu ~ sum_j b_j / (nu t^lambda)^j,
// obtained by pushing s^{(2-p)lambda} e^{s^lambda} through the rank-one
// operator chain symbolically and normalizing the leading coefficient
// lambda^{p-2} away, so b_0 = 1 exactly.  lambda must be a positive
// rational lambda_num/lambda_den (exact exponent arithmetic).
std::vector<double> rank1_kempf_coeffs(const JordanType& jt, long long lambda_num,
                                       long long lambda_den);

// Leading-order distortion ratio per weight: bounded potential
//   R(nu) = prod(1-t_i)^nu K^nu(sqrt t, sqrt t)
//           * Gamma_ell(nu-d_ell/ell) / (Gamma_ell(nu-d''_ell/ell) nu^{d''_ell}),
// flat potential (lambda = 1)
//   R(nu) = e^{-nu sum t} K^nu(sqrt t, sqrt t) / nu^{d_ell};
// both tend to 1 as nu grows.
struct TyzRow {
    double nu = 0.0;
    double ratio = 0.0;
};
std::vector<TyzRow> tyz_bounded_leading(const KernelSpec& spec, const DiagonalPoint& t,
                                        const std::vector<double>& nu_list,
                                        const SeriesControl& ctl);

// Leading term (1/A) s^{(1-B)/A} e^{s^{1/A}} of the Mittag-Leffler function.
double mittag_leffler_asympt(double A, double B, double s);

} // namespace kepler

#endif
