#ifndef KEPLER_KERNELS_HPP
#define KEPLER_KERNELS_HPP

#include <map>

#include "kepler/jack.hpp"
#include "kepler/jordan.hpp"
#include "kepler/log_value.hpp"
#include "kepler/partition.hpp"
#include "kepler/series.hpp"

namespace kepler {

// Weighted Bergman-type space on the rank-ell Kepler manifold: Kähler
// potential (flat power  (w|w)^lambda  or bounded log-Bergman), weight nu.
struct KernelSpec {
    enum class Potential { Flat, Bounded };

    JordanType jt;
    int ell = 1;
    Potential potential = Potential::Flat;
    double lambda_exp = 1.0; // Flat only
    double nu = 1.0;

    static KernelSpec flat(const JordanType& jt, int ell, double lambda_exp, double nu);
    static KernelSpec bounded(const JordanType& jt, int ell, double nu);

    KeplerRank rank_data() const { return derive_invariants(jt, ell); }

    // Smallest nu making the bounded moments pole-free:
    // nu > d_ell/ell + (a/2)(ell-1).
    static double bounded_nu_threshold(const JordanType& jt, int ell);
};

// Peter-Weyl moment sigma_mu of the flat-potential measure:
//   sigma_mu = lambda^{d_ell} C Gamma_ell(mu + d_ell/ell) / nu^{d_ell+|mu|/lambda}
//              * Gamma(d_ell+|mu|/lambda) / Gamma(d_ell+|mu|),
// with C = Gamma_ell(a ell/2) / (Gamma_ell(d/r) Gamma_ell(a r/2)).
LogValue moments_flat(const KernelSpec& spec, const Partition& mu);

// Bounded-potential moment:
//   sigma_mu = C Gamma_ell(nu - d_ell/ell) Gamma_ell(mu + d_ell/ell) / Gamma_ell(mu + nu).
LogValue moments_bounded(const KernelSpec& spec, const Partition& mu);

// Dispatch on the potential.
LogValue moment(const KernelSpec& spec, const Partition& mu);

struct MomentSequence {
    std::map<Partition, LogValue> sigma;
};
MomentSequence moments_up_to(const KernelSpec& spec, int max_weight);

// Numerical moment ratio sigma_mu / sigma_0 by eigenvalue quadrature
// against the radial density (ell <= 2); the independent cross-check of
// the Gamma formulas above.
double moment_quadrature(const KernelSpec& spec, const Partition& mu);

// Peter-Weyl coefficient of E^mu in the diagonal kernel (direct route):
//   (d'_ell/ell)_mu / sigma_mu * A_mu/A_0.
LogValue kernel_coeff_direct(const KernelSpec& spec, const Partition& mu);

// Same coefficient through the spectral route:
//   C * A_mu * Gamma_ell(mu + d'_ell/ell) / sigma_mu.
LogValue kernel_coeff_spectral(const KernelSpec& spec, const Partition& mu);

// Diagonal kernel value K(sqrt t, sqrt t) = sum_mu coeff_mu E^mu(t) summed
// by degree shells (t is the squared point; its entries live in the cone,
// and additionally below 1 for the bounded potential).
SeriesResult kernel_diag(const KernelSpec& spec, const DiagonalPoint& t,
                         const SeriesControl& ctl);

// Spectral evaluation of the same kernel with coefficients from
// kernel_coeff_spectral; kernel_diag and kernel_spectral agree identically
// and form the two-route consistency check.
SeriesResult kernel_spectral(const KernelSpec& spec, const DiagonalPoint& t,
                             const SeriesControl& ctl);

// Inner closed form F of the kernel before the universal operator acts:
// flat lambda = 1:  nu^{d_ell} [Gamma_ell(d'_ell/ell)/Gamma_ell(d_ell/ell)]
//               * 1F1(d'_ell/ell; d_ell/ell; nu t);
// general lambda by the degree-weighted series; rank one through the
// Mittag-Leffler form (nu/lambda)^{p-1} E_{1/lambda, p-1}(nu^{1/lambda} t).
SeriesResult closed_form_flat(const KernelSpec& spec, const DiagonalPoint& t,
                              const SeriesControl& ctl);

// Bounded potential:
//   [Gamma_ell(nu) Gamma_ell(d'_ell/ell) / (Gamma_ell(nu-d_ell/ell) Gamma_ell(d_ell/ell))]
//   * 2F1(d'_ell/ell, nu; d_ell/ell; t),  max t_i < 1.
SeriesResult closed_form_bounded(const KernelSpec& spec, const DiagonalPoint& t,
                                 const SeriesControl& ctl);

} // namespace kepler

#endif
