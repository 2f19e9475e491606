#ifndef KEPLER_MEASURES_HPP
#define KEPLER_MEASURES_HPP

#include <functional>

#include "kepler/jack.hpp"
#include "kepler/jordan.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Radial densities on the eigenvalue simplex of the rank-ell cone, written
// against Lebesgue measure dt; the eigenvalue Jacobian prod |t_i - t_j|^a
// is applied separately in the quadrature layer.  N(t) = prod t_i,
// (t|c) = sum t_i.
struct RadialDensity {
    enum class Kind { Riemann, FlatPotential, BoundedPotential, Invariant };

    Kind kind = Kind::Riemann;
    JordanType jt;
    int ell = 1;
    double lambda_exp = 1.0; // FlatPotential only
    double nu = 1.0;         // FlatPotential / BoundedPotential

    static RadialDensity riemann(const JordanType& jt, int ell);
    static RadialDensity flat(const JordanType& jt, int ell, double lambda_exp, double nu);
    static RadialDensity bounded(const JordanType& jt, int ell, double nu);
    // Polar form of the group-invariant measure (tube type only).  For the
    // record: when p - a*ell = 2k is even, the invariant holomorphic
    // top-form reads N_c(u)^{a(r-ell)-k} du ^ dv in the Peirce chart; only
    // the radial density below is modeled here.  The Riemann-to-invariant
    // density ratio is N_c(t)^{(p - a*ell)/2} with constant exactly 1.
    static RadialDensity invariant(const JordanType& jt, int ell);
};

// Density value at a diagonal point (domain-checked).
double radial_density(const RadialDensity& rd, const DiagonalPoint& t);

// Reduced volume |M_ell| / pi^{d''_ell} of the rank-ell Peirce manifold:
//   Gamma_ell(d'_ell/ell) Gamma_ell(a ell/2) / (Gamma_ell(d/r) Gamma_ell(a r/2))
double peirce_volume(const JordanType& jt, int ell);

// Volume |S_ell| of the manifold of rank-ell tripotents as a Riemannian
// submanifold: 2^{d'_ell} [Gamma_ell(a ell/2)/(Gamma_ell(d/r) Gamma_ell(ar/2))] pi^{d_ell}.
double tripotent_volume(const JordanType& jt, int ell);

// Reduced volume |Z^|/pi^d of the conformal compactification:
//   Gamma_r(d'/r) / Gamma_r(p).
double conformal_volume(const JordanType& jt);

// Adaptive quadrature of f(t) * density(t) * prod_{i<j} (t_i - t_j)^a over
// the ordered eigenvalue simplex t_1 > ... > t_ell (> 0, and < 1 for the
// bounded density).  Only ell <= 2 is supported; used in ratio mode, so
// the frame-measure constant cancels against the f = 1 normalization.
double eigenvalue_quadrature(const std::function<double(const std::vector<double>&)>& f,
                             const RadialDensity& density, int ell,
                             double abs_tol = 1e-11, double rel_tol = 1e-9);

} // namespace kepler

#endif
