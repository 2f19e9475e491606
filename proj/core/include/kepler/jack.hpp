#ifndef KEPLER_JACK_HPP
#define KEPLER_JACK_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "kepler/jordan.hpp"
#include "kepler/log_value.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Point on the diagonal of a symmetric cone: a vector of eigenvalues.
struct DiagonalPoint {
    enum class Domain { Cone, Bounded, Free };

    std::vector<double> t;
    Domain domain = Domain::Free;

    DiagonalPoint() = default;
    DiagonalPoint(std::vector<double> t_, Domain d = Domain::Free);

    int length() const { return static_cast<int>(t.size()); }
    double sum() const;
    double product() const;
    double max_abs() const;

    static DiagonalPoint cone(std::vector<double> t);
    static DiagonalPoint bounded(std::vector<double> t);
    static DiagonalPoint free(std::vector<double> t);
};

// Spherical polynomial Phi_mu at the eigenvalue vector t, for Peirce
// multiplicity a.  Realized as the Jack polynomial with parameter
// alpha = 2/a in len(t) variables, normalized so Phi_mu(1,...,1) = 1.
// Symmetric in t, homogeneous of degree |mu|.
double spherical_phi(const Partition& mu, const DiagonalPoint& t, double a);

// Overflow-safe form: log |Phi_mu(t)| with sign (the value itself can
// exceed double range for large |mu| and large entries).
LogValue spherical_phi_log(const Partition& mu, std::span<const double> t, double a);

// Diagonal Fischer-Fock component E^mu(sqrt t, sqrt t).  Restricted to
// rank-ell points this depends only on the multiplicity a:
//   E^mu = [d^c_mu / (1 + (a/2)(ell-1))_mu] Phi_mu(t),   ell = len(t),
// where d^c_mu is the tube-type dimension of rank ell.  The equivalent
// ambient-type form [d_mu / (d/r)_mu] Phi^{(r)}_mu(t padded) gives the
// same number; jt is used for validation and the (d/r)_mu pole check.
double fock_component(const Partition& mu, const DiagonalPoint& t, const JordanType& jt);

// Log-space Fock component in ell = len(t) variables, multiplicity a.
LogValue fock_component_log(const Partition& mu, std::span<const double> t, double a);

// Value of the Jack polynomial P_mu^{(alpha)} at (1,...,1) (n variables),
// by the arm/leg product formula.
double jack_p_at_ones(const Partition& mu, int n, double alpha);

// Monomial-expansion evaluation of P_mu^{(alpha)}(t); mainly exposed for
// tests, general callers want spherical_phi.
double jack_p(const Partition& mu, std::span<const double> t, double alpha);

// Cache control (coefficient tables and point values).  The budget can be
// set through the CACHE_MB environment variable or explicitly; tables are
// dropped wholesale when the estimate exceeds the budget.
struct JackCacheStats {
    size_t coeff_tables = 0;
    size_t value_entries = 0;
    size_t bytes_estimate = 0;
};
JackCacheStats jack_cache_stats();
void jack_cache_set_budget_mb(size_t mb);
void jack_cache_clear();

} // namespace kepler

#endif
