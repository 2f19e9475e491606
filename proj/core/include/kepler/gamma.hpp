#ifndef KEPLER_GAMMA_HPP
#define KEPLER_GAMMA_HPP

#include <span>
#include <vector>

#include "kepler/log_value.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Gindikin-Koecher Gamma function of rank r with Peirce multiplicity a,
//   Gamma_r(s) = (2 pi)^{r(r-1)a/4} prod_{j=1..r} Gamma(s_j - (j-1) a/2),
// evaluated in log space.  Throws pole_error (carrying the 1-based factor
// index) when some factor sits at a nonpositive integer.
LogValue log_gindikin_gamma(int r, double a, std::span<const double> s);

// Gamma_r(nu): all arguments equal to the scalar nu.
LogValue log_gindikin_gamma(int r, double a, double nu);

// Gamma_r(mu + nu): shifted arguments m_j + nu.
LogValue log_gindikin_gamma(int r, double a, const Partition& mu, double nu);

// Generalized Pochhammer symbol
//   (s)_mu = prod_j (s - (j-1) a/2)_{m_j} = Gamma_r(mu+s) / Gamma_r(s).
// Computed as the explicit factor product, so an exact zero factor yields
// sign = 0, never an error.
LogValue pochhammer_partition(double s, const Partition& mu, double a, int r);

// Plain double version of (s)_mu for small weights.
double pochhammer_partition_d(double s, const Partition& mu, double a, int r);

} // namespace kepler

#endif
