#ifndef KEPLER_PIERI_HPP
#define KEPLER_PIERI_HPP

#include <map>

#include "kepler/jordan.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Coefficients C_nu of the expansion of N(e-x) E^mu(x) over the components
// E^nu, characterized by the Pochhammer identity
//   (gamma-1)_nu = sum_{mu subset nu} C_nu^mu (gamma)_mu    for all gamma.
// For a fixed nu, the unknown row {C_nu^mu} is recovered by sampling the
// identity at generic gamma values and solving the (consistent) least
// squares system; the support satisfies mu subset nu, |nu| <= |mu| + r.
//
// pieri_row: all C_nu^mu for a fixed nu (keys mu).
// pieri_coefficients: all C_nu^mu for a fixed mu (keys nu), |mu| <= 12.
std::map<Partition, double> pieri_row(const Partition& nu, const JordanType& jt);
std::map<Partition, double> pieri_coefficients(const Partition& mu, const JordanType& jt);

// Residual of the identity at a held-out gamma for the given row.
double pieri_residual(const Partition& nu, const std::map<Partition, double>& row,
                      const JordanType& jt, double gamma);

} // namespace kepler

#endif
