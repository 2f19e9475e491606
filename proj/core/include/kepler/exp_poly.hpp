#ifndef KEPLER_EXP_POLY_HPP
#define KEPLER_EXP_POLY_HPP

#include <map>

#include "kepler/dimension.hpp"

namespace kepler {

// Function of the form e^{s^lambda} * sum_q c_q s^q with exact rational
// exponents q.  Closed under d/ds and multiplication by rational powers
// of s, which is exactly what the rank-one operator chain needs: merging
// terms demands exact exponent collision, so exponents never touch
// floating point.
struct ExpPolyFunction {
    Rational lambda;               // exponent of the exponential, > 0
    std::map<Rational, double> terms;

    explicit ExpPolyFunction(Rational lambda_) : lambda(lambda_) {}

    void add_term(const Rational& q, double c);

    // multiply by s^alpha
    ExpPolyFunction mul_power(const Rational& alpha) const;

    // d/ds, using d/ds [c s^q e^{s^lambda}] = c q s^{q-1} + c lambda s^{q+lambda-1}
    ExpPolyFunction derivative() const;
    ExpPolyFunction derivative(int k) const;
};

} // namespace kepler

#endif
