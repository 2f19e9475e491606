#ifndef KEPLER_DIMENSION_HPP
#define KEPLER_DIMENSION_HPP

#include <vector>

#include "kepler/gamma.hpp"
#include "kepler/jordan.hpp"
#include "kepler/log_value.hpp"
#include "kepler/partition.hpp"

namespace kepler {

// Exact rational on __int128, wide enough for every Peter-Weyl dimension
// handled by the integer-arithmetic test paths (values stay far below 2^100).
struct Rational {
    __int128 num = 0;
    __int128 den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(__int128 n, __int128 d);

    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    bool is_integer() const { return den == 1; }
    long long as_int() const;
    double as_double() const;
};

// 'Tube type' dimension d'_mu of the Peter-Weyl space attached to mu in a
// rank-r algebra with multiplicity a:
//   d'_mu = prod_{i<j} [ (m_i-m_j+(a/2)(j-i)) / ((a/2)(j-i)) ]
//                    * [ (m_i-m_j+1+(a/2)(j-i-1))_{a-1} / ((1+(a/2)(j-i-1))_{a-1} ]
// Real a is evaluated in log space; exact path requires integer a >= 1.
double dim_tube(const Partition& mu, double a, int r);
Rational dim_tube_exact(const Partition& mu, long long a, int r);

// Full dimension d_mu = [(d/r)_mu / (d'/r)_mu] d'_mu, with
// d'/r = 1 + (a/2)(r-1).  Exact path requires integer a and b.
double dim_full(const Partition& mu, const JordanType& jt);
Rational dim_full_exact(const Partition& mu, const JordanType& jt);

// Eigenvalue of the universal invariant operator of the rank-ell Kepler
// manifold on the Peter-Weyl component mu:
//   A_mu = Gamma_ell(mu+d/r) Gamma_ell(mu+ar/2)
//        / (Gamma_ell(mu+d'_ell/ell) Gamma_ell(mu+a ell/2)).
// Requires len(mu) <= ell; Gamma poles propagate as pole_error.
LogValue universal_eigenvalue(const Partition& mu, const JordanType& jt, int ell);

// One first-order factor of the universal operator:
//   <lambda + (a/2)(ell-1)>^mu = prod_{i=1..ell} (lambda + (a/2)(ell-1) + m_i - (a/2)(i-1)).
double bracket_eigenvalue(double lambda, const Partition& mu, double a, int ell);

// The lambda-list of the factorization of the universal operator into
// first-order pieces; the product of bracket_eigenvalue over this list is
// A_mu.  Requires integer a >= 1 and integer b >= 0.
std::vector<double> universal_factor_list(const JordanType& jt, int ell);

// Exact binomial coefficient C(n, k).
Rational binomial_exact(long long n, long long k);

} // namespace kepler

#endif
