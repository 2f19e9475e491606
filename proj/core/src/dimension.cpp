#include "kepler/dimension.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kepler/errors.hpp"

namespace kepler {

namespace {
__int128 gcd128(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}
} // namespace

Rational::Rational(__int128 n, __int128 d) : num(n), den(d) {
    if (den == 0) throw domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator*(const Rational& o) const {
    Rational a(num, o.den), b(o.num, den);
    return Rational(a.num * b.num, a.den * b.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw domain_error("Rational: division by zero");
    return *this * Rational(o.den, o.num);
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

long long Rational::as_int() const {
    if (den != 1) throw domain_error("Rational: not an integer");
    if (num > std::numeric_limits<long long>::max() ||
        num < std::numeric_limits<long long>::min())
        throw domain_error("Rational: integer overflow");
    return static_cast<long long>(num);
}

double Rational::as_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

namespace {

// Rising factorial of a rational base (num/2 arithmetic suffices for all
// classified multiplicities); n >= 0.
Rational rising_exact(const Rational& x, long long n) {
    Rational out(1);
    for (long long i = 0; i < n; ++i) out = out * (x + Rational(i));
    return out;
}

double rising_d(double x, long long n) {
    double out = 1.0;
    for (long long i = 0; i < n; ++i) out *= x + i;
    return out;
}

} // namespace

double dim_tube(const Partition& mu, double a, int r) {
    if (mu.length() > r) throw domain_error("dim_tube: partition longer than rank");
    double out = 1.0;
    for (int i = 1; i < r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            double diff = mu.part(i) - mu.part(j);
            out *= (diff + 0.5 * a * (j - i)) / (0.5 * a * (j - i));
            // (x)_{a-1} quotients via Gamma for non-integer a
            double top_base = diff + 1.0 + 0.5 * a * (j - i - 1);
            double bot_base = 1.0 + 0.5 * a * (j - i - 1);
            if (a == std::floor(a) && a >= 1.0) {
                long long ai = llround(a);
                out *= rising_d(top_base, ai - 1) / rising_d(bot_base, ai - 1);
            } else {
                out *= std::exp(std::lgamma(top_base + a - 1.0) - std::lgamma(top_base) -
                                std::lgamma(bot_base + a - 1.0) + std::lgamma(bot_base));
            }
        }
    }
    return out;
}

Rational dim_tube_exact(const Partition& mu, long long a, int r) {
    if (a < 1) throw domain_error("dim_tube_exact: need integer a >= 1");
    if (mu.length() > r) throw domain_error("dim_tube_exact: partition longer than rank");
    Rational out(1);
    for (int i = 1; i < r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            long long diff = mu.part(i) - mu.part(j);
            out = out * Rational(2 * diff + a * (j - i), a * (j - i));
            Rational top(2 * diff + 2 + a * (j - i - 1), 2);
            Rational bot(2 + a * (j - i - 1), 2);
            out = out * rising_exact(top, a - 1) / rising_exact(bot, a - 1);
        }
    }
    return out;
}

double dim_full(const Partition& mu, const JordanType& jt) {
    if (mu.length() > jt.r) throw domain_error("dim_full: partition longer than rank");
    double dr = jt.dim_over_rank();
    double dpr = jt.dim2_over_rank();
    double ratio =
        pochhammer_partition_d(dr, mu, jt.a, jt.r) / pochhammer_partition_d(dpr, mu, jt.a, jt.r);
    return ratio * dim_tube(mu, jt.a, jt.r);
}

Rational dim_full_exact(const Partition& mu, const JordanType& jt) {
    if (jt.a != std::floor(jt.a) || jt.b != std::floor(jt.b))
        throw domain_error("dim_full_exact: need integer a, b");
    long long a = llround(jt.a), b = llround(jt.b);
    if (mu.length() > jt.r) throw domain_error("dim_full_exact: partition longer than rank");
    // (d/r)_mu / (d'/r)_mu = prod_j (1 + (a/2)(r-j) + m_j)_b / (1 + (a/2)(r-j))_b
    Rational ratio(1);
    for (int j = 1; j <= jt.r; ++j) {
        Rational base(2 + a * (jt.r - j), 2);
        Rational shifted = base + Rational(mu.part(j));
        ratio = ratio * rising_exact(shifted, b) / rising_exact(base, b);
    }
    return ratio * dim_tube_exact(mu, a, jt.r);
}

LogValue universal_eigenvalue(const Partition& mu, const JordanType& jt, int ell) {
    if (ell < 1 || ell > jt.r) throw domain_error("universal_eigenvalue: ell out of range");
    if (mu.length() > ell)
        throw domain_error("universal_eigenvalue: partition longer than ell");
    KeplerRank kr = derive_invariants(jt, ell);
    LogValue num = log_gindikin_gamma(ell, jt.a, mu, jt.dim_over_rank()) *
                   log_gindikin_gamma(ell, jt.a, mu, 0.5 * jt.a * jt.r);
    LogValue den = log_gindikin_gamma(ell, jt.a, mu, kr.dprime_ell / ell) *
                   log_gindikin_gamma(ell, jt.a, mu, 0.5 * jt.a * ell);
    return num / den;
}

double bracket_eigenvalue(double lambda, const Partition& mu, double a, int ell) {
    if (mu.length() > ell)
        throw domain_error("bracket_eigenvalue: partition longer than ell");
    double shifted = lambda + 0.5 * a * (ell - 1);
    double out = 1.0;
    for (int i = 1; i <= ell; ++i) out *= shifted + mu.part(i) - 0.5 * a * (i - 1);
    return out;
}

std::vector<double> universal_factor_list(const JordanType& jt, int ell) {
    if (jt.a != std::floor(jt.a) || jt.b != std::floor(jt.b) || jt.a < 1.0)
        throw domain_error("universal_factor_list: needs integer a >= 1, integer b");
    long long a = llround(jt.a), b = llround(jt.b);
    std::vector<double> lambdas;
    for (long long t = 1; t <= b; ++t) lambdas.push_back(t + 0.5 * a * (jt.r - ell));
    for (int j = ell + 1; j <= jt.r; ++j) {
        lambdas.push_back(0.5 * a * (j - ell));
        for (long long s = 1; s <= a - 1; ++s) lambdas.push_back(s + 0.5 * a * (j - ell - 1));
    }
    return lambdas;
}

Rational binomial_exact(long long n, long long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out(1);
    for (long long i = 1; i <= k; ++i) out = out * Rational(n - k + i, i);
    return out;
}

} // namespace kepler
