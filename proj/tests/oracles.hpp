// Test-only oracles: independent brute-force routes used to freeze expected
// values.  Nothing here may call the library code paths under test.
#ifndef KEPLER_TESTS_ORACLES_HPP
#define KEPLER_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

namespace oracles {

// scalar Kummer function by direct long double summation
inline double kummer_1f1(double a, double b, double z, int terms = 400) {
    long double sum = 0.0L, term = 1.0L;
    for (int m = 0; m < terms; ++m) {
        sum += term;
        term *= (a + m) / (b + m) * z / (m + 1.0L);
    }
    return static_cast<double>(sum);
}

// scalar Gauss function by direct summation, |z| < 1
inline double gauss_2f1(double a, double b, double c, double z, int terms = 2000) {
    long double sum = 0.0L, term = 1.0L;
    for (int m = 0; m < terms; ++m) {
        sum += term;
        term *= (a + m) * (b + m) / (c + m) * z / (m + 1.0L);
    }
    return static_cast<double>(sum);
}

// scalar Mittag-Leffler by direct summation
inline double mittag_leffler(double A, double B, double s, int terms = 400) {
    long double sum = 0.0L;
    for (int m = 0; m < terms; ++m) {
        double arg = A * m + B;
        if (arg <= 0.0 && arg == std::floor(arg)) continue;
        sum += static_cast<long double>(
            std::exp(m * std::log(std::fabs(s)) - std::lgamma(arg))) *
               ((s < 0 && m % 2) ? -1.0L : 1.0L);
    }
    return static_cast<double>(sum);
}

// truncated classical large-z Kummer expansion 2F0(p, q; 1/z)
inline double kummer_asympt_2f0(double p, double q, double inv_z, int order) {
    long double sum = 0.0L, term = 1.0L;
    for (int m = 0; m <= order; ++m) {
        sum += term;
        term *= (p + m) * (q + m) * inv_z / (m + 1.0L);
    }
    return static_cast<double>(sum);
}

// rising factorial
inline double rising(double x, int n) {
    double out = 1.0;
    for (int i = 0; i < n; ++i) out *= x + i;
    return out;
}

// the unique symmetric degree-1 polynomial normalized to 1 at (1,...,1)
inline double symmetric_degree1(const std::vector<double>& t) {
    double s = 0.0;
    for (double x : t) s += x;
    return s / static_cast<double>(t.size());
}

// Schur polynomial via the bialternant ratio of determinants,
// s_mu(x) = det(x_i^{mu_j + n - j}) / det(x_i^{n - j}), n <= 3
inline double schur_bialternant(const std::vector<int>& mu_padded,
                                const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    auto det = [n](const std::vector<std::vector<double>>& m) {
        if (n == 1) return m[0][0];
        if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    std::vector<std::vector<double>> num(n, std::vector<double>(n)),
        den(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            num[i][j] = std::pow(x[i], mu_padded[j] + n - 1 - j);
            den[i][j] = std::pow(x[i], n - 1 - j);
        }
    }
    return det(num) / det(den);
}

// dimension of the space of degree-m polynomials in n complex variables
inline long long poly_dimension(int n, int m) {
    // C(n+m-1, m)
    long long num = 1, den = 1;
    for (int i = 1; i <= m; ++i) {
        num *= n + m - i;
        den *= i;
    }
    return num / den;
}

} // namespace oracles

#endif
