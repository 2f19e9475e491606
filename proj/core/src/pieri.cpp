#include "kepler/pieri.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"

namespace kepler {

namespace {

// partitions mu with mu subset nu and |mu| >= |nu| - r (the support of the
// row identity), largest weight first
std::vector<Partition> row_support(const Partition& nu, int r) {
    std::vector<Partition> out;
    const int min_w = std::max(0, nu.weight() - r);
    for (int w = nu.weight(); w >= min_w; --w) {
        for (const Partition& mu : partitions_of_weight(w, nu.length())) {
            if (mu.contained_in(nu)) out.push_back(mu);
        }
    }
    return out;
}

// monomial coefficients of (gamma + shift)-factor products:
// (s)_mu as a polynomial in s is prod_j prod_{i=0}^{m_j-1} (s + i - (j-1) a/2)
std::vector<long double> poch_poly(const Partition& mu, double a, double base_shift) {
    std::vector<long double> coeffs{1.0L};
    for (int j = 1; j <= mu.length(); ++j) {
        for (int i = 0; i < mu.part(j); ++i) {
            long double c = base_shift + i - 0.5L * a * (j - 1);
            std::vector<long double> next(coeffs.size() + 1, 0.0L);
            for (size_t k = 0; k < coeffs.size(); ++k) {
                next[k] += coeffs[k] * c;
                next[k + 1] += coeffs[k];
            }
            coeffs.swap(next);
        }
    }
    return coeffs;
}

// The identity (gamma-1)_nu = sum_mu C_nu^mu (gamma)_mu is polynomial in
// gamma of degree |nu|; matching monomial coefficients gives an exact,
// generally underdetermined but always consistent linear system.  Solved
// by full-pivot elimination; free coefficients are set to zero, which
// keeps the result deterministic and the identity exact.
std::vector<double> solve_identity(const std::vector<Partition>& support,
                                   const Partition& nu, double a) {
    const size_t rows = static_cast<size_t>(nu.weight()) + 1;
    const size_t cols = support.size();
    std::vector<std::vector<long double>> A(rows, std::vector<long double>(cols, 0.0L));
    for (size_t j = 0; j < cols; ++j) {
        auto poly = poch_poly(support[j], a, 0.0);
        for (size_t k = 0; k < poly.size(); ++k) A[k][j] = poly[k];
    }
    std::vector<long double> b(rows, 0.0L);
    {
        auto poly = poch_poly(nu, a, -1.0);
        for (size_t k = 0; k < poly.size(); ++k) b[k] = poly[k];
    }
    // row scaling for the pivot search
    std::vector<long double> row_scale(rows, 1.0L);
    for (size_t i = 0; i < rows; ++i) {
        long double mx = fabsl(b[i]);
        for (size_t j = 0; j < cols; ++j) mx = std::max(mx, fabsl(A[i][j]));
        if (mx > 0) row_scale[i] = mx;
    }

    std::vector<int> pivot_col_of_row(rows, -1);
    std::vector<bool> col_used(cols, false), row_used(rows, false);
    size_t rank = 0;
    for (size_t step = 0; step < std::min(rows, cols); ++step) {
        size_t pr = rows, pc = cols;
        long double best = 0.0L;
        for (size_t i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                long double v = fabsl(A[i][j]) / row_scale[i];
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows || best < 1e-14L) break;
        row_used[pr] = true;
        col_used[pc] = true;
        pivot_col_of_row[pr] = static_cast<int>(pc);
        ++rank;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || A[i][pc] == 0.0L) continue;
            long double f = A[i][pc] / A[pr][pc];
            for (size_t j = 0; j < cols; ++j) A[i][j] -= f * A[pr][j];
            A[i][pc] = 0.0L;
            b[i] -= f * b[pr];
        }
    }
    // consistency: eliminated right-hand side must vanish on pivot-free rows
    for (size_t i = 0; i < rows; ++i) {
        if (!row_used[i] && fabsl(b[i]) > 1e-9L * row_scale[i])
            throw accuracy_error("pieri: inconsistent identity row",
                                 static_cast<double>(fabsl(b[i])));
    }
    std::vector<double> x(cols, 0.0);
    for (size_t i = 0; i < rows; ++i) {
        if (pivot_col_of_row[i] >= 0) {
            size_t j = static_cast<size_t>(pivot_col_of_row[i]);
            x[j] = static_cast<double>(b[i] / A[i][j]);
        }
    }
    return x;
}

} // namespace

std::map<Partition, double> pieri_row(const Partition& nu, const JordanType& jt) {
    if (nu.length() > jt.r) throw domain_error("pieri_row: partition longer than rank");
    if (nu.weight() > 15)
        throw domain_error("pieri_row: |nu| <= 15 guard (elimination growth)");
    const std::vector<Partition> support = row_support(nu, jt.r);
    std::vector<double> x = solve_identity(support, nu, jt.a);
    std::map<Partition, double> row;
    for (size_t j = 0; j < support.size(); ++j) {
        if (x[j] != 0.0) row.emplace(support[j], x[j]);
    }
    // self-check at one generic point; the solve is exact up to rounding
    const double g = 3.716519876;
    double scale = std::max(1.0, std::fabs(pochhammer_partition_d(g - 1.0, nu, jt.a, jt.r)));
    double resid = pieri_residual(nu, row, jt, g);
    if (resid > 1e-10 * scale)
        throw accuracy_error("pieri_row: identity residual too large", resid);
    return row;
}

std::map<Partition, double> pieri_coefficients(const Partition& mu, const JordanType& jt) {
    if (mu.weight() > 12)
        throw domain_error("pieri_coefficients: |mu| <= 12 guard");
    if (mu.length() > jt.r)
        throw domain_error("pieri_coefficients: partition longer than rank");
    std::map<Partition, double> out;
    for (int w = mu.weight(); w <= mu.weight() + jt.r; ++w) {
        for (const Partition& nu : partitions_of_weight(w, jt.r)) {
            if (!mu.contained_in(nu)) continue;
            auto row = pieri_row(nu, jt);
            auto it = row.find(mu);
            if (it != row.end() && std::fabs(it->second) > 1e-11) out.emplace(nu, it->second);
        }
    }
    return out;
}

double pieri_residual(const Partition& nu, const std::map<Partition, double>& row,
                      const JordanType& jt, double gamma) {
    double lhs = pochhammer_partition_d(gamma - 1.0, nu, jt.a, jt.r);
    double rhs = 0.0;
    for (const auto& [mu, c] : row) rhs += c * pochhammer_partition_d(gamma, mu, jt.a, jt.r);
    return std::fabs(lhs - rhs);
}

} // namespace kepler
