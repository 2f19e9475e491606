#include "kepler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "kepler/asymptotics.hpp"
#include "kepler/dimension.hpp"
#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"
#include "kepler/jack.hpp"
#include "kepler/kernels.hpp"
#include "kepler/measures.hpp"
#include "kepler/pieri.hpp"
#include "kepler/series.hpp"

namespace kepler::verify {

void SuiteReport::check(const std::string& label, double measured, double threshold) {
    bool ok = std::isfinite(measured) && measured <= threshold;
    lines.push_back(CheckLine{label, measured, threshold, ok});
    pass = pass && ok;
}

namespace {

// log Gamma_rank^{(a)}(x); rank 0 is the empty product
double lg(int rank, double a, double x) {
    if (rank == 0) return 0.0;
    return log_gindikin_gamma(rank, a, x).log_abs;
}

double rel_gap(double x, double y) {
    double scale = std::max({std::fabs(x), std::fabs(y), 1e-300});
    return std::fabs(x - y) / scale;
}

// least-squares slope of log|e| against log s
double loglog_slope(const std::vector<double>& s, const std::vector<double>& e) {
    size_t n = s.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        double x = std::log(s[i]), y = std::log(std::max(e[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string fmt(const JordanType& jt) {
    std::ostringstream os;
    os << "(r=" << jt.r << ",a=" << jt.a << ",b=" << jt.b << ")";
    return os.str();
}

// --------------------------------------------------------------------------
// criterion 1: volume and Gamma-quotient identities of the classification
// --------------------------------------------------------------------------

SuiteReport suite_gamma_identities() {
    SuiteReport rep{"gamma-identities",
                    "Peirce-volume Gamma identities across all classified families", true, {}};
    const double tol = 1e-10;
    auto check_eq = [&](const std::string& label, double x, double y) {
        rep.check(label, std::fabs(x - y) / std::max(1.0, std::fabs(x)), tol);
    };

    // duplication formula: Gamma_2^{(1)}(x) = (2 pi)^{1/2} pi^{1/2} 2^{2-2x} Gamma(2x-1)
    for (double x : {1.5, 2.0, 3.25, 5.0}) {
        double lhs = lg(2, 1.0, x);
        double rhs = 0.5 * std::log(2.0 * M_PI) + 0.5 * std::log(M_PI) +
                     (2.0 - 2.0 * x) * std::log(2.0) + std::lgamma(2.0 * x - 1.0);
        check_eq("duplication x=" + std::to_string(x), lhs, rhs);
    }

    // symmetric matrices (a=1): reduced Peirce volume vs rank-2 Gamma chains
    for (int r = 2; r <= 6; ++r) {
        for (int ell = 1; ell < r; ++ell) {
            double A1 = lg(ell, 1, 0.5 * (ell + 1)) + lg(ell, 1, 0.5 * ell) -
                        lg(ell, 1, 0.5 * (r + 1)) - lg(ell, 1, 0.5 * r);
            double l2 = ell * (r - ell) * std::log(2.0);
            double A2 = l2 + lg(ell, 2, ell) - lg(ell, 2, r);
            double A3 = l2 + lg(r - ell, 2, r - ell) - lg(r - ell, 2, r);
            std::string tag = "sym r=" + std::to_string(r) + " ell=" + std::to_string(ell);
            check_eq(tag + " chain1", A1, A2);
            check_eq(tag + " chain2", A1, A3);
            // cross-check against the conformal volume of the Peirce 1-space
            int p = std::min(ell, r - ell), q = std::max(ell, r - ell);
            double conf = std::log(conformal_volume(JordanType(p, 2.0, double(q - p))));
            check_eq(tag + " conf", A1, l2 + conf);
            check_eq(tag + " peirce", A1,
                     std::log(peirce_volume(JordanType(r, 1.0, 0.0), ell)));
        }
    }

    // full matrices (a=2)
    for (auto [r, s] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {2, 5}, {3, 3}, {3, 4}, {4, 5}}) {
        for (int ell = 1; ell <= r; ++ell) {
            double B1 = 2 * lg(ell, 2, ell) - lg(ell, 2, s) - lg(ell, 2, r);
            double B2 = lg(ell, 2, ell) - lg(ell, 2, s) + lg(r - ell, 2, r - ell) -
                        lg(r - ell, 2, r);
            double B3 = lg(s - ell, 2, s - ell) - lg(s - ell, 2, s) +
                        lg(r - ell, 2, r - ell) - lg(r - ell, 2, r);
            std::string tag = "full " + std::to_string(r) + "," + std::to_string(s) +
                              " ell=" + std::to_string(ell);
            check_eq(tag + " chain1", B1, B2);
            check_eq(tag + " chain2", B1, B3);
            check_eq(tag + " peirce", B1,
                     std::log(peirce_volume(JordanType(r, 2.0, double(s - r)), ell)));
        }
    }

    // antisymmetric matrices (a=4), n = 2r + eps
    for (int n = 4; n <= 9; ++n) {
        int r = n / 2, eps = n % 2;
        for (int ell = 1; ell <= r; ++ell) {
            double C1 = lg(ell, 4, 2 * ell - 1) + lg(ell, 4, 2 * ell) -
                        lg(ell, 4, 2 * r - 1 + 2 * eps) - lg(ell, 4, 2 * r);
            double C2 = 0.0;
            for (int j = 1; j <= 2 * ell; ++j)
                C2 += std::lgamma(2.0 * ell + 1 - j) - std::lgamma(double(n) + 1 - j);
            double C3 = lg(2 * ell, 2, 2 * ell) - lg(2 * ell, 2, n);
            double C4 = lg(n - 2 * ell, 2, n - 2 * ell) - lg(n - 2 * ell, 2, n);
            std::string tag = "asym n=" + std::to_string(n) + " ell=" + std::to_string(ell);
            check_eq(tag + " chain1", C1, C2);
            check_eq(tag + " chain2", C1, C3);
            check_eq(tag + " chain3", C1, C4);
            check_eq(tag + " peirce", C1,
                     std::log(peirce_volume(JordanType(r, 4.0, 2.0 * eps), ell)));
        }
    }

    // spin factors: Peirce 1-space is the spin factor of dimension d-2
    for (int d = 5; d <= 12; ++d) {
        double D1 = std::log(peirce_volume(JordanType(2, d - 2.0, 0.0), 1));
        double D2 = lg(2, d - 4.0, 0.5 * d - 1.0) - lg(2, d - 4.0, d - 2.0);
        double D3 = std::log(conformal_volume(JordanType(2, d - 4.0, 0.0)));
        std::string tag = "spin d=" + std::to_string(d);
        check_eq(tag + " chain", D1, D2);
        check_eq(tag + " conf", D1, D3);
    }

    // exceptional, dim 16: Peirce 1-spaces asym:5 (ell=1) and spin:8 (ell=2)
    {
        JordanType exc16(2, 6.0, 4.0);
        check_eq("exc16 ell=1", std::log(peirce_volume(exc16, 1)),
                 std::log(conformal_volume(JordanType(2, 4.0, 2.0))));
        check_eq("exc16 ell=2", std::log(peirce_volume(exc16, 2)),
                 std::log(conformal_volume(JordanType(2, 6.0, 0.0))));
    }
    // exceptional, dim 27: Peirce 1-space is the dim-16 triple for ell = 1, 2
    {
        JordanType exc27(3, 8.0, 0.0);
        double conf16 = std::log(conformal_volume(JordanType(2, 6.0, 4.0)));
        check_eq("exc27 ell=1", std::log(peirce_volume(exc27, 1)), conf16);
        check_eq("exc27 ell=2", std::log(peirce_volume(exc27, 2)), conf16);
        check_eq("exc27 ell=1=2", std::log(peirce_volume(exc27, 1)),
                 std::log(peirce_volume(exc27, 2)));
    }

    // extreme case: reduced Peirce volume 1 at ell = r, b = 0
    for (const auto& jt : {JordanType(3, 1.0, 0.0), JordanType(2, 5.0, 0.0),
                           JordanType(3, 8.0, 0.0)}) {
        rep.check("reduced volume 1 at ell=r " + fmt(jt),
                  std::fabs(peirce_volume(jt, jt.r) - 1.0), tol);
    }

    // |S_ell| = |M_ell| (2 pi)^{d'_ell} / Gamma_ell(d'_ell/ell)
    for (const auto& jt : {JordanType(3, 2.0, 1.0), JordanType(2, 3.0, 0.0)}) {
        for (int ell = 1; ell <= jt.r; ++ell) {
            KeplerRank kr = derive_invariants(jt, ell);
            double lhs = std::log(tripotent_volume(jt, ell));
            double rhs = std::log(peirce_volume(jt, ell)) + kr.dsecond_ell * std::log(M_PI) +
                         kr.dprime_ell * std::log(2.0 * M_PI) -
                         lg(ell, jt.a, kr.dprime_ell / ell);
            check_eq("shilov " + fmt(jt) + " ell=" + std::to_string(ell), lhs, rhs);
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 2: Fischer-Fock expansion of the exponential
// --------------------------------------------------------------------------

SuiteReport suite_fock() {
    SuiteReport rep{"fock", "exponential and per-degree Fischer-Fock identities", true, {}};
    const std::map<int, std::vector<std::vector<double>>> points{
        {1, {{1.9}, {0.4}}},
        {2, {{1.7, 0.8}, {0.45, 0.2}}},
        {3, {{1.9, 0.6, 0.4}, {0.8, 0.5, 0.2}}}};
    for (int r = 1; r <= 3; ++r) {
        for (double a : {1.0, 2.0, 4.0}) {
            for (const auto& t : points.at(r)) {
                double trace = std::accumulate(t.begin(), t.end(), 0.0);
                double sum = 0.0;
                for (int k = 0; k <= 20; ++k) {
                    double shell = 0.0;
                    for (const Partition& mu : partitions_of_weight(k, r))
                        shell += fock_component_log(mu, t, a).to_double();
                    sum += shell;
                    if (k <= 8) {
                        double expected = std::pow(trace, k) / std::tgamma(k + 1.0);
                        std::ostringstream os;
                        os << "degree r=" << r << " a=" << a << " k=" << k;
                        rep.check(os.str(), rel_gap(shell, expected), 1e-10);
                    }
                }
                std::ostringstream os;
                os << "exp r=" << r << " a=" << a << " trace=" << trace;
                rep.check(os.str(), std::fabs(sum - std::exp(trace)), 1e-8);
            }
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 3: binomial expansion of N(e-t)^{lambda - d/r}
// --------------------------------------------------------------------------

SuiteReport suite_binomial() {
    SuiteReport rep{"binomial", "truncated binomial series against the product form", true, {}};
    struct Case {
        JordanType jt;
        std::vector<double> t;
    };
    const std::vector<Case> cases{
        {JordanType(2, 1.0, 0.0), {0.5, 0.3}},   {JordanType(2, 2.0, 1.0), {0.45, 0.2}},
        {JordanType(2, 4.0, 0.0), {0.5, 0.25}},  {JordanType(3, 1.0, 0.0), {0.5, 0.3, 0.15}},
        {JordanType(3, 2.0, 0.0), {0.4, 0.3, 0.1}}};
    for (const auto& c : cases) {
        double dr = c.jt.dim_over_rank();
        for (double lambda : {dr + 1.0, dr + 2.5}) {
            double sum = 0.0;
            for (int k = 0; k <= 30; ++k) {
                for (const Partition& mu : partitions_of_weight(k, c.jt.r)) {
                    LogValue coeff = pochhammer_partition(dr - lambda, mu, c.jt.a, c.jt.r);
                    if (coeff.is_zero()) continue;
                    sum += (coeff * fock_component_log(mu, c.t, c.jt.a)).to_double();
                }
            }
            double expected = 1.0;
            for (double x : c.t) expected *= std::pow(1.0 - x, lambda - dr);
            std::ostringstream os;
            os << "binomial " << fmt(c.jt) << " lambda=" << lambda;
            rep.check(os.str(), std::fabs(sum - expected), 1e-8);
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 4: dimension sums and the spin-factor harmonic oracle
// --------------------------------------------------------------------------

// rank over GF(p) of the holomorphic-Laplacian matrix from degree-m to
// degree-(m-2) monomials in nvars variables; full row rank certifies the
// kernel dimension #cols - #rows over the rationals
namespace laplace_oracle {

void enumerate_monomials(int nvars, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == nvars - 1) {
        int sum = std::accumulate(current.begin(), current.end(), 0);
        current.push_back(degree - sum);
        out.push_back(current);
        current.pop_back();
        return;
    }
    int sum = std::accumulate(current.begin(), current.end(), 0);
    for (int e = 0; e <= degree - sum; ++e) {
        current.push_back(e);
        enumerate_monomials(nvars, degree, current, out);
        current.pop_back();
    }
}

long long harmonic_dimension(int nvars, int m) {
    if (m < 2) {
        // Laplacian target space is trivial; everything is harmonic
        std::vector<std::vector<int>> basis;
        std::vector<int> cur;
        enumerate_monomials(nvars, m, cur, basis);
        return static_cast<long long>(basis.size());
    }
    std::vector<std::vector<int>> cols_basis, rows_basis;
    std::vector<int> cur;
    enumerate_monomials(nvars, m, cur, cols_basis);
    enumerate_monomials(nvars, m - 2, cur, rows_basis);

    std::map<std::vector<int>, int> row_index;
    for (size_t i = 0; i < rows_basis.size(); ++i) row_index[rows_basis[i]] = int(i);

    const long long P = 2147483647LL;
    const size_t nrows = rows_basis.size(), ncols = cols_basis.size();
    std::vector<std::vector<long long>> M(nrows, std::vector<long long>(ncols, 0));
    for (size_t c = 0; c < ncols; ++c) {
        for (int v = 0; v < nvars; ++v) {
            if (cols_basis[c][size_t(v)] < 2) continue;
            std::vector<int> target = cols_basis[c];
            long long coeff = 1LL * target[size_t(v)] * (target[size_t(v)] - 1);
            target[size_t(v)] -= 2;
            M[size_t(row_index.at(target))][c] = coeff % P;
        }
    }
    // Gaussian elimination mod P
    auto inv_mod = [&](long long x) {
        long long e = P - 2, base = x % P, acc = 1;
        while (e) {
            if (e & 1) acc = (__int128(acc) * base) % P;
            base = (__int128(base) * base) % P;
            e >>= 1;
        }
        return acc;
    };
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < nrows; ++c) {
        size_t pivot = rank;
        while (pivot < nrows && M[pivot][c] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(M[pivot], M[rank]);
        long long inv = inv_mod(M[rank][c]);
        for (size_t cc = c; cc < ncols; ++cc)
            M[rank][cc] = (__int128(M[rank][cc]) * inv) % P;
        for (size_t rr = 0; rr < nrows; ++rr) {
            if (rr == rank || M[rr][c] == 0) continue;
            long long f = M[rr][c];
            for (size_t cc = c; cc < ncols; ++cc) {
                M[rr][cc] = (M[rr][cc] - (__int128(f) * M[rank][cc]) % P + P) % P;
            }
        }
        ++rank;
    }
    return static_cast<long long>(ncols) - static_cast<long long>(rank);
}

} // namespace laplace_oracle

SuiteReport suite_dimsum() {
    SuiteReport rep{"dimsum", "exact dimension sums and the harmonic oracle", true, {}};
    for (const auto& entry : classified_table()) {
        long long d = llround(entry.jt.dim());
        if (d > 16) continue;
        for (int k = 1; k <= 8; ++k) {
            Rational sum(0);
            for (const Partition& mu : partitions_of_weight(k, entry.jt.r))
                sum = sum + dim_full_exact(mu, entry.jt);
            Rational expected = binomial_exact(d + k - 1, k);
            rep.check("dimsum " + entry.name + " k=" + std::to_string(k),
                      sum == expected ? 0.0 : 1.0, 0.0);
        }
    }
    // spin factor of dimension 5: d_(m) = dim of degree-m harmonic polynomials
    JordanType spin5(2, 3.0, 0.0);
    for (int m = 1; m <= 10; ++m) {
        long long formula = dim_full_exact(Partition{m}, spin5).as_int();
        long long oracle = laplace_oracle::harmonic_dimension(5, m);
        rep.check("harmonic spin:5 m=" + std::to_string(m),
                  formula == oracle ? 0.0 : 1.0, 0.0);
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 5: Peter-Weyl coefficients, direct vs spectral route
// --------------------------------------------------------------------------

SuiteReport suite_kernel_spectral() {
    SuiteReport rep{"kernel-spectral",
                    "kernel coefficients: moment route vs universal-operator route", true, {}};
    struct Pair {
        std::string name;
        JordanType jt;
        int ell;
    };
    const std::vector<Pair> pairs{
        {"sym:2", JordanType(2, 1.0, 0.0), 1},  {"sym:3", JordanType(3, 1.0, 0.0), 1},
        {"sym:3", JordanType(3, 1.0, 0.0), 2},  {"full:2,3", JordanType(2, 2.0, 1.0), 1},
        {"full:2,3", JordanType(2, 2.0, 1.0), 2}, {"spin:7", JordanType(2, 5.0, 0.0), 1},
        {"asym:5", JordanType(2, 4.0, 2.0), 1}};
    for (const auto& pr : pairs) {
        for (bool flat : {true, false}) {
            KernelSpec spec =
                flat ? KernelSpec::flat(pr.jt, pr.ell, 1.0, 2.7)
                     : KernelSpec::bounded(pr.jt, pr.ell,
                                           KernelSpec::bounded_nu_threshold(pr.jt, pr.ell) + 3.6);
            double worst = 0.0;
            for (int k = 0; k <= 12; ++k) {
                for (const Partition& mu : partitions_of_weight(k, pr.ell)) {
                    LogValue ca = kernel_coeff_direct(spec, mu);
                    LogValue cb = kernel_coeff_spectral(spec, mu);
                    if (ca.sign != cb.sign) worst = std::max(worst, 1.0);
                    worst = std::max(worst, std::fabs(ca.log_abs - cb.log_abs));
                }
            }
            rep.check("coeffs " + pr.name + " ell=" + std::to_string(pr.ell) +
                          (flat ? " flat" : " bounded"),
                      worst, 1e-10);
        }
    }
    // the two full kernel evaluations agree pointwise as well
    {
        JordanType jt(3, 1.0, 0.0);
        KernelSpec spec = KernelSpec::flat(jt, 2, 1.0, 3.0);
        DiagonalPoint t = DiagonalPoint::cone({0.55, 0.2});
        SeriesControl ctl(60, 1e-14, 1e-13);
        SeriesResult direct = kernel_diag(spec, t, ctl);
        SeriesResult spectral = kernel_spectral(spec, t, ctl);
        rep.check("kernel value sym:3 ell=2 flat", rel_gap(direct.value, spectral.value), 1e-10);
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 6: moment formulas vs eigenvalue quadrature
// --------------------------------------------------------------------------

SuiteReport suite_moments() {
    SuiteReport rep{"moments", "Gamma-formula moment ratios vs quadrature", true, {}};
    struct Case {
        std::string label;
        KernelSpec spec;
        double tol;
    };
    JordanType spin5(2, 3.0, 0.0), sym3(3, 1.0, 0.0), ball3(1, 2.0, 2.0),
        full23(2, 2.0, 1.0);
    std::vector<Case> cases;
    cases.push_back({"spin:5 ell=1 flat l=1", KernelSpec::flat(spin5, 1, 1.0, 2.3), 1e-6});
    cases.push_back({"spin:5 ell=1 flat l=2", KernelSpec::flat(spin5, 1, 2.0, 1.6), 1e-6});
    cases.push_back({"sym:3 ell=1 bounded",
                     KernelSpec::bounded(sym3, 1, KernelSpec::bounded_nu_threshold(sym3, 1) + 4.0),
                     1e-6});
    cases.push_back({"ball:3 ell=1 flat", KernelSpec::flat(ball3, 1, 1.0, 3.1), 1e-6});
    cases.push_back({"sym:3 ell=2 flat", KernelSpec::flat(sym3, 2, 1.0, 2.0), 1e-4});
    cases.push_back(
        {"full:2,3 ell=2 bounded",
         KernelSpec::bounded(full23, 2, KernelSpec::bounded_nu_threshold(full23, 2) + 4.5),
         1e-4});
    for (const auto& c : cases) {
        std::vector<Partition> mus;
        if (c.spec.ell == 1) {
            for (int m = 1; m <= 4; ++m) mus.push_back(Partition{m});
        } else {
            mus = {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1},
                   Partition{2, 2}};
        }
        for (const Partition& mu : mus) {
            double formula =
                (moment(c.spec, mu) / moment(c.spec, Partition{})).to_double();
            double quad = moment_quadrature(c.spec, mu);
            rep.check(c.label + " mu=" + mu.to_string(), rel_gap(formula, quad), c.tol);
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 7: large-argument expansion of 1F1
// --------------------------------------------------------------------------

SuiteReport suite_asympt_1f1() {
    SuiteReport rep{"asympt-1f1", "large-argument confluent expansion: error slopes", true, {}};
    struct Case {
        JordanType jt;
        double lambda, beta;
        std::vector<double> that;
    };
    const std::vector<Case> cases{{JordanType(1, 2.0, 0.0), 1.3, 2.1, {1.0}},
                                  {JordanType(2, 1.0, 0.0), 1.7, 2.45, {1.0, 0.65}}};
    const std::vector<double> scales{10, 20, 40, 80};
    for (const auto& c : cases) {
        double g = (log_gindikin_gamma(c.jt.r, c.jt.a, c.lambda) /
                    log_gindikin_gamma(c.jt.r, c.jt.a, c.beta))
                       .to_double();
        std::map<int, std::vector<double>> errors;
        for (double s : scales) {
            std::vector<double> tv(c.that);
            for (double& x : tv) x *= s;
            DiagonalPoint t = DiagonalPoint::cone(tv);
            SeriesControl ctl(900, 1e-300, 1e-15);
            double f11 = hyper_pFq({c.lambda}, {c.beta}, t, c.jt, ctl).value;
            double log_norm = -t.sum();
            for (double x : tv) log_norm += (c.beta - c.lambda) * std::log(x);
            double lhs = g * f11 * std::exp(log_norm);
            for (int k = 0; k <= 2; ++k) {
                double rhs = asympt_1f1_series(c.lambda, c.beta, t, c.jt, k);
                errors[k].push_back(std::fabs(lhs - rhs));
            }
        }
        for (int k = 0; k <= 2; ++k) {
            double slope = loglog_slope(scales, errors[k]);
            std::ostringstream os;
            os << "slope r=" << c.jt.r << " k=" << k;
            rep.check(os.str(), slope, -(k + 0.7));
        }
        // lambda = d/r: the expansion collapses to its leading term
        {
            double dr = c.jt.dim_over_rank();
            double beta = c.beta;
            std::vector<double> tv(c.that);
            for (double& x : tv) x *= 80.0;
            DiagonalPoint t = DiagonalPoint::cone(tv);
            SeriesControl ctl(900, 1e-300, 1e-15);
            double f11 = hyper_pFq({dr}, {beta}, t, c.jt, ctl).value;
            double g0 = (log_gindikin_gamma(c.jt.r, c.jt.a, dr) /
                         log_gindikin_gamma(c.jt.r, c.jt.a, beta))
                            .to_double();
            double log_lead = t.sum();
            for (double x : tv) log_lead += (dr - beta) * std::log(x);
            double ratio = g0 * f11 / std::exp(log_lead);
            rep.check("collapse r=" + std::to_string(c.jt.r), std::fabs(ratio - 1.0), 1e-3);
        }
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 8: large-weight expansion of 2F1
// --------------------------------------------------------------------------

SuiteReport suite_asympt_2f1() {
    SuiteReport rep{"asympt-2f1", "large-weight Gauss expansion: halving and order-1 gain",
                    true, {}};
    struct Case {
        JordanType jt;
        double lambda, beta;
        std::vector<double> y;
    };
    const std::vector<Case> cases{{JordanType(1, 2.0, 0.0), 2.4, 3.1, {0.35}},
                                  {JordanType(2, 1.0, 0.0), 1.8, 2.2, {0.45, 0.28}}};
    const std::vector<double> nus{20, 40, 80, 160};
    for (const auto& c : cases) {
        DiagonalPoint y = DiagonalPoint::bounded(c.y);
        std::vector<double> e0, e1;
        for (double nu : nus) {
            SeriesControl ctl(900, 1e-300, 1e-15);
            SeriesResult f21 = hyper_pFq({c.lambda, nu}, {c.beta}, y, c.jt, ctl);
            LogValue lhs = LogValue::from_double(f21.value) *
                           log_gindikin_gamma(c.jt.r, c.jt.a, c.lambda) *
                           log_gindikin_gamma(c.jt.r, c.jt.a, nu) /
                           log_gindikin_gamma(c.jt.r, c.jt.a, c.beta);
            LogValue rhs0 = asympt_2f1(c.lambda, c.beta, nu, y, c.jt, 0);
            LogValue rhs1 = asympt_2f1(c.lambda, c.beta, nu, y, c.jt, 1);
            e0.push_back(std::fabs((lhs / rhs0).to_double() - 1.0));
            e1.push_back(std::fabs((lhs / rhs1).to_double() - 1.0));
        }
        for (size_t i = 0; i + 1 < nus.size(); ++i) {
            double halving = e0[i + 1] / e0[i];
            std::ostringstream os;
            os << "halving r=" << c.jt.r << " nu=" << nus[i] << "->" << nus[i + 1];
            rep.check(os.str() + " upper", halving, 0.6);
            rep.check(os.str() + " lower", 0.4 - halving, 0.0);
        }
        double c0 = 0.0, c1 = 0.0;
        for (size_t i = 0; i < nus.size(); ++i) {
            c0 = std::max(c0, nus[i] * e0[i]);
            c1 = std::max(c1, nus[i] * e1[i]);
        }
        rep.check("order-1 gain r=" + std::to_string(c.jt.r) + " (5x)", 5.0 * c1 - c0, 0.0);
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 9: rank-one distortion coefficients and the kernel fit
// --------------------------------------------------------------------------

SuiteReport suite_kempf() {
    SuiteReport rep{"kempf", "rank-one distortion expansion: b_0 = 1 and the kernel fit",
                    true, {}};
    // every classified type of genus <= 12
    std::vector<std::pair<std::string, JordanType>> types;
    for (int b = 0; b <= 10; ++b)
        types.emplace_back("ball:" + std::to_string(b + 1), JordanType(1, 2.0, double(b)));
    for (int r = 2; r <= 11; ++r)
        types.emplace_back("sym:" + std::to_string(r), JordanType(r, 1.0, 0.0));
    for (int r = 2; r <= 6; ++r)
        for (int s = r; r + s <= 12; ++s)
            types.emplace_back("full:" + std::to_string(r) + "," + std::to_string(s),
                               JordanType(r, 2.0, double(s - r)));
    for (int n = 4; n <= 7; ++n)
        types.emplace_back("asym:" + std::to_string(n),
                           JordanType(n / 2, 4.0, 2.0 * (n % 2)));
    for (int d = 5; d <= 12; ++d)
        types.emplace_back("spin:" + std::to_string(d), JordanType(2, d - 2.0, 0.0));
    types.emplace_back("exc:16", JordanType(2, 6.0, 4.0));
    for (const auto& [name, jt] : types) {
        long long p = llround(jt.genus());
        if (p > 12) continue;
        for (auto [num, den] : std::vector<std::pair<long long, long long>>{
                 {1, 1}, {2, 3}, {2, 1}}) {
            auto b = rank1_kempf_coeffs(jt, num, den);
            bool exact_one = (b[0] == 1.0);
            rep.check("b0 " + name + " lambda=" + std::to_string(num) + "/" +
                          std::to_string(den),
                      exact_one ? 0.0 : 1.0, 0.0);
        }
    }
    // numerical fit on the spin factor of dimension 6 (p = 6)
    JordanType spin6(2, 4.0, 0.0);
    const double nu = 160.0;
    for (long long lam : {1LL, 2LL}) {
        auto b = rank1_kempf_coeffs(spin6, lam, 1);
        KernelSpec spec = KernelSpec::flat(spin6, 1, double(lam), nu);
        double p1 = spin6.genus() - 1.0;
        double worst = 0.0;
        for (double t = 0.5; t <= 2.01; t += 0.25) {
            SeriesControl ctl(4000, 1e-280, 1e-15);
            SeriesResult k = kernel_diag(spec, DiagonalPoint::cone({t}), ctl);
            double tl = std::pow(t, double(lam));
            double log_n = k.log_value.log_abs - nu * tl - p1 * std::log(nu);
            double normalized = std::exp(log_n);
            double expansion = 0.0;
            for (size_t j = 0; j < b.size(); ++j)
                expansion += b[j] * std::pow(nu * tl, -double(j));
            worst = std::max(worst, std::fabs(normalized - expansion));
        }
        rep.check("fit spin:6 lambda=" + std::to_string(lam), worst, 1e-3);
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 10: bounded distortion leading order
// --------------------------------------------------------------------------

SuiteReport suite_tyz_bounded() {
    SuiteReport rep{"tyz-bounded", "bounded-potential distortion ratio -> 1", true, {}};
    struct Case {
        std::string name;
        JordanType jt;
    };
    const std::vector<Case> cases{{"spin:5", JordanType(2, 3.0, 0.0)},
                                  {"sym:2", JordanType(2, 1.0, 0.0)}};
    const std::vector<double> nus{50, 100, 200};
    const DiagonalPoint t = DiagonalPoint::bounded({0.3});
    for (const auto& c : cases) {
        KernelSpec spec = KernelSpec::bounded(c.jt, 1, nus.front());
        SeriesControl ctl(1600, 1e-280, 1e-14);
        auto rows = tyz_bounded_leading(spec, t, nus, ctl);
        std::vector<double> errs;
        for (const auto& row : rows) {
            errs.push_back(std::fabs(row.ratio - 1.0));
            rep.check(c.name + " |R-1| <= 10/nu at nu=" + std::to_string(int(row.nu)),
                      errs.back(), 10.0 / row.nu);
        }
        double slope = loglog_slope(nus, errs);
        rep.check(c.name + " slope upper", slope, -0.65);
        rep.check(c.name + " slope lower", -1.35 - slope, 0.0);
    }
    // flat analogue: e^{-nu t} K / nu^{d_1} -> 1
    {
        JordanType spin5(2, 3.0, 0.0);
        KernelSpec spec = KernelSpec::flat(spin5, 1, 1.0, nus.front());
        DiagonalPoint tc = DiagonalPoint::cone({0.7});
        SeriesControl ctl(1600, 1e-280, 1e-14);
        auto rows = tyz_bounded_leading(spec, tc, nus, ctl);
        for (const auto& row : rows)
            rep.check("flat spin:5 |R-1| <= 10/nu at nu=" + std::to_string(int(row.nu)),
                      std::fabs(row.ratio - 1.0), 10.0 / row.nu);
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 11: Mittag-Leffler values and asymptotics
// --------------------------------------------------------------------------

SuiteReport suite_mittag_leffler() {
    SuiteReport rep{"mittag-leffler", "series identities and the leading asymptotics", true, {}};
    SeriesControl ctl(400, 1e-300, 1e-16);
    for (double s : {0.5, 2.0, 5.0, 20.0}) {
        double e11 = mittag_leffler(1.0, 1.0, s, ctl).value;
        rep.check("E_{1,1}(" + std::to_string(s) + ") = e^s", rel_gap(e11, std::exp(s)),
                  5e-15);
        double e12 = mittag_leffler(1.0, 2.0, s, ctl).value;
        rep.check("E_{1,2}(" + std::to_string(s) + ") = (e^s-1)/s",
                  rel_gap(e12, (std::exp(s) - 1.0) / s), 1e-13);
    }
    for (double B : {1.0, 1.5}) {
        double series = mittag_leffler(2.0, B, 100.0, ctl).value;
        double lead = mittag_leffler_asympt(2.0, B, 100.0);
        rep.check("asymptotic A=2 B=" + std::to_string(B) + " s=100",
                  std::fabs(lead / series - 1.0), 1e-3);
    }
    return rep;
}

// --------------------------------------------------------------------------
// criterion 12: Pochhammer shift identity (factorization through N(e-x))
// --------------------------------------------------------------------------

SuiteReport suite_pieri() {
    SuiteReport rep{"pieri", "shift identity rows at held-out evaluation points", true, {}};
    struct Case {
        std::string name;
        JordanType jt;
    };
    const std::vector<Case> cases{{"ball:2", JordanType(1, 2.0, 1.0)},
                                  {"full:2,2", JordanType(2, 2.0, 0.0)},
                                  {"sym:3", JordanType(3, 1.0, 0.0)}};
    const double held_out[2] = {7.0 / 3.0, 2.6180339887498949};
    for (const auto& c : cases) {
        double worst = 0.0;
        for (int w = 0; w <= 6; ++w) {
            for (const Partition& nu : partitions_of_weight(w, c.jt.r)) {
                auto row = pieri_row(nu, c.jt);
                for (double g : held_out) {
                    double scale = std::max(
                        1.0, std::fabs(pochhammer_partition_d(g - 1.0, nu, c.jt.a, c.jt.r)));
                    worst = std::max(worst, pieri_residual(nu, row, c.jt, g) / scale);
                }
            }
        }
        rep.check("held-out residual " + c.name, worst, 1e-10);
    }
    return rep;
}

using SuiteFn = SuiteReport (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"gamma-identities", &suite_gamma_identities},
        {"fock", &suite_fock},
        {"binomial", &suite_binomial},
        {"dimsum", &suite_dimsum},
        {"kernel-spectral", &suite_kernel_spectral},
        {"moments", &suite_moments},
        {"asympt-1f1", &suite_asympt_1f1},
        {"asympt-2f1", &suite_asympt_2f1},
        {"kempf", &suite_kempf},
        {"tyz-bounded", &suite_tyz_bounded},
        {"mittag-leffler", &suite_mittag_leffler},
        {"pieri", &suite_pieri}};
    return reg;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteReport run_suite(const std::string& name) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) return fn();
    }
    throw domain_error("unknown verification suite: " + name);
}

std::vector<SuiteReport> run_all() {
    std::vector<SuiteReport> out;
    for (const auto& [name, fn] : registry()) out.push_back(fn());
    return out;
}

} // namespace kepler::verify
